#include "lcskit/holonomy.hpp"

#include "lcskit/bareiss.hpp"
#include "lcskit/ranks.hpp"

#include <algorithm>
#include <sstream>

namespace lcskit {

int exact_rank(const std::vector<std::vector<std::int64_t>>& rows) {
    try {
        auto work = rows;
        return bareiss_rank(work);
    } catch (const EliminationOverflow&) {
        std::vector<std::vector<BigInt>> big(rows.size());
        for (size_t i = 0; i < rows.size(); ++i)
            big[i].assign(rows[i].begin(), rows[i].end());
        return bareiss_rank(big);
    }
}

std::vector<Relator> build_relators(const IncidenceData& inc, int n) {
    std::vector<Relator> out;
    for (const auto& s : inc.supports) {
        for (int k : s) {
            Relator r;
            r.support = s;
            r.k = k;
            for (int j : s) {
                if (j == k) continue;
                // [x_k, x_j] = word kj - jk.
                r.coeff[{k, j}] += 1;
                r.coeff[{j, k}] -= 1;
            }
            out.push_back(std::move(r));
        }
    }
    (void)n;
    return out;
}

namespace {

// Per support, relators sum to zero; one of them is redundant.  Dropping the
// last (k = max of support) keeps the span in degree 2, and likewise every
// bracket [rho, x_l] of the dropped relator is minus the sum of the others.
std::vector<Relator> independent_relators(const IncidenceData& inc, int n) {
    auto all = build_relators(inc, n);
    std::vector<Relator> out;
    for (auto& r : all)
        if (r.k != r.support.back()) out.push_back(std::move(r));
    return out;
}

}  // namespace

BigInt holonomy_phi2(const IncidenceData& inc, int n) {
    auto relators = independent_relators(inc, n);
    const size_t cols = static_cast<size_t>(n) * n;
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(relators.size());
    for (const auto& r : relators) {
        std::vector<std::int64_t> row(cols, 0);
        for (const auto& [w, c] : r.coeff)
            row[static_cast<size_t>(w.first - 1) * n + (w.second - 1)] = c;
        rows.push_back(std::move(row));
    }
    int rank = exact_rank(rows);
    return BigInt(n) * (n - 1) / 2 - rank;
}

BigInt holonomy_phi3(const IncidenceData& inc, int n) {
    if (n > kHolonomyMaxGenerators)
        throw ResourceError("holonomy_phi3: generator count " + std::to_string(n) +
                            " exceeds bound " + std::to_string(kHolonomyMaxGenerators));
    auto relators = independent_relators(inc, n);
    const size_t cols = static_cast<size_t>(n) * n * n;
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(relators.size() * n);
    for (const auto& r : relators) {
        for (int l = 1; l <= n; ++l) {
            // [rho, x_l] in the associative algebra: word ab -> abl - lab.
            std::vector<std::int64_t> row(cols, 0);
            for (const auto& [w, c] : r.coeff) {
                auto [a, b] = w;
                size_t abl = ((static_cast<size_t>(a - 1) * n) + (b - 1)) * n + (l - 1);
                size_t lab = ((static_cast<size_t>(l - 1) * n) + (a - 1)) * n + (b - 1);
                row[abl] += c;
                row[lab] -= c;
            }
            rows.push_back(std::move(row));
        }
    }
    int rank = exact_rank(rows);
    return witt(3, n) - rank;
}

HolonomyReport holonomy_report(const IncidenceData& inc, int n) {
    HolonomyReport rep;
    rep.dim_l2 = BigInt(n) * (n - 1) / 2;
    rep.dim_l3 = witt(3, n);
    rep.phi2 = holonomy_phi2(inc, n);
    rep.phi3 = holonomy_phi3(inc, n);
    rep.relator_rank_deg2 = static_cast<int>(rep.dim_l2 - rep.phi2);
    rep.ideal_rank_deg3 = static_cast<int>(rep.dim_l3 - rep.phi3);
    return rep;
}

std::string holonomy_report_text(const HolonomyReport& r) {
    std::ostringstream out;
    out << "phi2_oracle = " << r.phi2 << "\n";
    out << "phi3_oracle = " << r.phi3 << "\n";
    out << "dimL2 = " << r.dim_l2 << "\n";
    out << "dimL3 = " << r.dim_l3 << "\n";
    out << "relator_rank_deg2 = " << r.relator_rank_deg2 << "\n";
    out << "ideal_rank_deg3 = " << r.ideal_rank_deg3 << "\n";
    return out.str();
}

}  // namespace lcskit
