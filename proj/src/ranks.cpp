#include "lcskit/ranks.hpp"

#include "lcskit/relgraph.hpp"

namespace lcskit {

int moebius(int k) {
    if (k < 1 || k > kMaxSeriesDegree)
        throw ResourceError("moebius: k must be in 1.." + std::to_string(kMaxSeriesDegree));
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;  // square factor
        result = -result;
    }
    if (k > 1) result = -result;
    return result;
}

BigInt witt(int k, int n) {
    if (k < 1) throw std::invalid_argument("witt: k must be positive");
    if (k > kMaxSeriesDegree)
        throw ResourceError("witt: k exceeds the bound " + std::to_string(kMaxSeriesDegree));
    if (n < 0) throw std::invalid_argument("witt: n must be non-negative");
    BigInt sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        int mu = moebius(d);
        if (mu == 0) continue;
        BigInt pw = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k / d));
        sum += mu * pw;
    }
    return sum / k;  // exact
}

RankTable phi_formula(const IncidenceData& inc, int max_k, bool assume_decomposable) {
    if (max_k < 1 || max_k > kMaxSeriesDegree)
        throw ResourceError("phi_formula: max_k must be in 1.." +
                            std::to_string(kMaxSeriesDegree));
    if (!assume_decomposable) {
        RelationGraph g = graph_from_incidence(inc);
        if (!is_cycle_separated(g))
            throw HypothesisError(
                "phi_formula: relation graph is not cycle-separated; "
                "pass assume_decomposable to evaluate conjecturally");
    }
    RankTable table;
    table.phi[1] = inc.n;
    auto census = inc.census();
    for (int k = 2; k <= max_k; ++k) {
        BigInt v = 0;
        for (const auto& [size, count] : census)
            if (size >= 3) v += count * witt(k, size - 1);
        table.phi[k] = v;
    }
    return table;
}

BigInt phi2_combinatorial(const IncidenceData& inc) {
    BigInt total = 0;
    for (const auto& s : inc.supports) {
        BigInt m = static_cast<int>(s.size());
        if (m >= 3) total += m * (m - 1) / 2 - m + 1;
    }
    return total;
}

BigInt b2(const IncidenceData& inc) {
    BigInt total = 0;
    for (const auto& s : inc.supports) total += static_cast<int>(s.size()) - 1;
    return total;
}

SeriesCheck lcs_series_check(const IncidenceData& inc, int max_k, bool assume_decomposable) {
    RankTable table = phi_formula(inc, max_k, assume_decomposable);
    const int K = max_k;
    TruncatedSeries lhs = TruncatedSeries::one(K);
    for (const auto& [k, phi] : table.phi) lhs *= TruncatedSeries::one_minus_tk_pow(k, phi, K);

    TruncatedSeries points = TruncatedSeries::one(K);
    for (const auto& s : inc.supports)
        points *= TruncatedSeries::one_minus_linear(static_cast<int>(s.size()) - 1, K);

    BigInt d = inc.n - b2(inc);
    TruncatedSeries rhs = points;
    // Move the (1-t)^(n-b2) factor so that all exponents stay non-negative.
    if (d >= 0)
        rhs *= TruncatedSeries::one_minus_tk_pow(1, d, K);
    else
        lhs *= TruncatedSeries::one_minus_tk_pow(1, -d, K);

    SeriesCheck result;
    result.first_diff = lhs.first_difference(rhs);
    result.ok = result.first_diff == -1;
    return result;
}

}  // namespace lcskit
