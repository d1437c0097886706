#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lcskit/incidence.hpp"
#include "lcskit/numeric.hpp"

namespace lcskit {

inline constexpr int kHolonomyMaxGenerators = 16;

// Degree-2 tensor: sparse vector over two-letter words ab, 1-based letters.
using Word2 = std::pair<int, int>;

// Linearized relator for support S and distinguished index k:
//   sum over j in S, j != k of ([x_k, x_j] expanded as word kj - jk).
struct Relator {
    std::vector<int> support;
    int k = 0;
    std::map<Word2, std::int64_t> coeff;
};

// One relator per (support, k in support), in support order then k ascending.
std::vector<Relator> build_relators(const IncidenceData& inc, int n);

struct HolonomyReport {
    BigInt phi2;
    BigInt phi3;
    BigInt dim_l2;           // C(n, 2)
    BigInt dim_l3;           // witt(3, n) = (n^3 - n) / 3
    int relator_rank_deg2 = 0;
    int ideal_rank_deg3 = 0;
};

// phi_2 = C(n,2) - rank of the degree-2 relators, over exact arithmetic.
BigInt holonomy_phi2(const IncidenceData& inc, int n);

// phi_3 = dim L_3 - rank{ [rho, x_l] : rho relator, l in 1..n }, expansions
// taken in the length-3 word basis.  Rejects n > kHolonomyMaxGenerators.
BigInt holonomy_phi3(const IncidenceData& inc, int n);

HolonomyReport holonomy_report(const IncidenceData& inc, int n);

std::string holonomy_report_text(const HolonomyReport& r);

}  // namespace lcskit
