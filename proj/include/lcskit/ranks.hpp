#pragma once

#include <map>

#include "lcskit/incidence.hpp"
#include "lcskit/numeric.hpp"
#include "lcskit/series.hpp"

namespace lcskit {

inline constexpr int kMaxSeriesDegree = 64;

// Moebius function by trial factorization; k in 1..64.
int moebius(int k);

// Rank of the degree-k part of the free Lie algebra on n generators:
// (1/k) * sum over d | k of mu(d) * n^(k/d).
BigInt witt(int k, int n);

struct RankTable {
    std::map<int, BigInt> phi;  // k -> rank, k = 1..K
};

// phi[k] = sum over multiple supports of size i of witt(k, i-1), k >= 2;
// phi[1] = n.  Requires a cycle-separated relation graph unless
// assume_decomposable is set, in which case the values are conjectural.
RankTable phi_formula(const IncidenceData& inc, int max_k, bool assume_decomposable = false);

// Independent-commutator count: sum over multiple supports of
// C(m,2) - m + 1.  Valid for every cyclic-related incidence.
BigInt phi2_combinatorial(const IncidenceData& inc);

// Second Betti number of the complement: sum over all supports of (size - 1).
// Requires total pair coverage (length-2 supports included).
BigInt b2(const IncidenceData& inc);

struct SeriesCheck {
    bool ok = false;
    int first_diff = -1;  // first differing coefficient degree on failure
};

// Truncated-series identity
//   prod (1-t^k)^phi_k = (1-t)^(n-b2) * prod over supports (1-(m-1)t),
// compared after cross-multiplying the (1-t) power to whichever side keeps
// exponents non-negative.
SeriesCheck lcs_series_check(const IncidenceData& inc, int max_k,
                             bool assume_decomposable = false);

}  // namespace lcskit
