#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lcskit/ranks.hpp"
#include "lcskit/relgraph.hpp"
#include "lcskit/series.hpp"

using namespace lcskit;

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK_THROWS_AS(moebius(65), ResourceError);
}

TEST_CASE("witt numbers against the Lyndon word count") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 6; ++k) CHECK(witt(k, n) == testutil::lyndon_count(k, n));
    CHECK(witt(2, 5) == 10);  // C(5, 2)
    CHECK(witt(3, 2) == 2);
    CHECK(witt(3, 3) == 8);
}

TEST_CASE("witt is exact for large arguments") {
    // k = 11 prime: (n^11 - n) / 11.
    BigInt n = 10;
    BigInt direct = 1;
    for (int i = 0; i < 11; ++i) direct *= n;
    CHECK(witt(11, 10) == (direct - n) / 11);
}

TEST_CASE("rank formula on the three-triangle fixture") {
    auto inc = incidence_of(testutil::fixture("triangle7.txt"));
    auto t = phi_formula(inc, 5);
    CHECK(t.phi[1] == 7);
    CHECK(t.phi[2] == 3);
    CHECK(t.phi[3] == 6);
    CHECK(t.phi[4] == 9);
    CHECK(t.phi[5] == 18);
    CHECK(b2(inc) == 18);
}

TEST_CASE("rank formula on pencils reduces to one witt number") {
    for (int n = 3; n <= 7; ++n) {
        auto p = parse_presentation(testutil::presentation_text(n, {[&] {
            std::vector<int> all;
            for (int i = 1; i <= n; ++i) all.push_back(i);
            return all;
        }()}));
        auto t = phi_formula(incidence_of(p), 6);
        CHECK(t.phi[1] == n);
        for (int k = 2; k <= 6; ++k) CHECK(t.phi[k] == witt(k, n - 1));
    }
}

TEST_CASE("formula refuses non-cycle-separated input unless told otherwise") {
    auto inc = incidence_of(testutil::fixture("braid_section6.txt"));
    CHECK_THROWS_AS(phi_formula(inc, 4), HypothesisError);
    auto t = phi_formula(inc, 3, /*assume_decomposable=*/true);
    CHECK(t.phi[2] == 4);
    CHECK(t.phi[3] == 8);
}

TEST_CASE("independent commutator count matches the witt value at degree 2") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto p = parse_presentation(testutil::random_incidence_text(rng, n));
        REQUIRE(validate(p).ok());
        auto inc = incidence_of(p);
        BigInt expect = 0;
        for (const auto& s : inc.multiple_supports()) {
            int m = static_cast<int>(s.size());
            expect += BigInt(m) * (m - 1) / 2 - m + 1;
        }
        CHECK(phi2_combinatorial(inc) == expect);
    }
}

TEST_CASE("series identity holds for every shipped fixture") {
    for (const char* name : {"triangle7.txt", "conjugated6.txt", "cycle6.txt", "pencil4.txt",
                             "generic4.txt"}) {
        auto inc = incidence_of(testutil::fixture(name));
        auto chk = lcs_series_check(inc, 8);
        CHECK_MESSAGE(chk.ok, name);
        CHECK(chk.first_diff == -1);
    }
    auto inc = incidence_of(testutil::fixture("braid_section6.txt"));
    CHECK(lcs_series_check(inc, 8, true).ok);
}

TEST_CASE("series identity detects a perturbed rank table") {
    // Recompute both sides with phi[3] off by one; the check must report the
    // first differing degree.
    auto inc = incidence_of(testutil::fixture("pencil4.txt"));
    auto good = phi_formula(inc, 8);
    TruncatedSeries lhs = TruncatedSeries::one(8);
    for (const auto& [k, e] : good.phi)
        lhs *= TruncatedSeries::one_minus_tk_pow(k, e + (k == 3 ? 1 : 0), 8);
    TruncatedSeries rhs = TruncatedSeries::one(8);
    for (const auto& s : inc.supports)
        rhs *= TruncatedSeries::one_minus_linear(static_cast<int>(s.size()) - 1, 8);
    // n - b2 = 4 - 3 = 1 here, multiply into rhs.
    rhs *= TruncatedSeries::one_minus_tk_pow(1, 1, 8);
    CHECK_FALSE(lhs == rhs);
    CHECK(lhs.first_difference(rhs) == 3);
}

TEST_CASE("truncated series arithmetic") {
    auto a = TruncatedSeries::one_minus_linear(2, 6);  // 1 - 2t
    auto sq = a * a;                                   // 1 - 4t + 4t^2
    CHECK(sq[0] == 1);
    CHECK(sq[1] == -4);
    CHECK(sq[2] == 4);
    auto p = TruncatedSeries::one_minus_tk_pow(2, 3, 7);  // (1 - t^2)^3
    CHECK(p[2] == -3);
    CHECK(p[4] == 3);
    CHECK(p[6] == -1);
}
