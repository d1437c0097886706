#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lcskit/bareiss.hpp"
#include "lcskit/holonomy.hpp"
#include "lcskit/ranks.hpp"

using namespace lcskit;

TEST_CASE("fraction-free rank on small integer matrices") {
    std::vector<std::vector<std::int64_t>> id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(exact_rank(id3) == 3);
    std::vector<std::vector<std::int64_t>> singular = {{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(exact_rank(singular) == 2);
    std::vector<std::vector<std::int64_t>> zero = {{0, 0}, {0, 0}};
    CHECK(exact_rank(zero) == 0);
    std::vector<std::vector<std::int64_t>> wide = {{0, 1, 5}, {0, 2, 10}};
    CHECK(exact_rank(wide) == 1);
}

TEST_CASE("rank survives entries that overflow int64 products") {
    // Huge entries force the multiprecision fallback path.
    const std::int64_t big = INT64_C(4'000'000'000'000'000'000);
    std::vector<std::vector<std::int64_t>> m = {{big, 1, 0}, {1, big, 1}, {0, 1, big}};
    CHECK(exact_rank(m) == 3);
    std::vector<std::vector<std::int64_t>> dep = {{big, big}, {big, big}};
    CHECK(exact_rank(dep) == 1);
}

TEST_CASE("one relator per support is linearly redundant") {
    auto inc = incidence_of(testutil::fixture("triangle7.txt"));
    auto all = build_relators(inc, 7);
    // Within each support the relators over all distinguished k sum to zero.
    std::map<std::vector<int>, std::map<Word2, std::int64_t>> sums;
    for (const auto& r : all)
        for (const auto& [w, c] : r.coeff) sums[r.support][w] += c;
    for (const auto& [sup, s] : sums)
        for (const auto& [w, c] : s) CHECK(c == 0);
}

TEST_CASE("degree-2 oracle equals the free value with no multiple relations") {
    auto inc = incidence_of(testutil::fixture("generic4.txt"));
    // All relations are commutators, so the relators kill everything: the
    // group is abelian up to degree 2 in each pair, phi2 = 0.
    CHECK(holonomy_phi2(inc, 4) == 0);
    CHECK(holonomy_phi3(inc, 4) == 0);
}

TEST_CASE("oracle matches the closed formula on cycle-separated fixtures") {
    for (const char* name : {"triangle7.txt", "cycle6.txt", "pencil4.txt"}) {
        auto p = testutil::fixture(name);
        auto inc = incidence_of(p);
        auto t = phi_formula(inc, 3);
        CHECK_MESSAGE(holonomy_phi2(inc, p.n) == t.phi[2], name);
        CHECK_MESSAGE(holonomy_phi3(inc, p.n) == t.phi[3], name);
    }
}

TEST_CASE("oracle exposes the degree-3 gap on the braid section fixture") {
    auto p = testutil::fixture("braid_section6.txt");
    auto inc = incidence_of(p);
    auto t = phi_formula(inc, 3, /*assume_decomposable=*/true);
    CHECK(holonomy_phi2(inc, p.n) == t.phi[2]);
    CHECK(holonomy_phi2(inc, p.n) == 4);
    CHECK(t.phi[3] == 8);
    CHECK(holonomy_phi3(inc, p.n) == 10);
}

TEST_CASE("pencil oracle values for all sizes up to seven") {
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        auto p = parse_presentation(testutil::presentation_text(n, {all}));
        auto inc = incidence_of(p);
        CHECK(holonomy_phi2(inc, n) == witt(2, n - 1));
        CHECK(holonomy_phi3(inc, n) == witt(3, n - 1));
    }
}

TEST_CASE("degree-3 oracle rejects too many generators") {
    IncidenceData inc;
    inc.n = 17;
    CHECK_THROWS_AS(holonomy_phi3(inc, 17), ResourceError);
}

TEST_CASE("report text carries the dimension bookkeeping") {
    auto p = testutil::fixture("cycle6.txt");
    auto rep = holonomy_report(incidence_of(p), p.n);
    CHECK(rep.dim_l2 == 15);
    CHECK(rep.dim_l3 == 70);
    CHECK(rep.phi2 == rep.dim_l2 - rep.relator_rank_deg2);
    CHECK(rep.phi3 == rep.dim_l3 - rep.ideal_rank_deg3);
    auto text = holonomy_report_text(rep);
    CHECK(text.find("phi2_oracle") != std::string::npos);
    CHECK(text.find("phi3_oracle") != std::string::npos);
}
