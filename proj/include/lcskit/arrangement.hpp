#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lcskit/incidence.hpp"
#include "lcskit/numeric.hpp"
#include "lcskit/presentation.hpp"
#include "lcskit/relgraph.hpp"

namespace lcskit {

// Affine line a*x + b*y = c with exact rational coefficients, normalized so
// the first nonzero of (a, b) equals 1.
struct RationalLine {
    int label = 0;  // generator index
    Rational a, b, c;

    bool operator==(const RationalLine&) const = default;
};

struct Arrangement {
    std::vector<RationalLine> lines;
};

struct LatticePoint {
    Rational x, y;
    std::vector<int> incident;  // sorted line labels
    int multiplicity() const { return static_cast<int>(incident.size()); }
};

struct IntersectionLattice {
    int n_lines = 0;
    std::vector<LatticePoint> points;  // sorted by (x, y)
};

RationalLine make_line(int label, const Rational& a, const Rational& b, const Rational& c);

// Realizes a cycle-separated relation graph as n labeled rational lines whose
// multiple points match the graph vertices exactly.  Deterministic; verifies
// the lattice census and retries along a bounded parameter schedule.
Arrangement realize(const RelationGraph& g, int n);

// Exact pairwise intersection with coincidence grouping.  Duplicate lines are
// an error; parallel pairs are an error unless allow_parallel is set.
IntersectionLattice lattice(const Arrangement& arr, bool allow_parallel = false);

IncidenceData incidence_of(const IntersectionLattice& lat);

// Graph on the multiple points: a line carrying k >= 2 multiple points
// contributes the k-1 segments between consecutive ones.
RelationGraph fan_graph(const IntersectionLattice& lat);

// Conjugation-free presentation read off the lattice: one relation per
// point, in strict mode (length-2 relations explicit).  Requires the fan
// graph to be a disjoint union of conjugation-free graphs.
Presentation induced_presentation(const IntersectionLattice& lat);

struct RoundTripReport {
    bool graphs_match = false;
    bool census_match = false;
    bool coverage_match = false;
    std::string detail;
    bool ok() const { return graphs_match && census_match && coverage_match; }
};

// realize -> lattice -> fan graph -> induced presentation, checking the
// graph isomorphism, the multiplicity census, and the incidence data against
// the input presentation.
RoundTripReport round_trip_check(const Presentation& p);

// Text format: `line <label> <a> <b> <c>`, rationals as p/q or integers.
std::string write_arrangement(const Arrangement& arr);
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement(const std::string& text);

std::string lattice_report(const IntersectionLattice& lat);

}  // namespace lcskit
