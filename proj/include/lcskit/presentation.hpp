#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcskit/incidence.hpp"

namespace lcskit {

// One letter of a word in the free group: generator index and exponent sign.
struct Letter {
    int index = 0;  // 1..n
    int sign = 1;   // +1 or -1

    bool operator==(const Letter&) const = default;
};

struct Word {
    std::vector<Letter> letters;  // empty = identity

    bool is_identity() const { return letters.empty(); }
    bool operator==(const Word&) const = default;
};

// A cyclic relation: equality of all cyclic rotations of the product of the
// (possibly conjugated) support generators.  conjugators[j] conjugates the
// j-th support generator.
struct CyclicRelation {
    std::vector<int> support;      // strictly increasing, length >= 2
    std::vector<Word> conjugators;  // same length as support

    int length() const { return static_cast<int>(support.size()); }
    bool is_multiple() const { return length() >= 3; }
    bool conjugation_free() const {
        for (const auto& w : conjugators)
            if (!w.is_identity()) return false;
        return true;
    }
    bool operator==(const CyclicRelation&) const = default;
};

struct Presentation {
    int n = 0;
    std::vector<CyclicRelation> relations;
    bool strict = false;  // explicit total pair coverage required

    bool operator==(const Presentation&) const = default;
};

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Parses the line-oriented presentation format.  In the default (implicit)
// mode every generator pair not covered by a listed relation is materialized
// as a length-2 conjugation-free relation.  Relations come out in canonical
// order: length descending, then support lexicographic.
Presentation parse_presentation(std::istream& in, bool force_strict = false);
Presentation parse_presentation(const std::string& text, bool force_strict = false);

// Canonical serialization; parse(serialize(p)) == p.
std::string serialize(const Presentation& p);

// Sorts relations into canonical order in place.
void canonicalize(Presentation& p);

// Checks the three cyclic-related requirements: increasing supports, unique
// pair coverage, pairwise support overlap at most one.
ValidationReport validate(const Presentation& p);

bool is_conjugation_free(const Presentation& p);

// Support multiset of a valid presentation, sorted lexicographically.
IncidenceData incidence_of(const Presentation& p);

}  // namespace lcskit
