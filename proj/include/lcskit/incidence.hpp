#pragma once

#include <map>
#include <vector>

namespace lcskit {

// Multiset of relation (or intersection-point) supports.  Each support is a
// strictly increasing list of generator indices in 1..n.  This is the shared
// input of the rank formulas and the holonomy oracle.
struct IncidenceData {
    int n = 0;
    std::vector<std::vector<int>> supports;

    // n_i: number of supports of size i.
    std::map<int, int> census() const {
        std::map<int, int> c;
        for (const auto& s : supports) ++c[static_cast<int>(s.size())];
        return c;
    }

    std::vector<std::vector<int>> multiple_supports() const {
        std::vector<std::vector<int>> out;
        for (const auto& s : supports)
            if (s.size() >= 3) out.push_back(s);
        return out;
    }

    bool operator==(const IncidenceData&) const = default;
};

}  // namespace lcskit
