#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcskit/numeric.hpp"
#include "lcskit/presentation.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(LCSKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline lcskit::Presentation fixture(const std::string& name) {
    return lcskit::parse_presentation(fixture_text(name));
}

// Presentation text for a set of multiple supports; pairs come in implicitly.
inline std::string presentation_text(int n, const std::vector<std::vector<int>>& supports) {
    std::ostringstream ss;
    ss << "generators " << n << "\n";
    for (auto s : supports) {
        std::sort(s.begin(), s.end());
        ss << "relation";
        for (int g : s) ss << " " << g;
        ss << "\n";
    }
    return ss.str();
}

// Independent witt-number oracle: count Lyndon words of length k over an
// n-letter alphabet by direct rotation comparison.
inline lcskit::BigInt lyndon_count(int k, int n) {
    if (k == 1) return n;
    std::vector<int> w(k, 0);
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= n;
    lcskit::BigInt count = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = k - 1; i >= 0; --i) {
            w[i] = static_cast<int>(c % n);
            c /= n;
        }
        bool lyndon = true;
        for (int r = 1; r < k && lyndon; ++r) {
            // compare w with its rotation by r
            for (int i = 0; i < k; ++i) {
                int a = w[i], b = w[(i + r) % k];
                if (a != b) {
                    if (a > b) lyndon = false;
                    break;
                }
                if (i == k - 1) lyndon = false;  // periodic word
            }
        }
        if (lyndon) ++count;
    }
    return count;
}

// Random valid cyclic-related incidence: greedily inserts supports whose
// pairs are all still uncovered.  Remaining pairs stay implicit.
inline std::string random_incidence_text(std::mt19937& rng, int n) {
    std::set<std::pair<int, int>> covered;
    std::vector<std::vector<int>> supports;
    std::uniform_int_distribution<int> size_dist(3, std::min(4, n));
    std::uniform_int_distribution<int> gen_dist(1, n);
    int attempts = 40;
    while (attempts-- > 0) {
        int m = size_dist(rng);
        std::set<int> s;
        while (static_cast<int>(s.size()) < m) s.insert(gen_dist(rng));
        std::vector<int> sup(s.begin(), s.end());
        bool ok = true;
        for (size_t i = 0; i < sup.size() && ok; ++i)
            for (size_t j = i + 1; j < sup.size() && ok; ++j)
                if (covered.count({sup[i], sup[j]})) ok = false;
        if (!ok) continue;
        for (size_t i = 0; i < sup.size(); ++i)
            for (size_t j = i + 1; j < sup.size(); ++j)
                covered.insert({sup[i], sup[j]});
        supports.push_back(sup);
    }
    return presentation_text(n, supports);
}

// Random conjugation-free presentation whose relation graph is
// cycle-separated by construction: pick a small graph template, give every
// edge a dedicated shared generator, pad every vertex support with fresh
// generators.  Total generators stay at 10 or below.
inline std::string random_cycle_separated_text(std::mt19937& rng) {
    struct Template {
        int vertices;
        std::vector<std::pair<int, int>> edges;  // 0-based vertex pairs
    };
    static const std::vector<Template> templates = {
        {1, {}},                                           // single point
        {2, {}},                                           // two isolated points
        {2, {{0, 1}}},                                     // one edge
        {3, {{0, 1}, {1, 2}}},                             // path
        {3, {{0, 1}, {1, 2}, {0, 2}}},                     // triangle
        {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},             // 4-cycle
        {4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},             // triangle + pendant
        {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},     // 5-cycle
        {4, {{0, 1}, {2, 3}}},                             // two components
    };
    const Template& t = templates[std::uniform_int_distribution<size_t>(
        0, templates.size() - 1)(rng)];

    int next_gen = 1;
    std::vector<std::vector<int>> supports(t.vertices);
    for (const auto& [u, v] : t.edges) {
        int g = next_gen++;
        supports[u].push_back(g);
        supports[v].push_back(g);
    }
    int budget = 10;
    for (auto& s : supports) {
        int want = std::max(3, static_cast<int>(s.size()) + 1);
        if (std::uniform_int_distribution<int>(0, 1)(rng)) ++want;
        while (static_cast<int>(s.size()) < want) s.push_back(next_gen++);
    }
    if (next_gen - 1 > budget) {
        // Trim pads down to the minimum if a fat draw overflowed.
        next_gen = 1;
        for (auto& s : supports) s.clear();
        for (const auto& [u, v] : t.edges) {
            int g = next_gen++;
            supports[u].push_back(g);
            supports[v].push_back(g);
        }
        for (auto& s : supports)
            while (s.size() < 3) s.push_back(next_gen++);
    }
    int n = next_gen - 1;
    return presentation_text(n, supports);
}

}  // namespace testutil
