#include "lcskit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace lcskit {

namespace {

using Point = std::pair<Rational, Rational>;

std::optional<Point> intersect(const RationalLine& p, const RationalLine& q) {
    Rational det = p.a * q.b - q.a * p.b;
    if (det == 0) return std::nullopt;
    Rational x = (p.c * q.b - q.c * p.b) / det;
    Rational y = (p.a * q.c - q.a * p.c) / det;
    return Point{x, y};
}

bool contains(const RationalLine& l, const Point& pt) {
    return l.a * pt.first + l.b * pt.second == l.c;
}

// Non-vertical line through `pt` with slope `s`:  -s*x + y = pt.y - s*pt.x.
RationalLine through_with_slope(int label, const Point& pt, const Rational& s) {
    return make_line(label, -s, 1, pt.second - s * pt.first);
}

Rational slope(const RationalLine& l) {
    // All constructed lines are non-vertical.
    return -l.a / l.b;
}

std::vector<Point> all_intersections(const std::vector<RationalLine>& lines) {
    std::vector<Point> pts;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (auto pt = intersect(lines[i], lines[j])) pts.push_back(*pt);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// One realization attempt for a given schedule round; nullopt to retry.
std::optional<Arrangement> realize_round(const RelationGraph& g, int n, int round) {
    const int m = g.vertex_count();

    // Base x-coordinates: a greedy Sidon set (all pairwise sums distinct),
    // placed on the parabola y = x^2 so no three points are collinear and no
    // two chords are parallel.
    std::vector<long long> base;
    std::set<long long> sums;
    long long candidate = round;
    while (static_cast<int>(base.size()) < m) {
        bool ok = true;
        for (long long b : base)
            if (sums.count(b + candidate)) {
                ok = false;
                break;
            }
        if (ok) {
            for (long long b : base) sums.insert(b + candidate);
            base.push_back(candidate);
        }
        ++candidate;
    }
    std::vector<Point> vertex_pt(m);
    for (int v = 0; v < m; ++v)
        vertex_pt[v] = {Rational(base[v]), Rational(base[v]) * Rational(base[v])};

    std::vector<RationalLine> lines;
    std::set<Rational> used_slopes;
    std::vector<char> have_line(n + 1, 0);

    // Extend the graph edges to full lines (parabola chords).
    for (const auto& e : g.edges) {
        Rational au(base[e.u]), av(base[e.v]);
        RationalLine l = make_line(e.generator, -(au + av), 1, -(au * av));
        lines.push_back(l);
        used_slopes.insert(slope(l));
        have_line[e.generator] = 1;
    }

    // Chords may only be concurrent at the designated vertex points.
    {
        std::map<Point, int> hits;
        for (size_t i = 0; i < lines.size(); ++i)
            for (size_t j = i + 1; j < lines.size(); ++j)
                if (auto pt = intersect(lines[i], lines[j])) ++hits[*pt];
        std::set<Point> designated(vertex_pt.begin(), vertex_pt.end());
        for (const auto& [pt, cnt] : hits)
            if (cnt > 1 && !designated.count(pt)) return std::nullopt;
    }

    auto add_through = [&](int label, const Point& pivot, int pivot_vertex) {
        auto pts = all_intersections(lines);
        long long s = 0;
        while (true) {
            Rational sr(s);
            ++s;
            if (used_slopes.count(sr)) continue;
            RationalLine l = through_with_slope(label, pivot, sr);
            bool ok = true;
            for (const auto& pt : pts)
                if (pt != pivot && contains(l, pt)) {
                    ok = false;
                    break;
                }
            for (int w = 0; ok && w < m; ++w)
                if (w != pivot_vertex && contains(l, vertex_pt[w])) ok = false;
            if (!ok) continue;
            lines.push_back(l);
            used_slopes.insert(sr);
            have_line[label] = 1;
            return;
        }
    };

    // Remaining lines of each multiple point: fresh slopes through it.
    for (const auto& v : g.vertices)
        for (int gen : v.support)
            if (!have_line[gen]) add_through(gen, vertex_pt[v.id], v.id);

    // Generators outside every multiple relation: lines through no existing
    // intersection point at all.
    for (int gen = 1; gen <= n; ++gen) {
        if (have_line[gen]) continue;
        auto pts = all_intersections(lines);
        for (int w = 0; w < m; ++w) pts.push_back(vertex_pt[w]);
        long long s = 0;
        Rational sr;
        while (true) {
            sr = Rational(s);
            ++s;
            if (!used_slopes.count(sr)) break;
        }
        std::set<Rational> bad;
        for (const auto& pt : pts) bad.insert(pt.second - sr * pt.first);
        long long c = 0;
        while (bad.count(Rational(c))) ++c;
        lines.push_back(through_with_slope(gen, {Rational(0), Rational(c)}, sr));
        used_slopes.insert(sr);
        have_line[gen] = 1;
    }

    Arrangement arr{std::move(lines)};

    // Census verification: every graph vertex is a multiple point with
    // exactly its support, and nothing else is multiple.
    IntersectionLattice lat = lattice(arr);
    std::map<Point, std::vector<int>> multiples;
    for (const auto& pt : lat.points)
        if (pt.multiplicity() >= 3) multiples[{pt.x, pt.y}] = pt.incident;
    if (static_cast<int>(multiples.size()) != m) return std::nullopt;
    for (const auto& v : g.vertices) {
        auto it = multiples.find(vertex_pt[v.id]);
        if (it == multiples.end() || it->second != v.support) return std::nullopt;
    }
    return arr;
}

}  // namespace

RationalLine make_line(int label, const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 && b == 0) throw std::invalid_argument("line with (a, b) = (0, 0)");
    Rational scale = a != 0 ? a : b;
    return RationalLine{label, a / scale, b / scale, c / scale};
}

Arrangement realize(const RelationGraph& g, int n) {
    if (!is_cycle_separated(g))
        throw HypothesisError("realize: relation graph is not cycle-separated");
    std::map<int, int> edges_per_generator;
    for (const auto& e : g.edges)
        if (++edges_per_generator[e.generator] > 1)
            throw HypothesisError("realize: generator " + std::to_string(e.generator) +
                                  " labels more than one edge");
    int max_gen = 0;
    for (const auto& v : g.vertices)
        for (int gen : v.support) max_gen = std::max(max_gen, gen);
    if (max_gen > n)
        throw std::invalid_argument("realize: supports reference generator beyond n");

    constexpr int kMaxRounds = 16;
    for (int round = 0; round < kMaxRounds; ++round)
        if (auto arr = realize_round(g, n, round)) return *arr;
    throw std::runtime_error("realize: perturbation schedule exhausted without a valid census");
}

IntersectionLattice lattice(const Arrangement& arr, bool allow_parallel) {
    std::set<int> seen_labels;
    for (const auto& l : arr.lines)
        if (!seen_labels.insert(l.label).second)
            throw std::invalid_argument("lattice: duplicate line label " +
                                        std::to_string(l.label));
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t j = i + 1; j < arr.lines.size(); ++j) {
            const auto& p = arr.lines[i];
            const auto& q = arr.lines[j];
            if (p.a == q.a && p.b == q.b && p.c == q.c)
                throw std::invalid_argument("lattice: duplicate line (labels " +
                                            std::to_string(p.label) + ", " +
                                            std::to_string(q.label) + ")");
        }

    std::map<Point, std::set<int>> groups;
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t j = i + 1; j < arr.lines.size(); ++j) {
            auto pt = intersect(arr.lines[i], arr.lines[j]);
            if (!pt) {
                if (!allow_parallel)
                    throw std::invalid_argument(
                        "lattice: parallel lines (labels " +
                        std::to_string(arr.lines[i].label) + ", " +
                        std::to_string(arr.lines[j].label) + ")");
                continue;
            }
            groups[*pt].insert(arr.lines[i].label);
            groups[*pt].insert(arr.lines[j].label);
        }

    IntersectionLattice lat;
    lat.n_lines = static_cast<int>(arr.lines.size());
    for (const auto& [pt, labels] : groups) {
        LatticePoint lp;
        lp.x = pt.first;
        lp.y = pt.second;
        lp.incident.assign(labels.begin(), labels.end());
        lat.points.push_back(std::move(lp));
    }
    return lat;
}

IncidenceData incidence_of(const IntersectionLattice& lat) {
    IncidenceData inc;
    inc.n = lat.n_lines;
    for (const auto& pt : lat.points) {
        inc.supports.push_back(pt.incident);
        if (!pt.incident.empty()) inc.n = std::max(inc.n, pt.incident.back());
    }
    std::sort(inc.supports.begin(), inc.supports.end());
    return inc;
}

RelationGraph fan_graph(const IntersectionLattice& lat) {
    RelationGraph g;
    std::map<int, std::vector<size_t>> line_to_points;  // label -> lattice point index
    std::vector<int> vertex_of(lat.points.size(), -1);
    for (size_t i = 0; i < lat.points.size(); ++i) {
        const auto& pt = lat.points[i];
        if (pt.multiplicity() < 3) continue;
        GraphVertex v;
        v.id = g.vertex_count();
        v.relation_id = v.id;
        v.multiplicity = pt.multiplicity();
        v.support = pt.incident;
        vertex_of[i] = v.id;
        g.vertices.push_back(std::move(v));
        for (int label : pt.incident) line_to_points[label].push_back(i);
    }
    int eid = 0;
    for (auto& [label, idxs] : line_to_points) {
        if (idxs.size() < 2) continue;
        // Order the multiple points along the line.
        std::sort(idxs.begin(), idxs.end(), [&](size_t a, size_t b) {
            const auto& pa = lat.points[a];
            const auto& pb = lat.points[b];
            if (pa.x != pb.x) return pa.x < pb.x;
            return pa.y < pb.y;  // vertical line
        });
        for (size_t k = 0; k + 1 < idxs.size(); ++k) {
            int u = vertex_of[idxs[k]];
            int v = vertex_of[idxs[k + 1]];
            g.edges.push_back({eid++, label, std::min(u, v), std::max(u, v)});
        }
    }
    return g;
}

Presentation induced_presentation(const IntersectionLattice& lat) {
    RelationGraph fan = fan_graph(lat);
    if (!is_conjugation_free_graph(fan))
        throw HypothesisError(
            "induced_presentation: the multiple-point graph is not a disjoint union of "
            "conjugation-free graphs, so the lattice does not determine the presentation");
    Presentation p;
    p.n = incidence_of(lat).n;
    p.strict = true;
    for (const auto& pt : lat.points) {
        CyclicRelation r;
        r.support = pt.incident;
        r.conjugators.assign(r.support.size(), Word{});
        p.relations.push_back(std::move(r));
    }
    canonicalize(p);
    return p;
}

RoundTripReport round_trip_check(const Presentation& p) {
    if (!validate(p).ok()) throw HypothesisError("round_trip_check: invalid presentation");
    if (!is_conjugation_free(p))
        throw HypothesisError("round_trip_check: presentation is not conjugation-free");
    RelationGraph g = build_graph(p);
    if (!is_cycle_separated(g))
        throw HypothesisError("round_trip_check: relation graph is not cycle-separated");

    Arrangement arr = realize(g, p.n);
    IntersectionLattice lat = lattice(arr);
    RelationGraph fan = fan_graph(lat);

    RoundTripReport rep;
    std::ostringstream detail;

    rep.graphs_match = graphs_isomorphic(g, fan).has_value();
    if (!rep.graphs_match) detail << "fan graph not isomorphic to input graph; ";

    IncidenceData inc_in = incidence_of(p);
    IncidenceData inc_out = incidence_of(induced_presentation(lat));
    rep.census_match = inc_in.census() == inc_out.census();
    if (!rep.census_match) detail << "multiplicity census mismatch; ";

    BigInt pair_sum = 0;
    for (const auto& s : inc_out.supports) {
        BigInt sz = static_cast<int>(s.size());
        pair_sum += sz * (sz - 1) / 2;
    }
    rep.coverage_match = inc_in == inc_out && pair_sum == BigInt(p.n) * (p.n - 1) / 2;
    if (!rep.coverage_match) detail << "incidence/pair-coverage mismatch; ";

    rep.detail = detail.str();
    return rep;
}

std::string write_arrangement(const Arrangement& arr) {
    std::ostringstream out;
    for (const auto& l : arr.lines)
        out << "line " << l.label << " " << l.a << " " << l.b << " " << l.c << "\n";
    return out.str();
}

Arrangement parse_arrangement(std::istream& in) {
    Arrangement arr;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw != "line")
            throw ParseError(lineno, 1, "expected 'line', got '" + kw + "'");
        int label;
        std::string as, bs, cs;
        if (!(ls >> label >> as >> bs >> cs))
            throw ParseError(lineno, 1, "usage: line <label> <a> <b> <c>");
        try {
            arr.lines.push_back(make_line(label, Rational(as), Rational(bs), Rational(cs)));
        } catch (const std::exception& e) {
            throw ParseError(lineno, 1, e.what());
        }
    }
    return arr;
}

Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    return parse_arrangement(in);
}

std::string lattice_report(const IntersectionLattice& lat) {
    std::ostringstream out;
    for (const auto& pt : lat.points) {
        out << "point (" << pt.x << "," << pt.y << ") mult=" << pt.multiplicity() << " lines=";
        for (size_t i = 0; i < pt.incident.size(); ++i)
            out << (i ? "," : "") << pt.incident[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace lcskit
