#include "lcskit/relgraph.hpp"

#include "lcskit/numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace lcskit {

std::vector<std::vector<int>> RelationGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<int> RelationGraph::component_of() const {
    auto adj = adjacency();
    std::vector<int> comp(vertices.size(), -1);
    int c = 0;
    for (size_t s = 0; s < vertices.size(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    return comp;
}

int RelationGraph::component_count() const {
    auto comp = component_of();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

RelationGraph graph_from_incidence(const IncidenceData& inc) {
    RelationGraph g;
    auto multiples = inc.multiple_supports();
    // incidence supports are already sorted; keep canonical vertex order:
    // multiplicity descending, then support lexicographic.
    std::stable_sort(multiples.begin(), multiples.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a < b;
                     });
    for (size_t i = 0; i < multiples.size(); ++i) {
        GraphVertex v;
        v.id = static_cast<int>(i);
        v.relation_id = static_cast<int>(i);
        v.multiplicity = static_cast<int>(multiples[i].size());
        v.support = multiples[i];
        g.vertices.push_back(std::move(v));
    }
    int eid = 0;
    for (size_t a = 0; a < multiples.size(); ++a)
        for (size_t b = a + 1; b < multiples.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(multiples[a].begin(), multiples[a].end(), multiples[b].begin(),
                                  multiples[b].end(), std::back_inserter(common));
            if (common.size() == 1)
                g.edges.push_back(
                    {eid++, common[0], static_cast<int>(a), static_cast<int>(b)});
        }
    return g;
}

RelationGraph build_graph(const Presentation& p) { return graph_from_incidence(incidence_of(p)); }

int betti(const RelationGraph& g) {
    return g.edge_count() - g.vertex_count() + g.component_count();
}

namespace {

// Biconnected blocks as lists of edge ids (iterative Hopcroft-Tarjan).
std::vector<std::vector<int>> blocks(const RelationGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
    for (const auto& e : g.edges) {
        adj[e.u].push_back({e.v, e.id});
        adj[e.v].push_back({e.u, e.id});
    }
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> out;
    int counter = 0;

    struct Frame {
        int v;
        int parent_edge;
        size_t next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Frame> stack{{root, -1}};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, eid] = adj[f.v][f.next++];
                if (eid == f.parent_edge) continue;
                if (num[w] == -1) {
                    edge_stack.push_back(eid);
                    num[w] = low[w] = counter++;
                    stack.push_back({w, eid});
                } else if (num[w] < num[f.v]) {
                    edge_stack.push_back(eid);
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        // u is a cut vertex (or root); pop the block.
                        std::vector<int> block;
                        while (true) {
                            int eid = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(eid);
                            if (eid == pe) break;
                        }
                        out.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return out;
}

std::set<int> block_vertices(const RelationGraph& g, const std::vector<int>& block) {
    std::set<int> vs;
    for (int eid : block) {
        vs.insert(g.edges[eid].u);
        vs.insert(g.edges[eid].v);
    }
    return vs;
}

}  // namespace

bool is_cycle_separated(const RelationGraph& g) {
    auto bs = blocks(g);
    std::vector<int> cycle_blocks_at(g.vertex_count(), 0);
    for (const auto& b : bs) {
        auto vs = block_vertices(g, b);
        if (b.size() == 1) continue;  // bridge
        if (b.size() != vs.size()) return false;  // biconnected but not a simple cycle
        for (int v : vs)
            if (++cycle_blocks_at[v] > 1) return false;
    }
    return true;
}

namespace {

// Degree-<=2 pruning recursion on a vertex subset.
bool cfg_subset(const std::vector<std::vector<int>>& adj, std::vector<char> alive) {
    int n = static_cast<int>(alive.size());
    // Split into components of the alive subgraph and test each.
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (alive[w] && comp[w] == -1) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        int nv = 0, ne = 0;
        std::vector<int> deg(n, 0);
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || comp[v] != c) continue;
            ++nv;
            for (int w : adj[v])
                if (alive[w] && comp[w] == c) ++deg[v], ++ne;
        }
        ne /= 2;
        int beta = ne - nv + 1;
        if (beta <= 1) continue;
        std::vector<char> next(n, 0);
        bool pruned = false;
        for (int v = 0; v < n; ++v)
            if (alive[v] && comp[v] == c) {
                if (deg[v] <= 2)
                    pruned = true;
                else
                    next[v] = 1;
            }
        if (!pruned) return false;
        if (!cfg_subset(adj, next)) return false;
    }
    return true;
}

}  // namespace

bool is_conjugation_free_graph(const RelationGraph& g) {
    return cfg_subset(g.adjacency(), std::vector<char>(g.vertex_count(), 1));
}

ContractedGraph contract(const RelationGraph& g) {
    if (!is_cycle_separated(g))
        throw HypothesisError("contract: graph is not cycle-separated");
    auto bs = blocks(g);
    std::vector<int> node_of(g.vertex_count(), -1);
    std::vector<char> edge_in_cycle(g.edge_count(), 0);
    ContractedGraph out;
    for (const auto& b : bs) {
        if (b.size() < 2) continue;
        ContractedNode node;
        node.cycled = true;
        auto vs = block_vertices(g, b);
        node.members.assign(vs.begin(), vs.end());
        for (int v : node.members) node_of[v] = static_cast<int>(out.nodes.size());
        for (int eid : b) edge_in_cycle[eid] = 1;
        out.nodes.push_back(std::move(node));
    }
    for (const auto& v : g.vertices)
        if (node_of[v.id] == -1) {
            node_of[v.id] = static_cast<int>(out.nodes.size());
            out.nodes.push_back({false, {v.id}});
        }
    for (const auto& e : g.edges)
        if (!edge_in_cycle[e.id]) out.links.push_back({node_of[e.u], node_of[e.v]});
    return out;
}

namespace {

struct IsoState {
    const RelationGraph* g1;
    const RelationGraph* g2;
    std::vector<std::vector<char>> adj1, adj2;
    std::vector<int> deg1, deg2;
    std::vector<int> order;    // g1 vertices, high degree first
    std::vector<int> mapping;  // g1 id -> g2 id or -1
    std::vector<char> used;    // g2 id taken

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int v1 = order[pos];
        for (int v2 = 0; v2 < g2->vertex_count(); ++v2) {
            if (used[v2]) continue;
            if (g1->vertices[v1].multiplicity != g2->vertices[v2].multiplicity) continue;
            if (deg1[v1] != deg2[v2]) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int u1 = order[q];
                if (adj1[v1][u1] != adj2[v2][mapping[u1]]) ok = false;
            }
            if (!ok) continue;
            mapping[v1] = v2;
            used[v2] = 1;
            if (extend(pos + 1)) return true;
            mapping[v1] = -1;
            used[v2] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const RelationGraph& g1,
                                                  const RelationGraph& g2) {
    int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    IsoState st;
    st.g1 = &g1;
    st.g2 = &g2;
    st.adj1.assign(n, std::vector<char>(n, 0));
    st.adj2.assign(n, std::vector<char>(n, 0));
    st.deg1.assign(n, 0);
    st.deg2.assign(n, 0);
    for (const auto& e : g1.edges) {
        st.adj1[e.u][e.v] = st.adj1[e.v][e.u] = 1;
        ++st.deg1[e.u], ++st.deg1[e.v];
    }
    for (const auto& e : g2.edges) {
        st.adj2[e.u][e.v] = st.adj2[e.v][e.u] = 1;
        ++st.deg2[e.u], ++st.deg2[e.v];
    }
    // Invariant precheck: matching (multiplicity, degree) multisets.
    auto sig = [](const RelationGraph& g, const std::vector<int>& deg) {
        std::multiset<std::pair<int, int>> s;
        for (const auto& v : g.vertices) s.insert({v.multiplicity, deg[v.id]});
        return s;
    };
    if (sig(g1, st.deg1) != sig(g2, st.deg2)) return std::nullopt;
    st.order.resize(n);
    for (int i = 0; i < n; ++i) st.order[i] = i;
    std::sort(st.order.begin(), st.order.end(),
              [&](int a, int b) { return st.deg1[a] > st.deg1[b]; });
    st.mapping.assign(n, -1);
    st.used.assign(n, 0);
    if (st.extend(0)) return st.mapping;
    return std::nullopt;
}

std::string graph_report(const RelationGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices) {
        out << "vertex " << v.id << " mult=" << v.multiplicity << " support=";
        for (size_t i = 0; i < v.support.size(); ++i) out << (i ? "," : "") << v.support[i];
        out << "\n";
    }
    for (const auto& e : g.edges)
        out << "edge " << e.id << " gen=" << e.generator << " " << e.u << "-" << e.v << "\n";
    out << "beta=" << betti(g) << " cycle_separated=" << (is_cycle_separated(g) ? "true" : "false")
        << " cf_graph=" << (is_conjugation_free_graph(g) ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace lcskit
