#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcskit/incidence.hpp"
#include "lcskit/presentation.hpp"

namespace lcskit {

struct GraphVertex {
    int id = 0;            // dense, 0-based
    int relation_id = 0;   // index of the source relation (canonical order)
    int multiplicity = 3;  // length of the relation / point multiplicity
    std::vector<int> support;
};

struct GraphEdge {
    int id = 0;
    int generator = 0;  // shared generator index
    int u = 0, v = 0;   // endpoint vertex ids, u < v
};

// The graph of a cyclic-related presentation: one vertex per multiple
// relation, an edge whenever two supports share exactly one generator.
struct RelationGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<std::vector<int>> adjacency() const;  // neighbor vertex ids
    std::vector<int> component_of() const;            // vertex id -> component id
    int component_count() const;
};

struct ContractedNode {
    bool cycled = false;          // collapsed cycle vs ordinary vertex
    std::vector<int> members;     // constituent vertex ids of the input graph
};

struct ContractedGraph {
    std::vector<ContractedNode> nodes;
    std::vector<std::pair<int, int>> links;  // node index pairs
};

RelationGraph build_graph(const Presentation& p);
RelationGraph graph_from_incidence(const IncidenceData& inc);

// |E| - |V| + number of connected components.
int betti(const RelationGraph& g);

// True iff every block is a single edge or a simple cycle and no vertex lies
// on two cycle blocks; equivalently the contraction is a forest.
bool is_cycle_separated(const RelationGraph& g);

// Recursive degree-<=2 pruning test; components are handled independently.
// False when beta > 1 and no vertex of degree <= 2 remains.
bool is_conjugation_free_graph(const RelationGraph& g);

// Collapses every cycle to a single node.  Requires is_cycle_separated(g).
ContractedGraph contract(const RelationGraph& g);

// Multiplicity-label-preserving graph isomorphism; returns the vertex mapping
// g1 -> g2 when one exists.  Edge generator labels are not compared.
std::optional<std::vector<int>> graphs_isomorphic(const RelationGraph& g1,
                                                  const RelationGraph& g2);

std::string graph_report(const RelationGraph& g);

}  // namespace lcskit
