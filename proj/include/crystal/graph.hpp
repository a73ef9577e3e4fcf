#pragma once

#include <set>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/node.hpp"

namespace crystal {

struct GraphNode {
    CrystalNode state;
    std::vector<int> eps;  // indexed by color - min_color
    std::vector<int> phi;
    bool interior = true;
    std::string id;  // canonical-form hash, hex, lowercase
};

struct GraphEdge {
    int src;
    int color;
    int dst;
    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Truncated highest weight crystal graph.  Every node of depth <=
// depth_limit is present; nodes at depth == depth_limit are the frontier
// (interior == false) and their out-arrows are not generated.  In-arrows
// are complete for every node.
class CrystalGraph {
public:
    RootSystemType type;
    WeightVector lambda;
    int depth_limit = 0;
    int highest_idx = 0;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    explicit CrystalGraph(const RootSystemType& t) : type(t) {}

    int node_count() const { return static_cast<int>(nodes.size()); }
    int color_index(int color) const { return color - type.min_color(); }

    // Adjacency, one arrow per color per direction; -1 when absent.
    int out_node(int node, int color) const;
    int in_node(int node, int color) const;

    int eps(int node, int color) const { return nodes[node].eps[color_index(color)]; }
    int phi(int node, int color) const { return nodes[node].phi[color_index(color)]; }
    int depth(int node) const { return nodes[node].state.depth; }
    bool interior(int node) const { return nodes[node].interior; }
    WeightVector eps_vector(int node) const;

    int find_id(const std::string& id) const;  // -1 if absent

    // Rebuild adjacency after nodes/edges changed (loading, mutation tests).
    void reindex();

    // Was the whole crystal generated, i.e. nothing sits on the frontier?
    bool closed() const;

private:
    std::vector<int> out_, in_;  // node * num_colors tables
};

// BFS closure of the crystal axioms from the highest weight node,
// deduplicated by canonical monomial form.  Deterministic node order
// (layer by layer, parents in discovery order, colors ascending).
CrystalGraph generate(const RootSystemType& t, const WeightVector& lambda, int depth_limit);

// Sigma_i eps_i <= 1 (at most one in-arrow).
bool is_singular(const CrystalGraph& g, int node);

// All (color, parent) pairs; a parent is e_color(node).  Throws on
// frontier nodes, whose neighborhood was not fully generated.
std::vector<std::pair<int, int>> parents(const CrystalGraph& g, int node);

// Transitive closure of parents.
std::set<int> ancestors(const CrystalGraph& g, int node);

// All walks from the highest weight node down to `node`, reported in the
// composition order node = f_{i_1} f_{i_2} ... f_{i_k} v: i_1 is the color
// of the arrow into `node`, i_k the color of the first arrow out of v.
// Sorted lexicographically.  Throws on frontier nodes.
std::vector<std::vector<int>> walks_to_highest(const CrystalGraph& g, int node);

// <h_i, wt(node)> = <h_i, lambda> - sum_j c_j a_{ij}, where c_j counts the
// j-colored arrows on any path from the highest weight node.
Coeff wt_pairing(const CrystalGraph& g, int node, int color);

// Root coordinates c_j of every node (counts of j-colored arrows on a
// path from the top).  Used by the wt checks.
std::vector<std::vector<int>> root_coordinates(const CrystalGraph& g);

}  // namespace crystal
