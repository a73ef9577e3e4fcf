#include "crystal/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crystal {

int CrystalGraph::out_node(int node, int color) const {
    return out_[static_cast<std::size_t>(node) * type.num_colors() + color_index(color)];
}

int CrystalGraph::in_node(int node, int color) const {
    return in_[static_cast<std::size_t>(node) * type.num_colors() + color_index(color)];
}

WeightVector CrystalGraph::eps_vector(int node) const {
    WeightVector w;
    for (int i : type.colors()) w.set(i, eps(node, i));
    return w;
}

int CrystalGraph::find_id(const std::string& id) const {
    for (int i = 0; i < node_count(); ++i)
        if (nodes[i].id == id) return i;
    return -1;
}

void CrystalGraph::reindex() {
    std::size_t slots = nodes.size() * static_cast<std::size_t>(type.num_colors());
    out_.assign(slots, -1);
    in_.assign(slots, -1);
    int nc = type.num_colors();
    for (const GraphEdge& e : edges) {
        std::size_t o = static_cast<std::size_t>(e.src) * nc + color_index(e.color);
        std::size_t i = static_cast<std::size_t>(e.dst) * nc + color_index(e.color);
        if (out_[o] != -1 || in_[i] != -1)
            throw std::runtime_error("duplicate colored arrow at node");
        out_[o] = e.dst;
        in_[i] = e.src;
    }
}

bool CrystalGraph::closed() const {
    return std::all_of(nodes.begin(), nodes.end(), [](const GraphNode& n) { return n.interior; });
}

CrystalGraph generate(const RootSystemType& t, const WeightVector& lambda, int depth_limit) {
    if (depth_limit < 0) throw std::invalid_argument("depth_limit must be >= 0");
    CrystalGraph g(t);
    g.lambda = lambda;
    g.depth_limit = depth_limit;

    std::map<std::vector<MonomialEntry>, int> index;
    auto push_node = [&](CrystalNode&& state) {
        GraphNode gn;
        gn.state = std::move(state);
        gn.id = gn.state.id();
        gn.interior = gn.state.depth < depth_limit;
        for (int i : t.colors()) {
            gn.eps.push_back(node_eps(t, gn.state, i));
            gn.phi.push_back(node_phi(t, gn.state, i));
        }
        g.nodes.push_back(std::move(gn));
        int idx = g.node_count() - 1;
        index.emplace(g.nodes.back().state.exps, idx);
        return idx;
    };

    push_node(highest_node(t, lambda));
    g.highest_idx = 0;

    std::vector<int> layer = {0};
    for (int d = 0; d < depth_limit && !layer.empty(); ++d) {
        std::vector<int> next;
        for (int src : layer) {
            for (int i : t.colors()) {
                auto child = node_f(t, g.nodes[src].state, i);
                if (!child) continue;
                auto it = index.find(child->exps);
                int dst;
                if (it == index.end()) {
                    dst = push_node(std::move(*child));
                    next.push_back(dst);
                } else {
                    dst = it->second;
                }
                g.edges.push_back({src, i, dst});
            }
        }
        layer = std::move(next);
    }
    g.reindex();
    return g;
}

bool is_singular(const CrystalGraph& g, int node) {
    int s = 0;
    for (int v : g.nodes[node].eps) s += v;
    return s <= 1;
}

std::vector<std::pair<int, int>> parents(const CrystalGraph& g, int node) {
    if (!g.interior(node))
        throw std::invalid_argument("node " + g.nodes[node].id +
                                    " is on the frontier; ancestry may be incomplete");
    std::vector<std::pair<int, int>> out;
    for (int i : g.type.colors()) {
        int p = g.in_node(node, i);
        if (p >= 0) out.push_back({i, p});
    }
    return out;
}

std::set<int> ancestors(const CrystalGraph& g, int node) {
    std::set<int> seen;
    std::vector<int> stack = {node};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int i : g.type.colors()) {
            int p = g.in_node(x, i);
            if (p >= 0 && seen.insert(p).second) stack.push_back(p);
        }
    }
    return seen;
}

std::vector<std::vector<int>> walks_to_highest(const CrystalGraph& g, int node) {
    if (!g.interior(node))
        throw std::invalid_argument("node " + g.nodes[node].id +
                                    " is on the frontier; walks may be incomplete");
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    // DFS upward; colors ascending gives lexicographic output order.
    auto rec = [&](auto&& self, int x) -> void {
        if (x == g.highest_idx) {
            out.push_back(walk);
            return;
        }
        for (int i : g.type.colors()) {
            int p = g.in_node(x, i);
            if (p < 0) continue;
            walk.push_back(i);
            self(self, p);
            walk.pop_back();
        }
    };
    rec(rec, node);
    return out;
}

std::vector<std::vector<int>> root_coordinates(const CrystalGraph& g) {
    int nc = g.type.num_colors();
    std::vector<std::vector<int>> coords(g.nodes.size());
    coords[static_cast<std::size_t>(g.highest_idx)].assign(nc, 0);
    // Edges were generated layer by layer, so a single pass in edge order
    // sees every dst after its src.  Loaded graphs may order edges
    // differently; iterate until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const GraphEdge& e : g.edges) {
            const auto& cs = coords[static_cast<std::size_t>(e.src)];
            if (cs.empty()) continue;
            auto cd = cs;
            cd[static_cast<std::size_t>(g.color_index(e.color))] += 1;
            auto& dst = coords[static_cast<std::size_t>(e.dst)];
            if (dst.empty()) {
                dst = cd;
                changed = true;
            }
        }
    }
    return coords;
}

Coeff wt_pairing(const CrystalGraph& g, int node, int color) {
    if (node < 0 || node >= g.node_count()) throw std::invalid_argument("node not in graph");
    auto coords = root_coordinates(g);
    const auto& c = coords[static_cast<std::size_t>(node)];
    if (c.empty()) throw std::invalid_argument("node unreachable from highest");
    Coeff v = pairing(g.type, color, g.lambda);
    const CartanMatrix& m = cartan_matrix(g.type);
    for (int j : g.type.colors()) v -= static_cast<Coeff>(c[g.color_index(j)]) * m(color, j);
    return v;
}

}  // namespace crystal
