#include "crystal/json_io.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "crystal/perfect.hpp"

namespace crystal {

namespace {

nlohmann::ordered_json weight_to_json(const RootSystemType& t, const WeightVector& w) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i : t.colors()) arr.push_back(w[i]);
    return arr;
}

WeightVector weight_from_json(const RootSystemType& t, const nlohmann::ordered_json& arr) {
    auto colors = t.colors();
    if (!arr.is_array() || arr.size() != colors.size())
        throw std::invalid_argument("weight array has wrong length for " + t.name());
    WeightVector w;
    for (std::size_t k = 0; k < colors.size(); ++k)
        w.set(colors[k], arr[k].get<Coeff>());
    return w;
}

}  // namespace

nlohmann::ordered_json graph_to_json(const CrystalGraph& g) {
    std::vector<int> order(g.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(g.nodes[a].state.depth, g.nodes[a].id) <
               std::tie(g.nodes[b].state.depth, g.nodes[b].id);
    });

    nlohmann::ordered_json j;
    j["type"] = g.type.name();
    j["weight"] = weight_to_json(g.type, g.lambda);
    j["depth_limit"] = g.depth_limit;
    j["nodes"] = nlohmann::ordered_json::array();
    for (int idx : order) {
        const GraphNode& n = g.nodes[idx];
        nlohmann::ordered_json jn;
        jn["id"] = n.id;
        nlohmann::ordered_json exps = nlohmann::ordered_json::array();
        for (const MonomialEntry& e : n.state.exps)
            exps.push_back(nlohmann::ordered_json::array({e.color, e.slot, e.exp}));
        jn["exponents"] = exps;
        jn["depth"] = n.state.depth;
        jn["eps"] = n.eps;
        jn["phi"] = n.phi;
        jn["interior"] = n.interior;
        j["nodes"].push_back(std::move(jn));
    }

    struct EdgeKey {
        std::string src, dst;
        int color;
    };
    std::vector<EdgeKey> ek;
    for (const GraphEdge& e : g.edges)
        ek.push_back({g.nodes[e.src].id, g.nodes[e.dst].id, e.color});
    std::sort(ek.begin(), ek.end(), [](const EdgeKey& a, const EdgeKey& b) {
        return std::tie(a.src, a.color, a.dst) < std::tie(b.src, b.color, b.dst);
    });
    j["edges"] = nlohmann::ordered_json::array();
    for (const EdgeKey& e : ek) {
        nlohmann::ordered_json je;
        je["src"] = e.src;
        je["color"] = e.color;
        je["dst"] = e.dst;
        j["edges"].push_back(std::move(je));
    }
    j["highest"] = g.nodes[g.highest_idx].id;
    return j;
}

CrystalGraph graph_from_json(const nlohmann::ordered_json& j) {
    RootSystemType t = RootSystemType::parse(j.at("type").get<std::string>());
    CrystalGraph g(t);
    g.lambda = weight_from_json(t, j.at("weight"));
    g.depth_limit = j.at("depth_limit").get<int>();

    std::map<std::string, int> by_id;
    for (const auto& jn : j.at("nodes")) {
        GraphNode n;
        n.id = jn.at("id").get<std::string>();
        for (const auto& je : jn.at("exponents"))
            n.state.exps.push_back({je.at(0).get<int>(), je.at(1).get<int>(), je.at(2).get<int>()});
        n.state.depth = jn.at("depth").get<int>();
        n.eps = jn.at("eps").get<std::vector<int>>();
        n.phi = jn.at("phi").get<std::vector<int>>();
        n.interior = jn.at("interior").get<bool>();
        if (n.eps.size() != static_cast<std::size_t>(t.num_colors()) ||
            n.phi.size() != static_cast<std::size_t>(t.num_colors()))
            throw std::invalid_argument("eps/phi arrays have wrong length");
        if (!by_id.emplace(n.id, g.node_count()).second)
            throw std::invalid_argument("duplicate node id " + n.id);
        g.nodes.push_back(std::move(n));
    }
    for (const auto& je : j.at("edges")) {
        auto src = by_id.find(je.at("src").get<std::string>());
        auto dst = by_id.find(je.at("dst").get<std::string>());
        if (src == by_id.end() || dst == by_id.end())
            throw std::invalid_argument("edge references unknown node");
        g.edges.push_back({src->second, je.at("color").get<int>(), dst->second});
    }
    auto hi = by_id.find(j.at("highest").get<std::string>());
    if (hi == by_id.end()) throw std::invalid_argument("highest node id not found");
    g.highest_idx = hi->second;
    g.reindex();
    return g;
}

std::string graph_to_string(const CrystalGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

CrystalGraph graph_from_string(const std::string& text) {
    return graph_from_json(nlohmann::ordered_json::parse(text));
}

nlohmann::ordered_json perfect_to_json(const PerfectCrystal& pc) {
    nlohmann::ordered_json j;
    j["type"] = pc.context.name();
    j["weight"] = nullptr;
    j["depth_limit"] = 0;
    j["nodes"] = nlohmann::ordered_json::array();
    for (int x = 0; x < pc.node_count; ++x) {
        nlohmann::ordered_json jn;
        jn["id"] = pc.node_name(x);
        jn["exponents"] = nlohmann::ordered_json::array();
        jn["depth"] = 0;
        std::vector<int> eps, phi;
        for (int i : pc.context.colors()) {
            eps.push_back(pc.eps(x, i));
            phi.push_back(pc.phi(x, i));
        }
        jn["eps"] = eps;
        jn["phi"] = phi;
        jn["interior"] = true;
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = nlohmann::ordered_json::array();
    auto arrows = pc.arrows;
    std::sort(arrows.begin(), arrows.end());
    for (const PerfectArrow& a : arrows) {
        nlohmann::ordered_json je;
        je["src"] = pc.node_name(a.src);
        je["color"] = a.color;
        je["dst"] = pc.node_name(a.dst);
        j["edges"].push_back(std::move(je));
    }
    j["highest"] = nullptr;
    return j;
}

namespace {

void dot_header(std::ostream& os) {
    os << "digraph crystal {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=circle];\n";
}

}  // namespace

void write_dot(const CrystalGraph& g, std::ostream& os) {
    dot_header(os);
    os << "  \"" << g.nodes[g.highest_idx].id << "\" [shape=doublecircle];\n";
    std::vector<int> order(g.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(g.nodes[a].state.depth, g.nodes[a].id) <
               std::tie(g.nodes[b].state.depth, g.nodes[b].id);
    });
    struct Line {
        std::string src, dst;
        int color;
    };
    std::vector<Line> lines;
    for (const GraphEdge& e : g.edges) lines.push_back({g.nodes[e.src].id, g.nodes[e.dst].id, e.color});
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return std::tie(a.src, a.color, a.dst) < std::tie(b.src, b.color, b.dst);
    });
    for (const Line& l : lines)
        os << "  \"" << l.src << "\" -> \"" << l.dst << "\" [label=" << l.color << "];\n";
    os << "}\n";
}

void write_dot(const PerfectCrystal& pc, std::ostream& os) {
    dot_header(os);
    auto arrows = pc.arrows;
    std::sort(arrows.begin(), arrows.end());
    for (const PerfectArrow& a : arrows)
        os << "  \"" << pc.node_name(a.src) << "\" -> \"" << pc.node_name(a.dst)
           << "\" [label=" << a.color << "];\n";
    os << "}\n";
}

}  // namespace crystal
