#include "crystal/perfect.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crystal {

std::string Walk::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) os << ",";
        os << colors[i];
    }
    os << ")";
    return os.str();
}

void PerfectCrystal::build_index() const {
    if (indexed_) return;
    int nc = context.num_colors();
    std::size_t slots = static_cast<std::size_t>(node_count) * nc;
    out_.assign(slots, -1);
    in_.assign(slots, -1);
    for (const PerfectArrow& a : arrows) {
        std::size_t o = static_cast<std::size_t>(a.src) * nc + (a.color - context.min_color());
        std::size_t i = static_cast<std::size_t>(a.dst) * nc + (a.color - context.min_color());
        if (out_[o] != -1 || in_[i] != -1)
            throw std::runtime_error(label + ": color " + std::to_string(a.color) +
                                     " is not a partial matching");
        out_[o] = a.dst;
        in_[i] = a.src;
    }
    indexed_ = true;
}

int PerfectCrystal::out_arrow(int node, int color) const {
    build_index();
    return out_[static_cast<std::size_t>(node) * context.num_colors() +
                (color - context.min_color())];
}

int PerfectCrystal::in_arrow(int node, int color) const {
    build_index();
    return in_[static_cast<std::size_t>(node) * context.num_colors() +
               (color - context.min_color())];
}

int PerfectCrystal::eps(int node, int color) const {
    int k = 0;
    for (int x = in_arrow(node, color); x >= 0; x = in_arrow(x, color)) ++k;
    return k;
}

int PerfectCrystal::phi(int node, int color) const {
    int k = 0;
    for (int x = out_arrow(node, color); x >= 0; x = out_arrow(x, color)) ++k;
    return k;
}

WeightVector PerfectCrystal::eps_vector(int node) const {
    WeightVector w;
    for (int i : context.colors()) w.set(i, eps(node, i));
    return w;
}

WeightVector PerfectCrystal::phi_vector(int node) const {
    WeightVector w;
    for (int i : context.colors()) w.set(i, phi(node, i));
    return w;
}

WeightVector PerfectCrystal::wt(int node) const { return phi_vector(node) - eps_vector(node); }

void PerfectCrystal::validate() const {
    build_index();  // partial matching enforced there
    // No monochrome cycles: every color chain must terminate.
    for (int x = 0; x < node_count; ++x)
        for (int i : context.colors()) {
            int steps = 0;
            for (int y = in_arrow(x, i); y >= 0; y = in_arrow(y, i))
                if (++steps > node_count)
                    throw std::runtime_error(label + ": monochrome cycle in color " +
                                             std::to_string(i));
        }
    // Connected as an undirected graph.
    if (node_count == 0) throw std::runtime_error(label + ": empty graph");
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const PerfectArrow& a : arrows) {
            int y = -1;
            if (a.src == x) y = a.dst;
            if (a.dst == x) y = a.src;
            if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
        throw std::runtime_error(label + ": not connected");
}

namespace {

// Chain of `count` arrows whose p-th color (1-based) ascends 1..n and then
// descends; `doubled` keeps n twice (the B-shaped chains).
void add_chain(PerfectCrystal& pc, int n, bool doubled) {
    int count = doubled ? 2 * n : 2 * n - 1;
    pc.node_count = count + 1;
    for (int p = 1; p <= count; ++p) {
        int color = p <= n ? p : (doubled ? 2 * n + 1 - p : 2 * n - p);
        pc.arrows.push_back({p - 1, color, p});
    }
}

// The D-shaped body: ascending chain, the {n-1, n} diamond, descending
// chain; 2n nodes, diamond top node before bottom node.
void add_diamond_chain(PerfectCrystal& pc, int n) {
    pc.node_count = 2 * n;
    for (int p = 1; p <= n - 2; ++p) pc.arrows.push_back({p - 1, p, p});
    pc.arrows.push_back({n - 2, n - 1, n - 1});  // top
    pc.arrows.push_back({n - 2, n, n});          // bottom
    pc.arrows.push_back({n - 1, n, n + 1});
    pc.arrows.push_back({n, n - 1, n + 1});
    for (int q = 0; q < n - 2; ++q) pc.arrows.push_back({n + 1 + q, n - 2 - q, n + 2 + q});
}

PerfectCrystal build_b11(const RootSystemType& t) {
    PerfectCrystal pc(t);
    pc.label = "B11(" + t.name() + ")";
    int n = t.rank;
    switch (t.family) {
        case Family::A1Aff:
        case Family::AAff:
            // Cycle: colors 1..n along the chain, 0 closing it.
            pc.node_count = n + 1;
            for (int p = 1; p <= n; ++p) pc.arrows.push_back({p - 1, p, p});
            pc.arrows.push_back({n, 0, 0});
            break;
        case Family::CAff:
            add_chain(pc, n, false);
            pc.arrows.push_back({2 * n - 1, 0, 0});
            break;
        case Family::BAff:
            add_chain(pc, n, true);
            pc.arrows.push_back({2 * n - 1, 0, 0});
            pc.arrows.push_back({2 * n, 0, 1});
            break;
        case Family::DAff:
            add_diamond_chain(pc, n);
            pc.arrows.push_back({2 * n - 2, 0, 0});
            pc.arrows.push_back({2 * n - 1, 0, 1});
            break;
        case Family::A2Odd:
            add_chain(pc, n, false);
            pc.arrows.push_back({2 * n - 2, 0, 0});
            pc.arrows.push_back({2 * n - 1, 0, 1});
            break;
        case Family::A2Even:
            // Chain plus an apex: the 0-arrows run chain end -> apex -> chain
            // start, giving the (0,0) repeat the in-proof walks traverse.
            add_chain(pc, n, false);
            pc.node_count += 1;
            pc.arrows.push_back({2 * n - 1, 0, 2 * n});
            pc.arrows.push_back({2 * n, 0, 0});
            break;
        case Family::A2EvenDagger:
            add_chain(pc, n, true);
            pc.arrows.push_back({2 * n, 0, 0});
            break;
        case Family::DAff2:
            add_chain(pc, n, true);
            pc.node_count += 1;
            pc.arrows.push_back({2 * n, 0, 2 * n + 1});
            pc.arrows.push_back({2 * n + 1, 0, 0});
            break;
        default:
            throw std::invalid_argument("b11: " + t.name() + " is not affine");
    }
    pc.validate();
    return pc;
}

}  // namespace

PerfectCrystal b11(const RootSystemType& t) {
    if (!t.is_affine()) throw std::invalid_argument("b11 requires an affine type");
    return build_b11(t);
}

PerfectCrystal bn1_type_a(int n) {
    if (n < 2) throw std::invalid_argument("bn1_type_a requires n >= 2");
    RootSystemType t(Family::AAff, n);
    PerfectCrystal pc(t);
    pc.label = "Bn1(" + t.name() + ")";
    pc.node_count = n + 1;
    for (int p = 1; p <= n; ++p) pc.arrows.push_back({p - 1, n + 1 - p, p});
    pc.arrows.push_back({n, 0, 0});
    pc.validate();
    return pc;
}

std::vector<PerfectCrystal> finite_walk_graphs(const RootSystemType& t) {
    if (t.is_affine())
        throw std::invalid_argument("finite_walk_graphs requires a finite type");
    int n = t.rank;
    auto strip_zero = [&](PerfectCrystal src, const std::string& label) {
        PerfectCrystal pc(t);
        pc.label = label;
        pc.node_count = src.node_count;
        for (const PerfectArrow& a : src.arrows)
            if (a.color != 0) pc.arrows.push_back(a);
        pc.validate();
        return pc;
    };
    // The matching affine picture, built structurally (the affine family
    // bound may sit above this rank, e.g. there is no B_2^(1) type, but the
    // in-proof B_2 picture is the same chain).
    std::vector<PerfectCrystal> out;
    switch (t.family) {
        case Family::A: {
            PerfectCrystal fwd(t);
            fwd.node_count = n + 1;
            for (int p = 1; p <= n; ++p) fwd.arrows.push_back({p - 1, p, p});
            out.push_back(strip_zero(fwd, "Walk(" + t.name() + ")"));
            PerfectCrystal rev(t);
            rev.node_count = n + 1;
            for (int p = 1; p <= n; ++p) rev.arrows.push_back({p - 1, n + 1 - p, p});
            out.push_back(strip_zero(rev, "WalkRev(" + t.name() + ")"));
            break;
        }
        case Family::B: {
            PerfectCrystal pc(t);
            add_chain(pc, n, true);
            out.push_back(strip_zero(pc, "Walk(" + t.name() + ")"));
            break;
        }
        case Family::C: {
            PerfectCrystal pc(t);
            add_chain(pc, n, false);
            out.push_back(strip_zero(pc, "Walk(" + t.name() + ")"));
            break;
        }
        case Family::D: {
            PerfectCrystal pc(t);
            add_diamond_chain(pc, n);
            out.push_back(strip_zero(pc, "Walk(" + t.name() + ")"));
            break;
        }
        default:
            throw std::invalid_argument("unsupported family for walk graphs");
    }
    return out;
}

PerfectCrystal reverse_arrows(const PerfectCrystal& pc) {
    PerfectCrystal out(pc.context);
    out.label = pc.label + "^rev";
    out.node_count = pc.node_count;
    for (const PerfectArrow& a : pc.arrows) out.arrows.push_back({a.dst, a.color, a.src});
    std::sort(out.arrows.begin(), out.arrows.end());
    return out;
}

std::vector<std::vector<int>> realizations(const PerfectCrystal& pc, const Walk& w) {
    std::vector<std::vector<int>> out;
    if (w.colors.empty()) return out;
    for (const int c : w.colors)
        if (!pc.context.valid_color(c))
            throw std::invalid_argument("walk color " + std::to_string(c) + " outside " +
                                        pc.context.name());
    for (int start = 0; start < pc.node_count; ++start) {
        std::vector<int> path = {start};
        bool ok = true;
        for (int c : w.colors) {
            int next = pc.out_arrow(path.back(), c);
            if (next < 0) {
                ok = false;
                break;
            }
            path.push_back(next);
        }
        if (ok) out.push_back(std::move(path));
    }
    return out;
}

bool is_consecutive(const PerfectCrystal& pc, const Walk& w) {
    return !realizations(pc, w).empty();
}

std::vector<Walk> enumerate_walks(const PerfectCrystal& pc, int start_color, int k) {
    if (k < 1) throw std::invalid_argument("walk length must be >= 1");
    if (!pc.context.valid_color(start_color))
        throw std::invalid_argument("start color outside " + pc.context.name());
    std::vector<Walk> out;
    std::vector<int> colors;
    std::function<void(int, int)> rec = [&](int node, int remaining) {
        if (remaining == 0) {
            out.push_back(Walk{colors});
            return;
        }
        for (int c : pc.context.colors()) {
            if (colors.empty() && c != start_color) continue;
            int next = pc.out_arrow(node, c);
            if (next < 0) continue;
            colors.push_back(c);
            rec(next, remaining - 1);
            colors.pop_back();
        }
    };
    for (int node = 0; node < pc.node_count; ++node)
        if (pc.out_arrow(node, start_color) >= 0) rec(node, k);
    std::sort(out.begin(), out.end());
    return out;
}

int repeat_count_m(const RootSystemType& t, const Walk& w) {
    const CartanMatrix& a = cartan_matrix(t);
    int m = 0;
    for (std::size_t r = 0; r + 1 < w.colors.size(); ++r)
        if (a(w.colors[r], w.colors[r + 1]) >= 0) ++m;
    return m;
}

BoxData box_nodes(const PerfectCrystal& pc, const Walk& w) {
    int k = w.length();
    if (k <= 1) throw std::invalid_argument("box labeling needs a walk of length > 1");
    auto paths = realizations(pc, w);
    if (paths.empty())
        throw std::invalid_argument("walk " + w.str() + " is not consecutive on " + pc.label);
    if (paths.size() > 1)
        throw std::runtime_error("walk " + w.str() + " has an ambiguous realization on " +
                                 pc.label);
    BoxData data;
    data.path = paths.front();
    data.predecessor = data.path.front();
    const CartanMatrix& a = cartan_matrix(pc.context);
    for (int r = 1; r <= k; ++r) {
        if (r < k && a(w.colors[static_cast<std::size_t>(r) - 1],
                       w.colors[static_cast<std::size_t>(r)]) >= 0)
            continue;  // this box drops out of the tensor
        data.boxes.push_back(data.path[static_cast<std::size_t>(r)]);
    }
    return data;
}

}  // namespace crystal
