#pragma once

// Brute-force crystal oracle, independent of the monomial model: builds
// B(mu) as the connected component of a highest element inside a tensor
// power of a hand-supplied base crystal (a colored chain/diamond graph,
// i.e. a PerfectCrystal used as a crystal).  Everything here runs on the
// binary tensor rule alone.

#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/perfect.hpp"

namespace crystal::testsupport {

struct OracleCrystal {
    // Component nodes are tuples of base-crystal node ids, leftmost first.
    std::vector<std::vector<int>> nodes;
    std::map<std::vector<int>, int> index;
    std::map<std::pair<int, int>, int> in_edge;   // (node, color) -> parent
    std::map<std::pair<int, int>, int> out_edge;  // (node, color) -> child
    std::vector<int> depth;
};

class TensorOracle {
public:
    TensorOracle(const PerfectCrystal& base, int power) : base_(base), k_(power) {}

    int eps(const std::vector<int>& t, int color) const {
        auto [e, p] = fold(t, color);
        return e;
    }
    int phi(const std::vector<int>& t, int color) const {
        auto [e, p] = fold(t, color);
        return p;
    }

    // f acts on the owner of the leftmost surviving plus of the signature.
    std::pair<bool, std::vector<int>> f(std::vector<int> t, int color) const {
        int slot = f_slot(t, color);
        if (slot < 0) return {false, t};
        t[static_cast<std::size_t>(slot)] =
            base_.out_arrow(t[static_cast<std::size_t>(slot)], color);
        return {true, t};
    }

    // All highest elements (eps identically zero) of the given weight.
    std::vector<std::vector<int>> highest_of_weight(const WeightVector& mu) const {
        std::vector<std::vector<int>> hits;
        std::vector<int> pick(static_cast<std::size_t>(k_), 0);
        std::function<void(int)> rec = [&](int slot) {
            if (slot == k_) {
                for (int c : base_.context.colors())
                    if (eps(pick, c) != 0) return;
                WeightVector w;
                for (int c : base_.context.colors()) {
                    Coeff v = 0;
                    for (int x : pick) v += base_.phi(x, c) - base_.eps(x, c);
                    w.set(c, v);
                }
                if (w == mu) hits.push_back(pick);
                return;
            }
            for (int b = 0; b < base_.node_count; ++b) {
                pick[static_cast<std::size_t>(slot)] = b;
                rec(slot + 1);
            }
        };
        rec(0);
        return hits;
    }

    OracleCrystal component(const std::vector<int>& start) const {
        OracleCrystal g;
        g.index[start] = 0;
        g.nodes.push_back(start);
        g.depth.push_back(0);
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            int src = q.front();
            q.pop();
            for (int c : base_.context.colors()) {
                auto [ok, u] = f(g.nodes[static_cast<std::size_t>(src)], c);
                if (!ok) continue;
                auto it = g.index.find(u);
                int dst;
                if (it == g.index.end()) {
                    dst = static_cast<int>(g.nodes.size());
                    g.index.emplace(u, dst);
                    g.nodes.push_back(u);
                    g.depth.push_back(g.depth[static_cast<std::size_t>(src)] + 1);
                    q.push(dst);
                } else {
                    dst = it->second;
                }
                g.out_edge[{src, c}] = dst;
                g.in_edge[{dst, c}] = src;
            }
        }
        return g;
    }

    // Sorted (depth, walk) pairs for singular nodes with singular parents:
    // the independent side of the walk-theorem cross-checks.
    std::vector<std::pair<int, std::vector<int>>> qualifying_walks(const OracleCrystal& g) const {
        std::vector<std::pair<int, std::vector<int>>> out;
        auto eps_total = [&](int x) {
            int s = 0;
            for (int c : base_.context.colors()) s += eps(g.nodes[static_cast<std::size_t>(x)], c);
            return s;
        };
        for (std::size_t x = 1; x < g.nodes.size(); ++x) {
            if (eps_total(static_cast<int>(x)) != 1) continue;
            int in_color = -1;
            for (int c : base_.context.colors())
                if (eps(g.nodes[x], c) > 0) in_color = c;
            auto pit = g.in_edge.find({static_cast<int>(x), in_color});
            if (pit == g.in_edge.end()) throw std::logic_error("missing in-edge");
            if (eps_total(pit->second) > 1) continue;
            std::vector<int> walk;
            std::function<void(int)> up = [&](int y) {
                if (y == 0) {
                    out.push_back({g.depth[x], walk});
                    return;
                }
                for (int c : base_.context.colors()) {
                    if (eps(g.nodes[static_cast<std::size_t>(y)], c) == 0) continue;
                    walk.push_back(c);
                    up(g.in_edge.at({y, c}));
                    walk.pop_back();
                }
            };
            up(static_cast<int>(x));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::pair<int, int> fold(const std::vector<int>& t, int color) const {
        int e = 0, p = 0;
        for (int x : t) {
            int ne = base_.eps(x, color), np = base_.phi(x, color);
            int cancel = std::min(p, ne);
            e += ne - cancel;
            p += np - cancel;
        }
        return {e, p};
    }

    int f_slot(const std::vector<int>& t, int color) const {
        // Leftmost factor whose phi survives the "+-" cancellation.
        int surplus = 0;  // surviving pluses so far, owner tracked separately
        int slot = -1;
        for (std::size_t s = 0; s < t.size(); ++s) {
            int ne = base_.eps(t[s], color), np = base_.phi(t[s], color);
            int cancel = std::min(surplus, ne);
            surplus -= cancel;
            if (surplus == 0) slot = -1;  // all earlier pluses consumed
            if (np > 0 && slot < 0) slot = static_cast<int>(s);
            surplus += np;
        }
        return surplus > 0 ? slot : -1;
    }

    const PerfectCrystal& base_;
    int k_;
};

}  // namespace crystal::testsupport
