#include "crystal/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal {

std::uint64_t CrystalNode::canonical_hash() const {
    // FNV-1a over the flattened entries.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const MonomialEntry& e : exps) {
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.color)));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.slot)));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(e.exp)));
    }
    return h;
}

std::string CrystalNode::id() const {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = canonical_hash();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

CrystalNode highest_node(const RootSystemType& t, const WeightVector& lambda) {
    if (!lambda.dominant())
        throw std::invalid_argument("highest weight must be dominant, got " + lambda.str());
    CrystalNode node;
    for (const auto& [c, v] : lambda.coeffs()) {
        if (!t.valid_color(c))
            throw std::invalid_argument("weight color " + std::to_string(c) + " outside " + t.name());
        node.exps.push_back({c, 0, static_cast<int>(v)});
    }
    return node;
}

namespace {

// The color-i entries of a node, as (slot, exponent) pairs sorted by slot.
// Entries are stored sorted by (color, slot), so this is one scan.
void color_entries(const CrystalNode& node, int color, std::vector<std::pair<int, int>>& out) {
    out.clear();
    for (const MonomialEntry& e : node.exps) {
        if (e.color < color) continue;
        if (e.color > color) break;
        out.push_back({e.slot, e.exp});
    }
}

struct StringData {
    int eps = 0;
    int phi = 0;
    int n_e = 0;  // slot for e_i (valid iff eps > 0)
    int n_f = 0;  // slot for f_i (valid iff phi > 0)
};

// phi_i = max_n sum_{k<=n} y_{i,k},  eps_i = max_n (-sum_{k>n} y_{i,k}),
// with n_f the smallest maximizer for phi and n_e the largest for eps.
// Both sums are step functions that only change at occupied slots, so we
// scan plateaus: plateau p (0..m) sits between entry p-1 and entry p, its
// prefix value is pre[p] and its tail value pre[p] - total.
StringData string_data(const CrystalNode& node, int color) {
    static thread_local std::vector<std::pair<int, int>> entries;
    color_entries(node, color, entries);
    StringData d;
    if (entries.empty()) return d;
    const std::size_t m = entries.size();

    int total = 0;
    for (auto& [slot, exp] : entries) total += exp;

    int cum = 0;
    for (auto& [slot, exp] : entries) {
        cum += exp;
        if (cum > d.phi) {  // strict: first attainment = smallest slot
            d.phi = cum;
            d.n_f = slot;
        }
    }

    cum = 0;
    d.eps = std::max(0, -total);  // plateau 0, left of everything
    for (std::size_t p = 1; p <= m; ++p) {
        cum += entries[p - 1].second;
        d.eps = std::max(d.eps, cum - total);  // plateau p (p == m gives 0)
    }
    if (d.eps > 0) {
        // Largest plateau p < m with tail value eps; its right edge is one
        // slot before entry p.
        std::size_t best = 0;
        cum = 0;
        bool found = (-total == d.eps);
        for (std::size_t p = 1; p < m; ++p) {
            cum += entries[p - 1].second;
            if (cum - total == d.eps) {
                best = p;
                found = true;
            }
        }
        if (!found) throw std::logic_error("string data inconsistency");
        d.n_e = entries[best].first - 1;
    }
    return d;
}

// Multiply node by A_{i,n}^{sign} where
//   A_{i.n} = Y_{i,n} Y_{i,n+1} prod_{j != i} Y_{j, n + c_{ji}}^{a_{ji}}
// and c_{ji} = 1 iff j > i.
CrystalNode apply_a(const RootSystemType& t, const CrystalNode& node, int color, int slot,
                    int sign) {
    std::vector<MonomialEntry> deltas;
    deltas.push_back({color, slot, sign});
    deltas.push_back({color, slot + 1, sign});
    const CartanMatrix& m = cartan_matrix(t);
    for (int j : t.colors()) {
        if (j == color) continue;
        int aji = m(j, color);
        if (aji == 0) continue;
        deltas.push_back({j, slot + (j > color ? 1 : 0), sign * aji});
    }
    std::sort(deltas.begin(), deltas.end(),
              [](const MonomialEntry& a, const MonomialEntry& b) {
                  return std::tie(a.color, a.slot) < std::tie(b.color, b.slot);
              });

    // Merge two sorted entry lists, dropping zeros.
    CrystalNode out;
    out.exps.reserve(node.exps.size() + deltas.size());
    std::size_t i = 0, j = 0;
    while (i < node.exps.size() || j < deltas.size()) {
        bool take_old;
        if (i == node.exps.size())
            take_old = false;
        else if (j == deltas.size())
            take_old = true;
        else {
            auto ko = std::tie(node.exps[i].color, node.exps[i].slot);
            auto kd = std::tie(deltas[j].color, deltas[j].slot);
            if (ko == kd) {
                int exp = node.exps[i].exp + deltas[j].exp;
                if (exp != 0) out.exps.push_back({node.exps[i].color, node.exps[i].slot, exp});
                ++i;
                ++j;
                continue;
            }
            take_old = ko < kd;
        }
        if (take_old)
            out.exps.push_back(node.exps[i++]);
        else
            out.exps.push_back(deltas[j++]);
    }
    out.depth = node.depth - sign;  // f = A^{-1} goes one layer down
    return out;
}

}  // namespace

int node_eps(const RootSystemType& t, const CrystalNode& node, int color) {
    if (!t.valid_color(color)) throw std::invalid_argument("color outside " + t.name());
    return string_data(node, color).eps;
}

int node_phi(const RootSystemType& t, const CrystalNode& node, int color) {
    if (!t.valid_color(color)) throw std::invalid_argument("color outside " + t.name());
    return string_data(node, color).phi;
}

std::optional<CrystalNode> node_e(const RootSystemType& t, const CrystalNode& node, int color) {
    if (!t.valid_color(color)) throw std::invalid_argument("color outside " + t.name());
    StringData d = string_data(node, color);
    if (d.eps == 0) return std::nullopt;
    return apply_a(t, node, color, d.n_e, +1);
}

std::optional<CrystalNode> node_f(const RootSystemType& t, const CrystalNode& node, int color) {
    if (!t.valid_color(color)) throw std::invalid_argument("color outside " + t.name());
    StringData d = string_data(node, color);
    if (d.phi == 0) return std::nullopt;
    return apply_a(t, node, color, d.n_f, -1);
}

WeightVector epsilon_vector(const RootSystemType& t, const CrystalNode& node) {
    WeightVector eps;
    for (int i : t.colors()) eps.set(i, node_eps(t, node, i));
    return eps;
}

Coeff node_wt_pairing(const RootSystemType& t, const CrystalNode& node, int color) {
    if (!t.valid_color(color)) throw std::invalid_argument("color outside " + t.name());
    Coeff s = 0;
    for (const MonomialEntry& e : node.exps)
        if (e.color == color) s += e.exp;
    return s;
}

}  // namespace crystal
