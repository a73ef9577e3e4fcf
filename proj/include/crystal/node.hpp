#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crystal/cartan.hpp"

namespace crystal {

// One variable Y_{color,slot} with its (possibly negative) exponent.
struct MonomialEntry {
    int color;
    int slot;
    int exp;

    friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
    friend auto operator<=>(const MonomialEntry&, const MonomialEntry&) = default;
};

// A crystal node in the monomial model: a Laurent monomial in the Y_{i,n},
// kept in canonical form (entries sorted by (color, slot), no zero
// exponents).  depth counts f-applications from the highest weight node;
// it is determined by the monomial inside one B(lambda) and is excluded
// from equality.
struct CrystalNode {
    std::vector<MonomialEntry> exps;
    int depth = 0;

    friend bool operator==(const CrystalNode& a, const CrystalNode& b) {
        return a.exps == b.exps;
    }

    std::uint64_t canonical_hash() const;
    std::string id() const;  // canonical hash, hex, lowercase
};

// Highest weight monomial prod_i Y_{i,0}^{lambda_i}.  Rejects
// non-dominant lambda and colors outside the index set.
CrystalNode highest_node(const RootSystemType& t, const WeightVector& lambda);

int node_eps(const RootSystemType& t, const CrystalNode& node, int color);
int node_phi(const RootSystemType& t, const CrystalNode& node, int color);
std::optional<CrystalNode> node_e(const RootSystemType& t, const CrystalNode& node, int color);
std::optional<CrystalNode> node_f(const RootSystemType& t, const CrystalNode& node, int color);

// eps(b) = sum_i eps_i(b) Lambda_i.
WeightVector epsilon_vector(const RootSystemType& t, const CrystalNode& node);

// <h_i, wt(node)> straight from the model (sum of the color-i exponents).
Coeff node_wt_pairing(const RootSystemType& t, const CrystalNode& node, int color);

}  // namespace crystal
