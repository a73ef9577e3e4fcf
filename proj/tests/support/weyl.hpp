#pragma once

// Independent dimension oracle for finite-type irreducibles, used to check
// generated crystal sizes.  Works in the dual root system: enumerate its
// positive roots by reflection closure of the simple roots, then apply the
// product formula with exact integer arithmetic.  Nothing here touches the
// crystal implementation.

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "crystal/cartan.hpp"

namespace crystal::testsupport {

// Positive roots of the dual system as coefficient vectors over the simple
// coroots, i.e. the alpha^v appearing in <lambda + rho, alpha^v>.
inline std::vector<std::vector<int>> dual_positive_roots(const RootSystemType& t) {
    if (t.is_affine()) throw std::invalid_argument("finite types only");
    const CartanMatrix& a = cartan_matrix(t);
    const int n = t.rank;
    // Dual Cartan matrix entries: M[i][j] = a_{j,i} (1-based colors).
    auto m = [&](int i, int j) { return a(j, i); };

    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> queue;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> beta = queue.back();
        queue.pop_back();
        for (int i = 1; i <= n; ++i) {
            int pair = 0;
            for (int j = 1; j <= n; ++j) pair += m(i, j) * beta[static_cast<std::size_t>(j - 1)];
            std::vector<int> refl = beta;
            refl[static_cast<std::size_t>(i - 1)] -= pair;
            if (roots.insert(refl).second) queue.push_back(refl);
        }
    }
    std::vector<std::vector<int>> positive;
    for (const auto& beta : roots) {
        bool nonneg = true, nonzero = false;
        for (int c : beta) {
            if (c < 0) nonneg = false;
            if (c != 0) nonzero = true;
        }
        if (nonneg && nonzero) positive.push_back(beta);
    }
    return positive;
}

inline unsigned long long weyl_dim(const RootSystemType& t, const WeightVector& lambda) {
    auto roots = dual_positive_roots(t);
    auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
        while (b) {
            unsigned __int128 r = a % b;
            a = b;
            b = r;
        }
        return a;
    };
    unsigned __int128 num = 1, den = 1;
    for (const auto& beta : roots) {
        long long up = 0, down = 0;
        for (int i = 1; i <= t.rank; ++i) {
            long long c = beta[static_cast<std::size_t>(i - 1)];
            up += c * (lambda[i] + 1);
            down += c;
        }
        num *= static_cast<unsigned long long>(up);
        den *= static_cast<unsigned long long>(down);
        unsigned __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw std::logic_error("weyl dimension is not integral");
    return static_cast<unsigned long long>(num);
}

}  // namespace crystal::testsupport
