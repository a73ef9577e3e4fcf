#pragma once

#include <string>
#include <vector>

#include "crystal/cartan.hpp"

namespace crystal {

struct PerfectArrow {
    int src;
    int color;
    int dst;
    friend bool operator==(const PerfectArrow&, const PerfectArrow&) = default;
    friend auto operator<=>(const PerfectArrow&, const PerfectArrow&) = default;
};

// A walk is the color sequence of a consecutive run of arrows.
struct Walk {
    std::vector<int> colors;
    int length() const { return static_cast<int>(colors.size()); }
    friend bool operator==(const Walk&, const Walk&) = default;
    friend auto operator<=>(const Walk&, const Walk&) = default;
    std::string str() const;
};

// Finite colored digraph with at most one in- and one out-arrow per color
// at each node (the arrow pattern of the level-1 perfect crystals and of
// their 0-arrow-removed finite cousins).  Node ids are synthetic x0..x_{N-1}
// along the printed chain, diamond top before bottom, apex node last; the
// source pictures deliberately omit node labels.
class PerfectCrystal {
public:
    RootSystemType context;  // type whose Cartan matrix colors the arrows
    std::string label;       // "B11(C2~1)", "Bn1(A2~1)", "Walk(C2)", ...
    int node_count = 0;
    std::vector<PerfectArrow> arrows;

    explicit PerfectCrystal(const RootSystemType& t) : context(t) {}

    int out_arrow(int node, int color) const;  // destination or -1
    int in_arrow(int node, int color) const;   // source or -1

    int eps(int node, int color) const;  // length of the color in-chain
    int phi(int node, int color) const;
    WeightVector eps_vector(int node) const;
    WeightVector phi_vector(int node) const;
    WeightVector wt(int node) const;  // phi - eps over the Lambda basis

    std::string node_name(int node) const { return "x" + std::to_string(node); }

    // Per-color partial matching, undirected connectivity, no monochrome
    // cycles.  Called by the catalog constructors; throws on violation.
    void validate() const;

private:
    void build_index() const;
    mutable std::vector<int> out_, in_;  // lazy adjacency tables
    mutable bool indexed_ = false;
};

// The appendix catalog.  b11 accepts any affine family in scope.
PerfectCrystal b11(const RootSystemType& t);

// B^{n,1} in type A: all arrows of b11(A_n^(1)) reversed, chain colors
// n, n-1, ..., 1 and a closing 0.  n >= 2.
PerfectCrystal bn1_type_a(int n);

// Finite walk graphs: the matching affine picture with 0-arrows deleted.
// Type A yields both orientation choices (forward and reversed).
std::vector<PerfectCrystal> finite_walk_graphs(const RootSystemType& t);

// All arrows flipped; node ids unchanged.
PerfectCrystal reverse_arrows(const PerfectCrystal& pc);

// All node paths p_0 -> ... -> p_k realizing the walk's colors in order.
std::vector<std::vector<int>> realizations(const PerfectCrystal& pc, const Walk& w);

bool is_consecutive(const PerfectCrystal& pc, const Walk& w);

// Every color sequence of length k realized by consecutive arrows whose
// first arrow has the given color; one entry per realizing path.
std::vector<Walk> enumerate_walks(const PerfectCrystal& pc, int start_color, int k);

// m = |{ r | a_{i_r, i_{r+1}} >= 0, 1 <= r < k }|.
int repeat_count_m(const RootSystemType& t, const Walk& w);

// Box labeling of a walk: the realizing path, its predecessor node [i_0],
// and the k-m retained boxes ([i_r] kept iff a_{i_r,i_{r+1}} < 0, [i_k]
// always).  Requires k > 1; the path is then unique.
struct BoxData {
    std::vector<int> path;   // p_0 .. p_k
    int predecessor = 0;     // p_0
    std::vector<int> boxes;  // retained box nodes, left to right
};
BoxData box_nodes(const PerfectCrystal& pc, const Walk& w);

}  // namespace crystal
