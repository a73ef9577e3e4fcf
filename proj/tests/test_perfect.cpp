#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "crystal/perfect.hpp"

using namespace crystal;

namespace {

std::vector<RootSystemType> affine_catalog(int max_rank) {
    std::vector<RootSystemType> out;
    out.push_back({Family::A1Aff, 1});
    auto push = [&](Family f, int lo) {
        for (int n = lo; n <= max_rank; ++n) out.push_back({f, n});
    };
    push(Family::AAff, 2);
    push(Family::BAff, 3);
    push(Family::CAff, 2);
    push(Family::DAff, 4);
    push(Family::A2Even, 2);
    push(Family::A2EvenDagger, 2);
    push(Family::A2Odd, 3);
    push(Family::DAff2, 2);
    return out;
}

// Naive path enumeration over the raw arrow list, for the completeness
// check of enumerate_walks.
std::vector<Walk> naive_walks(const PerfectCrystal& pc, int start_color, int k) {
    std::vector<Walk> out;
    std::function<void(int, std::vector<int>&)> rec = [&](int node, std::vector<int>& colors) {
        if (static_cast<int>(colors.size()) == k) {
            out.push_back(Walk{colors});
            return;
        }
        for (const PerfectArrow& a : pc.arrows) {
            if (a.src != node) continue;
            colors.push_back(a.color);
            rec(a.dst, colors);
            colors.pop_back();
        }
    };
    for (const PerfectArrow& a : pc.arrows) {
        if (a.color != start_color) continue;
        std::vector<int> colors = {a.color};
        rec(a.dst, colors);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("b11 node counts per family") {
    for (const RootSystemType& t : affine_catalog(6)) {
        CAPTURE(t.name());
        PerfectCrystal pc = b11(t);
        int n = t.rank;
        int expect = 0;
        switch (t.family) {
            case Family::A1Aff:
            case Family::AAff: expect = n + 1; break;
            case Family::CAff: expect = 2 * n; break;
            case Family::DAff:
            case Family::A2Odd: expect = 2 * n; break;
            case Family::BAff:
            case Family::A2Even:
            case Family::A2EvenDagger: expect = 2 * n + 1; break;
            // The appendix picture for this family carries both the chain
            // midpoint and the 0-apex: 2n+2 nodes.
            case Family::DAff2: expect = 2 * n + 2; break;
            default: REQUIRE(false);
        }
        CHECK(pc.node_count == expect);
    }
    CHECK_THROWS_AS(b11({Family::A, 2}), std::invalid_argument);
}

TEST_CASE("catalog pictures") {
    // A_n^(1): cycle colored 1..n then 0.
    PerfectCrystal a2 = b11({Family::AAff, 2});
    CHECK(a2.arrows == std::vector<PerfectArrow>{{0, 1, 1}, {1, 2, 2}, {2, 0, 0}});

    // A_1^(1): the 2-cycle.
    PerfectCrystal a1 = b11({Family::A1Aff, 1});
    CHECK(a1.arrows == std::vector<PerfectArrow>{{0, 1, 1}, {1, 0, 0}});

    // C_n^(1): 2n-chain 1..n..1 closed by one 0-arrow.
    PerfectCrystal c2 = b11({Family::CAff, 2});
    CHECK(c2.arrows ==
          std::vector<PerfectArrow>{{0, 1, 1}, {1, 2, 2}, {2, 1, 3}, {3, 0, 0}});

    // D_n^(1): chain with the {n-1,n} diamond and two 0-chords.
    PerfectCrystal d4 = b11({Family::DAff, 4});
    CHECK(d4.node_count == 8);
    CHECK(d4.out_arrow(2, 3) == 3);
    CHECK(d4.out_arrow(2, 4) == 4);
    CHECK(d4.out_arrow(3, 4) == 5);
    CHECK(d4.out_arrow(4, 3) == 5);
    CHECK(d4.out_arrow(6, 0) == 0);
    CHECK(d4.out_arrow(7, 0) == 1);

    // B_n^(1): doubled n in the chain plus the two 0-chords.
    PerfectCrystal b3 = b11({Family::BAff, 3});
    CHECK(b3.out_arrow(2, 3) == 3);
    CHECK(b3.out_arrow(3, 3) == 4);
    CHECK(b3.out_arrow(5, 0) == 0);
    CHECK(b3.out_arrow(6, 0) == 1);

    // Apex families: 0-arrows run chain end -> apex -> chain start.
    PerfectCrystal a4 = b11({Family::A2Even, 2});
    CHECK(a4.out_arrow(3, 0) == 4);
    CHECK(a4.out_arrow(4, 0) == 0);
    PerfectCrystal d3 = b11({Family::DAff2, 2});
    CHECK(d3.out_arrow(4, 0) == 5);
    CHECK(d3.out_arrow(5, 0) == 0);

    // A_{2n}^(2)+: single 0-arrow closing the doubled chain.
    PerfectCrystal a4d = b11({Family::A2EvenDagger, 2});
    CHECK(a4d.out_arrow(4, 0) == 0);
    CHECK(a4d.in_arrow(0, 0) == 4);
}

TEST_CASE("per-color matching, connectivity and chains at load") {
    for (const RootSystemType& t : affine_catalog(6)) {
        CAPTURE(t.name());
        CHECK_NOTHROW(b11(t).validate());
    }
}

TEST_CASE("arrow-color adjacency consistency with the Cartan matrix") {
    // Consecutive pairs of distinct colors either join Dynkin neighbors
    // (a_{ij} < 0) or belong to a diamond: an orthogonal pair realized in
    // both orders, like {n-1,n} in type D and the {0,1} chords of the
    // B^(1)/D^(1)/A^(2)-odd pictures.
    for (const RootSystemType& t : affine_catalog(6)) {
        CAPTURE(t.name());
        PerfectCrystal pc = b11(t);
        const CartanMatrix& a = cartan_matrix(t);
        for (int x = 0; x < pc.node_count; ++x)
            for (int i : t.colors()) {
                if (pc.in_arrow(x, i) < 0) continue;
                for (int j : t.colors()) {
                    if (pc.out_arrow(x, j) < 0 || i == j) continue;
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(a(i, j) <= 0);
                    if (a(i, j) == 0) CHECK(is_consecutive(pc, Walk{{j, i}}));
                }
            }
    }
}

TEST_CASE("reversed type A crystal") {
    PerfectCrystal rev = bn1_type_a(2);
    CHECK(rev.arrows == std::vector<PerfectArrow>{{0, 2, 1}, {1, 1, 2}, {2, 0, 0}});
    CHECK_THROWS_AS(bn1_type_a(1), std::invalid_argument);

    for (int n = 2; n <= 5; ++n) {
        PerfectCrystal fwd = b11({Family::AAff, n});
        CHECK(bn1_type_a(n).node_count == fwd.node_count);
        CHECK(bn1_type_a(n).arrows.size() == fwd.arrows.size());

        // Reversal is an involution.
        PerfectCrystal twice = reverse_arrows(reverse_arrows(fwd));
        auto sorted = fwd.arrows;
        std::sort(sorted.begin(), sorted.end());
        CHECK(twice.arrows == sorted);

        // bn1 is the arrow reversal of b11 after the left-to-right
        // relabeling z_k = x_{n-k mod n+1}.
        PerfectCrystal rv = reverse_arrows(fwd);
        std::vector<PerfectArrow> relabeled;
        auto map = [&](int x) { return (n - x + (n + 1)) % (n + 1); };
        for (const PerfectArrow& ar : rv.arrows) relabeled.push_back({map(ar.src), ar.color, map(ar.dst)});
        std::sort(relabeled.begin(), relabeled.end());
        auto expect = bn1_type_a(n).arrows;
        std::sort(expect.begin(), expect.end());
        CHECK(relabeled == expect);
    }
}

TEST_CASE("finite walk graphs") {
    auto c2 = finite_walk_graphs({Family::C, 2});
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].node_count == 4);
    CHECK(c2[0].arrows == std::vector<PerfectArrow>{{0, 1, 1}, {1, 2, 2}, {2, 1, 3}});

    auto b2 = finite_walk_graphs({Family::B, 2});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].arrows == std::vector<PerfectArrow>{{0, 1, 1}, {1, 2, 2}, {2, 2, 3}, {3, 1, 4}});

    auto d4 = finite_walk_graphs({Family::D, 4});
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].node_count == 8);
    for (const PerfectArrow& ar : d4[0].arrows) CHECK(ar.color != 0);

    auto a3 = finite_walk_graphs({Family::A, 3});
    REQUIRE(a3.size() == 2);
    CHECK(a3[0].arrows == std::vector<PerfectArrow>{{0, 1, 1}, {1, 2, 2}, {2, 3, 3}});
    CHECK(a3[1].arrows == std::vector<PerfectArrow>{{0, 3, 1}, {1, 2, 2}, {2, 1, 3}});
}

TEST_CASE("walk enumeration") {
    PerfectCrystal a2 = b11({Family::AAff, 2});
    auto w = enumerate_walks(a2, 1, 3);
    REQUIRE(w.size() == 1);
    CHECK(w[0].colors == std::vector<int>{1, 2, 0});

    // Branching at the D diamond.
    PerfectCrystal d4 = b11({Family::DAff, 4});
    auto branched = enumerate_walks(d4, 1, 4);
    CHECK(branched.size() >= 2);

    // One walk per arrow of the start color at length 1.
    for (const RootSystemType& t : affine_catalog(4)) {
        PerfectCrystal pc = b11(t);
        for (int c : t.colors()) {
            long long arrows = 0;
            for (const PerfectArrow& a : pc.arrows)
                if (a.color == c) ++arrows;
            CHECK(static_cast<long long>(enumerate_walks(pc, c, 1).size()) == arrows);
        }
    }

    // Soundness and completeness against naive path enumeration.
    for (const RootSystemType& t : affine_catalog(4)) {
        CAPTURE(t.name());
        PerfectCrystal pc = b11(t);
        for (int c : t.colors())
            for (int k = 1; k <= 4; ++k) {
                auto fast = enumerate_walks(pc, c, k);
                for (const Walk& walk : fast) CHECK(is_consecutive(pc, walk));
                CHECK(fast == naive_walks(pc, c, k));
            }
    }
}

TEST_CASE("consecutiveness") {
    PerfectCrystal a2 = b11({Family::AAff, 2});
    CHECK(is_consecutive(a2, Walk{{1}}));
    CHECK_FALSE(is_consecutive(a2, Walk{{1, 1}}));
    PerfectCrystal c2 = b11({Family::CAff, 2});
    CHECK(is_consecutive(c2, Walk{{1, 2, 1, 0, 1}}));
    CHECK_FALSE(is_consecutive(c2, Walk{{2, 1, 2}}));
}

TEST_CASE("repeat count m") {
    RootSystemType c2(Family::CAff, 2);
    CHECK(repeat_count_m(c2, Walk{{1, 2, 1, 0}}) == 0);
    RootSystemType b3(Family::BAff, 3);
    CHECK(repeat_count_m(b3, Walk{{2, 3, 3, 2}}) == 1);  // a_{33} = 2 >= 0
    RootSystemType d3(Family::DAff2, 2);
    CHECK(repeat_count_m(d3, Walk{{1, 0, 0, 1}}) == 1);  // a_{00} = 2 >= 0
    CHECK(repeat_count_m(d3, Walk{{2, 2, 1, 0, 0}}) == 2);
}

TEST_CASE("box labeling") {
    PerfectCrystal c2 = b11({Family::CAff, 2});
    BoxData two = box_nodes(c2, Walk{{1, 2}});
    CHECK(two.predecessor == 0);
    CHECK(two.boxes == std::vector<int>{1, 2});

    // A dropped box at the doubled region.
    PerfectCrystal b3 = b11({Family::BAff, 3});
    BoxData turn = box_nodes(b3, Walk{{2, 3, 3, 2}});
    CHECK(turn.boxes.size() == 3);  // k - m = 4 - 1
    CHECK(turn.path == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(turn.boxes == std::vector<int>{2, 4, 5});  // x3 dropped

    // Walks longer than the cycle revisit nodes with period 3.
    PerfectCrystal a2 = b11({Family::AAff, 2});
    BoxData wrap = box_nodes(a2, Walk{{1, 2, 0, 1}});
    CHECK(wrap.boxes == std::vector<int>{1, 2, 0, 1});

    CHECK_THROWS_AS(box_nodes(a2, Walk{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(box_nodes(a2, Walk{{1, 1}}), std::invalid_argument);
}

TEST_CASE("walk realizations are unique for k > 1") {
    for (const RootSystemType& t : affine_catalog(4)) {
        CAPTURE(t.name());
        PerfectCrystal pc = b11(t);
        for (int c : t.colors())
            for (int k = 2; k <= 5; ++k)
                for (const Walk& w : enumerate_walks(pc, c, k))
                    CHECK(realizations(pc, w).size() == 1);
    }
}
