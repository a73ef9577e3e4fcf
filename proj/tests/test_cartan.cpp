#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "crystal/cartan.hpp"

using namespace crystal;

namespace {

std::vector<RootSystemType> all_types_up_to_rank(int max_rank) {
    std::vector<RootSystemType> out;
    auto push = [&](Family f, int lo) {
        for (int n = lo; n <= max_rank; ++n) out.push_back({f, n});
    };
    push(Family::A, 1);
    push(Family::B, 2);
    push(Family::C, 2);
    push(Family::D, 4);
    out.push_back({Family::A1Aff, 1});
    push(Family::AAff, 2);
    push(Family::A2Even, 2);
    push(Family::A2EvenDagger, 2);
    push(Family::A2Odd, 3);
    push(Family::BAff, 3);
    push(Family::CAff, 2);
    push(Family::DAff, 4);
    push(Family::DAff2, 2);
    return out;
}

}  // namespace

TEST_CASE("cartan matrix shape over all families") {
    for (const RootSystemType& t : all_types_up_to_rank(6)) {
        CAPTURE(t.name());
        const CartanMatrix& m = cartan_matrix(t);
        for (int i : t.colors()) {
            CHECK(m(i, i) == 2);
            for (int j : t.colors()) {
                if (i == j) continue;
                CHECK(m(i, j) <= 0);
                CHECK((m(i, j) == 0) == (m(j, i) == 0));
            }
        }
    }
}

TEST_CASE("simply-laced families have symmetric matrices") {
    for (const RootSystemType& t : all_types_up_to_rank(6)) {
        if (!t.simply_laced()) continue;
        const CartanMatrix& m = cartan_matrix(t);
        for (int i : t.colors())
            for (int j : t.colors()) CHECK(m(i, j) == m(j, i));
    }
}

TEST_CASE("double-arrow orientations match the diagrams") {
    // C_n: a_{n-1,n} = -2; B_n: a_{n,n-1} = -2.
    CHECK(pairing_root({Family::C, 4}, 3, 4) == -2);
    CHECK(pairing_root({Family::C, 4}, 4, 3) == -1);
    CHECK(pairing_root({Family::B, 4}, 4, 3) == -2);
    CHECK(pairing_root({Family::B, 4}, 3, 4) == -1);
    CHECK(pairing_root({Family::C, 2}, 1, 2) == -2);
    CHECK(pairing_root({Family::B, 2}, 2, 1) == -2);

    // A_2 full matrix.
    RootSystemType a2(Family::A, 2);
    CHECK(pairing_root(a2, 1, 1) == 2);
    CHECK(pairing_root(a2, 1, 2) == -1);
    CHECK(pairing_root(a2, 2, 1) == -1);
    CHECK(pairing_root(a2, 2, 2) == 2);
    CHECK(pairing_root({Family::A, 3}, 1, 3) == 0);

    // Affine double edges, per family picture.
    CHECK(pairing_root({Family::CAff, 2}, 1, 0) == -2);
    CHECK(pairing_root({Family::CAff, 2}, 1, 2) == -2);
    CHECK(pairing_root({Family::A2Even, 2}, 0, 1) == -2);
    CHECK(pairing_root({Family::A2Even, 2}, 1, 2) == -2);
    CHECK(pairing_root({Family::A2EvenDagger, 2}, 1, 0) == -2);
    CHECK(pairing_root({Family::A2EvenDagger, 2}, 2, 1) == -2);
    CHECK(pairing_root({Family::A2Odd, 3}, 2, 3) == -2);
    CHECK(pairing_root({Family::BAff, 3}, 3, 2) == -2);
    CHECK(pairing_root({Family::DAff2, 2}, 0, 1) == -2);
    CHECK(pairing_root({Family::DAff2, 2}, 2, 1) == -2);
    CHECK(pairing_root({Family::A1Aff, 1}, 0, 1) == -2);
    CHECK(pairing_root({Family::A1Aff, 1}, 1, 0) == -2);
}

TEST_CASE("dagger family is the transpose of A_{2n}^(2) under identical labels") {
    for (int n = 2; n <= 5; ++n) {
        RootSystemType plain(Family::A2Even, n), dag(Family::A2EvenDagger, n);
        const CartanMatrix& a = cartan_matrix(plain);
        const CartanMatrix& b = cartan_matrix(dag);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) CHECK(a(i, j) == b(j, i));
    }
}

TEST_CASE("pairing is coefficient extraction") {
    RootSystemType a2(Family::A, 2);
    CHECK(pairing(a2, 1, WeightVector::fundamental(1)) == 1);
    CHECK(pairing(a2, 2, WeightVector::fundamental(1)) == 0);
    RootSystemType c2(Family::C, 2);
    WeightVector w = WeightVector::fundamental(1) * 2 + WeightVector::fundamental(2);
    CHECK(pairing(c2, 1, w) == 2);
    CHECK_THROWS_AS(pairing(c2, 0, w), std::invalid_argument);  // 0 not a finite color
    WeightVector bad = WeightVector::fundamental(5);
    CHECK_THROWS_AS(pairing(c2, 1, bad), std::invalid_argument);
}

TEST_CASE("rank bounds are enforced") {
    CHECK_THROWS_AS(RootSystemType(Family::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType(Family::C, 1), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType(Family::A2Odd, 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType(Family::BAff, 2), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType(Family::DAff2, 1), std::invalid_argument);
    CHECK_NOTHROW(RootSystemType(Family::A, 1));
    CHECK_NOTHROW(RootSystemType(Family::DAff2, 2));
}

TEST_CASE("type string round trip") {
    const char* names[] = {"A3", "C2", "D4", "A2~1", "A4~2", "A4~2d",
                           "A5~2", "B3~1", "C2~1", "D4~1", "D3~2", "A1~1"};
    for (const char* s : names) {
        RootSystemType t = RootSystemType::parse(s);
        CHECK(t.name() == s);
    }
    CHECK(RootSystemType::parse("A4~2").family == Family::A2Even);
    CHECK(RootSystemType::parse("A4~2").rank == 2);
    CHECK(RootSystemType::parse("A5~2").family == Family::A2Odd);
    CHECK(RootSystemType::parse("A5~2").rank == 3);
    CHECK(RootSystemType::parse("D3~2").family == Family::DAff2);
    CHECK(RootSystemType::parse("D3~2").rank == 2);
    CHECK(RootSystemType::parse("A1~1").family == Family::A1Aff);
    CHECK_THROWS_AS(RootSystemType::parse("E6"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType::parse("A3~2d"), std::invalid_argument);
    CHECK_THROWS_AS(RootSystemType::parse("~1"), std::invalid_argument);
}

TEST_CASE("dual Kac labels are the minimal positive left null vector") {
    for (const RootSystemType& t : all_types_up_to_rank(6)) {
        if (!t.is_affine()) continue;
        CAPTURE(t.name());
        const CartanMatrix& m = cartan_matrix(t);
        const auto& labels = dual_kac_labels(t);
        REQUIRE(labels.size() == static_cast<std::size_t>(t.rank) + 1);
        Coeff g = 0;
        for (Coeff v : labels) {
            CHECK(v > 0);
            g = g == 0 ? v : std::gcd(g, v);
        }
        CHECK(g == 1);  // minimality
        for (int j : t.colors()) {
            Coeff dot = 0;
            for (int i : t.colors()) dot += labels[static_cast<std::size_t>(i)] * m(i, j);
            CHECK(dot == 0);
        }
    }
}

TEST_CASE("level examples") {
    CHECK(level({Family::AAff, 2}, WeightVector::fundamental(0)) == 1);
    CHECK(level({Family::CAff, 2}, WeightVector::fundamental(1)) == 1);
    CHECK(level({Family::AAff, 2}, WeightVector::fundamental(0) * 2) ==
          2 * level({Family::AAff, 2}, WeightVector::fundamental(0)));
    // A_{2n}^(2): only Lambda_0 has level 1; the dagger flips that to Lambda_n.
    CHECK(level({Family::A2Even, 2}, WeightVector::fundamental(0)) == 1);
    CHECK(level({Family::A2Even, 2}, WeightVector::fundamental(2)) == 2);
    CHECK(level({Family::A2EvenDagger, 2}, WeightVector::fundamental(2)) == 1);
    CHECK(level({Family::A2EvenDagger, 2}, WeightVector::fundamental(0)) == 2);
    CHECK_THROWS_AS(level({Family::A, 2}, WeightVector::fundamental(1)), std::invalid_argument);
    WeightVector neg;
    neg.set(0, -1);
    CHECK_THROWS_AS(level({Family::AAff, 2}, neg), std::invalid_argument);
}

TEST_CASE("D4 subdiagram detection") {
    CHECK(has_d4_subdiagram({Family::D, 4}));
    CHECK(has_d4_subdiagram({Family::D, 5}));
    CHECK(has_d4_subdiagram({Family::DAff, 4}));
    CHECK(has_d4_subdiagram({Family::BAff, 4}));
    CHECK(has_d4_subdiagram({Family::A2Odd, 4}));
    CHECK_FALSE(has_d4_subdiagram({Family::A, 4}));
    CHECK_FALSE(has_d4_subdiagram({Family::B, 3}));
    CHECK_FALSE(has_d4_subdiagram({Family::BAff, 3}));
    CHECK_FALSE(has_d4_subdiagram({Family::A2Odd, 3}));
    CHECK_FALSE(has_d4_subdiagram({Family::CAff, 4}));
    CHECK_FALSE(has_d4_subdiagram({Family::DAff2, 4}));
}

TEST_CASE("weight vector arithmetic and formatting") {
    WeightVector w;
    CHECK(w.zero());
    CHECK(w.str() == "0");
    w = WeightVector::fundamental(0) + WeightVector::fundamental(3) * 2;
    CHECK(w.str() == "L0+2L3");
    w -= WeightVector::fundamental(0);
    CHECK(w[0] == 0);
    CHECK(w.coeffs().size() == 1);  // zero entries erased
    CHECK(w.dominant());
    w.add(1, -3);
    CHECK_FALSE(w.dominant());
    CHECK(w.total() == -1);
}
