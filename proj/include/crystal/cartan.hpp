#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace crystal {

// The twelve finite/affine families in scope.  `rank` is the n of the
// family's conventional name, so A2Even with rank 2 is A_4^(2) and
// DAff2 with rank 2 is D_3^(2).
enum class Family {
    A,
    B,
    C,
    D,
    A1Aff,         // A_1^(1)
    AAff,          // A_n^(1), n >= 2
    A2Even,        // A_{2n}^(2)
    A2EvenDagger,  // A_{2n}^(2)+ (both double arrows reversed)
    A2Odd,         // A_{2n-1}^(2)
    BAff,          // B_n^(1)
    CAff,          // C_n^(1)
    DAff,          // D_n^(1)
    DAff2,         // D_{n+1}^(2)
};

// Integer coefficients; desk-scale graphs keep every quantity tiny, and
// overflow is structurally impossible at the depths we generate.
using Coeff = long long;

struct RootSystemType {
    Family family;
    int rank;

    RootSystemType(Family f, int n);  // rejects out-of-range ranks

    bool is_affine() const;
    int min_color() const { return is_affine() ? 0 : 1; }
    int max_color() const { return rank; }
    int num_colors() const { return max_color() - min_color() + 1; }
    std::vector<int> colors() const;
    bool valid_color(int i) const { return i >= min_color() && i <= max_color(); }
    bool simply_laced() const;

    // String form used by the CLI: A3, C2, A2~1, A4~2, A4~2d, D3~2, ...
    std::string name() const;
    static RootSystemType parse(const std::string& s);

    friend bool operator==(const RootSystemType& a, const RootSystemType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend auto operator<=>(const RootSystemType& a, const RootSystemType& b) = default;
};

// Dense integer matrix indexed by the type's color range.
class CartanMatrix {
public:
    CartanMatrix(int min_color, int num_colors);

    int operator()(int i, int j) const { return a_[idx(i, j)]; }
    int& at(int i, int j) { return a_[idx(i, j)]; }
    int min_color() const { return lo_; }
    int num_colors() const { return n_; }

private:
    std::size_t idx(int i, int j) const;
    int lo_;
    int n_;
    std::vector<int> a_;
};

// Sparse integer weight over the fundamental weights: absent color = 0.
class WeightVector {
public:
    WeightVector() = default;
    static WeightVector fundamental(int color);

    Coeff operator[](int color) const;
    void set(int color, Coeff value);  // erases on zero
    void add(int color, Coeff delta);

    WeightVector& operator+=(const WeightVector& o);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    WeightVector& operator-=(const WeightVector& o);
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    WeightVector operator*(Coeff k) const;

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.c_ == b.c_;
    }
    friend bool operator<(const WeightVector& a, const WeightVector& b) {
        return a.c_ < b.c_;
    }

    bool zero() const { return c_.empty(); }
    bool dominant() const;  // all coefficients >= 0
    Coeff total() const;    // sum of coefficients
    const std::map<int, Coeff>& coeffs() const { return c_; }

    // "0", "L1", "2L0+L3", ... used in reports and error messages.
    std::string str() const;

private:
    std::map<int, Coeff> c_;
};

const CartanMatrix& cartan_matrix(const RootSystemType& t);

// a_ij = <h_i, alpha_j>.
int pairing_root(const RootSystemType& t, int i, int j);

// <h_i, w> over the Lambda basis, i.e. plain coefficient extraction.
Coeff pairing(const RootSystemType& t, int i, const WeightVector& w);

// Dual Kac labels a_i^v of an affine family, indexed 0..n.  These are the
// coefficients of the canonical central element; the tables are standard
// and are cross-checked in the test suite as the minimal positive left
// null vector of the Cartan matrix.
const std::vector<Coeff>& dual_kac_labels(const RootSystemType& t);

// Level of a dominant affine weight: sum a_i^v * w_i.
Coeff level(const RootSystemType& t, const WeightVector& w);

// True when the Dynkin diagram contains D_4 as a subdiagram, i.e. some
// node has three distinct single-bond neighbors.  Controls the walk
// uniqueness clause of the global theorem.
bool has_d4_subdiagram(const RootSystemType& t);

}  // namespace crystal
