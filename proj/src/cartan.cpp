#include "crystal/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

struct FamilyInfo {
    const char* letter;  // base letter for the name
    int min_rank;
    bool affine;
    int twist;  // 0 finite, 1 untwisted, 2 twisted
};

const FamilyInfo& family_info(Family f) {
    static const std::map<Family, FamilyInfo> table = {
        {Family::A, {"A", 1, false, 0}},
        {Family::B, {"B", 2, false, 0}},
        {Family::C, {"C", 2, false, 0}},
        {Family::D, {"D", 4, false, 0}},
        {Family::A1Aff, {"A", 1, true, 1}},
        {Family::AAff, {"A", 2, true, 1}},
        {Family::A2Even, {"A", 2, true, 2}},
        {Family::A2EvenDagger, {"A", 2, true, 2}},
        {Family::A2Odd, {"A", 3, true, 2}},
        {Family::BAff, {"B", 3, true, 1}},
        {Family::CAff, {"C", 2, true, 1}},
        {Family::DAff, {"D", 4, true, 1}},
        {Family::DAff2, {"D", 2, true, 2}},
    };
    return table.at(f);
}

}  // namespace

RootSystemType::RootSystemType(Family f, int n) : family(f), rank(n) {
    const FamilyInfo& info = family_info(f);
    if (n < info.min_rank)
        throw std::invalid_argument("rank " + std::to_string(n) + " out of range for family " +
                                    RootSystemType{f, info.min_rank}.name());
    if (f == Family::A1Aff && n != 1)
        throw std::invalid_argument("A_1^(1) has rank 1");
}

bool RootSystemType::is_affine() const { return family_info(family).affine; }

std::vector<int> RootSystemType::colors() const {
    std::vector<int> out;
    for (int i = min_color(); i <= max_color(); ++i) out.push_back(i);
    return out;
}

bool RootSystemType::simply_laced() const {
    switch (family) {
        case Family::A:
        case Family::D:
        case Family::AAff:
        case Family::DAff:
            return true;
        default:
            return false;
    }
}

std::string RootSystemType::name() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(rank);
        case Family::B: return "B" + std::to_string(rank);
        case Family::C: return "C" + std::to_string(rank);
        case Family::D: return "D" + std::to_string(rank);
        case Family::A1Aff: return "A1~1";
        case Family::AAff: return "A" + std::to_string(rank) + "~1";
        case Family::BAff: return "B" + std::to_string(rank) + "~1";
        case Family::CAff: return "C" + std::to_string(rank) + "~1";
        case Family::DAff: return "D" + std::to_string(rank) + "~1";
        case Family::A2Even: return "A" + std::to_string(2 * rank) + "~2";
        case Family::A2EvenDagger: return "A" + std::to_string(2 * rank) + "~2d";
        case Family::A2Odd: return "A" + std::to_string(2 * rank - 1) + "~2";
        case Family::DAff2: return "D" + std::to_string(rank + 1) + "~2";
    }
    throw std::logic_error("unreachable");
}

RootSystemType RootSystemType::parse(const std::string& s) {
    auto fail = [&]() -> RootSystemType {
        throw std::invalid_argument("unknown type string: '" + s + "'");
    };
    if (s.size() < 2) fail();
    char letter = s[0];
    std::size_t pos = 1;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == 1) fail();
    int m = std::stoi(s.substr(1, pos - 1));
    std::string suffix = s.substr(pos);

    if (suffix.empty()) {
        switch (letter) {
            case 'A': return {Family::A, m};
            case 'B': return {Family::B, m};
            case 'C': return {Family::C, m};
            case 'D': return {Family::D, m};
        }
        fail();
    }
    if (suffix == "~1") {
        switch (letter) {
            case 'A': return m == 1 ? RootSystemType{Family::A1Aff, 1} : RootSystemType{Family::AAff, m};
            case 'B': return {Family::BAff, m};
            case 'C': return {Family::CAff, m};
            case 'D': return {Family::DAff, m};
        }
        fail();
    }
    if (suffix == "~2") {
        if (letter == 'A') {
            if (m % 2 == 0) return {Family::A2Even, m / 2};
            return {Family::A2Odd, (m + 1) / 2};
        }
        if (letter == 'D') return {Family::DAff2, m - 1};
        fail();
    }
    if (suffix == "~2d" && letter == 'A') {
        if (m % 2 != 0) fail();
        return {Family::A2EvenDagger, m / 2};
    }
    return fail();
}

CartanMatrix::CartanMatrix(int min_color, int num_colors) : lo_(min_color), n_(num_colors) {
    a_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = lo_; i < lo_ + n_; ++i) at(i, i) = 2;
}

std::size_t CartanMatrix::idx(int i, int j) const {
    int r = i - lo_, c = j - lo_;
    if (r < 0 || r >= n_ || c < 0 || c >= n_) throw std::out_of_range("color out of range");
    return static_cast<std::size_t>(r) * n_ + c;
}

namespace {

void single_bond(CartanMatrix& m, int i, int j) {
    m.at(i, j) = -1;
    m.at(j, i) = -1;
}

// Double bond with the arrowhead at j: a_{j,i} = -2, a_{i,j} = -1.
void double_bond_toward(CartanMatrix& m, int j, int i) {
    m.at(j, i) = -2;
    m.at(i, j) = -1;
}

CartanMatrix build_cartan(const RootSystemType& t) {
    int n = t.rank;
    CartanMatrix m(t.min_color(), t.num_colors());
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) single_bond(m, i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, n, n - 1);  // "Because a_{n,n-1} = -2"
            break;
        case Family::C:
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, n - 1, n);  // "Because a_{n-1,n} = -2"
            break;
        case Family::D:
            for (int i = 1; i < n - 2; ++i) single_bond(m, i, i + 1);
            single_bond(m, n - 2, n - 1);
            single_bond(m, n - 2, n);
            break;
        case Family::A1Aff:
            m.at(0, 1) = -2;
            m.at(1, 0) = -2;
            break;
        case Family::AAff:
            for (int i = 0; i < n; ++i) single_bond(m, i, i + 1);
            single_bond(m, 0, n);
            break;
        case Family::A2Even:
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, 0, 1);
            double_bond_toward(m, n - 1, n);
            break;
        case Family::A2EvenDagger:
            // Transpose of A2Even under identical labels: both arrows flipped.
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, 1, 0);
            double_bond_toward(m, n, n - 1);
            break;
        case Family::A2Odd:
            single_bond(m, 0, 2);
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, n - 1, n);
            break;
        case Family::BAff:
            single_bond(m, 0, 2);
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, n, n - 1);
            break;
        case Family::CAff:
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, 1, 0);
            double_bond_toward(m, n - 1, n);
            break;
        case Family::DAff:
            single_bond(m, 0, 2);
            for (int i = 1; i < n - 2; ++i) single_bond(m, i, i + 1);
            single_bond(m, n - 2, n - 1);
            single_bond(m, n - 2, n);
            break;
        case Family::DAff2:
            for (int i = 1; i < n - 1; ++i) single_bond(m, i, i + 1);
            double_bond_toward(m, 0, 1);
            double_bond_toward(m, n, n - 1);
            break;
    }
    return m;
}

}  // namespace

const CartanMatrix& cartan_matrix(const RootSystemType& t) {
    static std::map<RootSystemType, CartanMatrix> cache;
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, build_cartan(t)).first;
    return it->second;
}

int pairing_root(const RootSystemType& t, int i, int j) {
    if (!t.valid_color(i) || !t.valid_color(j))
        throw std::invalid_argument("color out of range for " + t.name());
    return cartan_matrix(t)(i, j);
}

Coeff pairing(const RootSystemType& t, int i, const WeightVector& w) {
    if (!t.valid_color(i))
        throw std::invalid_argument("color " + std::to_string(i) + " not in index set of " + t.name());
    for (const auto& [c, v] : w.coeffs())
        if (!t.valid_color(c))
            throw std::invalid_argument("weight has color " + std::to_string(c) + " outside " + t.name());
    return w[i];
}

const std::vector<Coeff>& dual_kac_labels(const RootSystemType& t) {
    if (!t.is_affine()) throw std::invalid_argument("level undefined: " + t.name() + " is finite");
    static std::map<RootSystemType, std::vector<Coeff>> cache;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;

    int n = t.rank;
    std::vector<Coeff> a(static_cast<std::size_t>(n) + 1, 0);
    switch (t.family) {
        case Family::A1Aff:
        case Family::AAff:
        case Family::CAff:
            a.assign(n + 1, 1);
            break;
        case Family::BAff:  // (1,1,2,...,2,1)
            a.assign(n + 1, 2);
            a[0] = a[1] = a[n] = 1;
            break;
        case Family::DAff:  // (1,1,2,...,2,1,1)
            a.assign(n + 1, 2);
            a[0] = a[1] = a[n - 1] = a[n] = 1;
            break;
        case Family::A2Even:  // (1,2,...,2)
            a.assign(n + 1, 2);
            a[0] = 1;
            break;
        case Family::A2EvenDagger:  // (2,...,2,1)
            a.assign(n + 1, 2);
            a[n] = 1;
            break;
        case Family::A2Odd:  // (1,1,2,...,2)
            a.assign(n + 1, 2);
            a[0] = a[1] = 1;
            break;
        case Family::DAff2:  // (1,2,...,2,1)
            a.assign(n + 1, 2);
            a[0] = a[n] = 1;
            break;
        default:
            throw std::logic_error("unreachable");
    }
    return cache.emplace(t, std::move(a)).first->second;
}

Coeff level(const RootSystemType& t, const WeightVector& w) {
    const auto& labels = dual_kac_labels(t);
    if (!w.dominant()) throw std::invalid_argument("level requires a dominant weight");
    Coeff lv = 0;
    for (const auto& [c, v] : w.coeffs()) {
        if (!t.valid_color(c))
            throw std::invalid_argument("weight has color outside " + t.name());
        lv += labels[static_cast<std::size_t>(c)] * v;
    }
    return lv;
}

bool has_d4_subdiagram(const RootSystemType& t) {
    const CartanMatrix& m = cartan_matrix(t);
    for (int i : t.colors()) {
        int single_neighbors = 0;
        for (int j : t.colors())
            if (i != j && m(i, j) == -1 && m(j, i) == -1) ++single_neighbors;
        if (single_neighbors >= 3) return true;
    }
    return false;
}

// ---- WeightVector ---------------------------------------------------------

WeightVector WeightVector::fundamental(int color) {
    WeightVector w;
    w.set(color, 1);
    return w;
}

Coeff WeightVector::operator[](int color) const {
    auto it = c_.find(color);
    return it == c_.end() ? 0 : it->second;
}

void WeightVector::set(int color, Coeff value) {
    if (value == 0)
        c_.erase(color);
    else
        c_[color] = value;
}

void WeightVector::add(int color, Coeff delta) { set(color, (*this)[color] + delta); }

WeightVector& WeightVector::operator+=(const WeightVector& o) {
    for (const auto& [c, v] : o.c_) add(c, v);
    return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
    for (const auto& [c, v] : o.c_) add(c, -v);
    return *this;
}

WeightVector WeightVector::operator*(Coeff k) const {
    WeightVector out;
    if (k != 0)
        for (const auto& [c, v] : c_) out.set(c, v * k);
    return out;
}

bool WeightVector::dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& p) { return p.second >= 0; });
}

Coeff WeightVector::total() const {
    Coeff s = 0;
    for (const auto& [c, v] : c_) s += v;
    return s;
}

std::string WeightVector::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, v] : c_) {
        if (!first && v > 0) os << "+";
        if (v == -1)
            os << "-";
        else if (v != 1)
            os << v;
        os << "L" << c;
        first = false;
    }
    return os.str();
}

}  // namespace crystal
