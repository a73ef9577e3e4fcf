#include "crystal/tensor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crystal {

// ---- Factor ----------------------------------------------------------------

Factor Factor::perfect(const PerfectCrystal& pc, int node) {
    Factor f;
    f.kind_ = Kind::PerfectNode;
    f.pc_ = &pc;
    f.pc_node_ = node;
    return f;
}

Factor Factor::crystal(const RootSystemType& t, CrystalNode state) {
    Factor f;
    f.kind_ = Kind::CrystalState;
    f.type_ = t;
    f.state_ = std::move(state);
    return f;
}

Factor Factor::highest(WeightVector lambda) {
    Factor f;
    f.kind_ = Kind::HighestWeight;
    f.hw_ = std::move(lambda);
    return f;
}

int Factor::eps(int color) const {
    switch (kind_) {
        case Kind::PerfectNode: return pc_->eps(pc_node_, color);
        case Kind::CrystalState: return node_eps(*type_, state_, color);
        case Kind::HighestWeight: return 0;
    }
    return 0;
}

int Factor::phi(int color) const {
    switch (kind_) {
        case Kind::PerfectNode: return pc_->phi(pc_node_, color);
        case Kind::CrystalState: return node_phi(*type_, state_, color);
        case Kind::HighestWeight: return static_cast<int>(hw_[color]);
    }
    return 0;
}

std::optional<Factor> Factor::e(int color) const {
    switch (kind_) {
        case Kind::PerfectNode: {
            int src = pc_->in_arrow(pc_node_, color);
            if (src < 0) return std::nullopt;
            return perfect(*pc_, src);
        }
        case Kind::CrystalState: {
            auto up = node_e(*type_, state_, color);
            if (!up) return std::nullopt;
            return crystal(*type_, std::move(*up));
        }
        case Kind::HighestWeight: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Factor> Factor::f(int color) const {
    switch (kind_) {
        case Kind::PerfectNode: {
            int dst = pc_->out_arrow(pc_node_, color);
            if (dst < 0) return std::nullopt;
            return perfect(*pc_, dst);
        }
        case Kind::CrystalState: {
            auto down = node_f(*type_, state_, color);
            if (!down) return std::nullopt;
            return crystal(*type_, std::move(*down));
        }
        case Kind::HighestWeight:
            throw std::runtime_error("f applied to an abstract highest weight factor");
    }
    return std::nullopt;
}

WeightVector Factor::wt() const {
    switch (kind_) {
        case Kind::PerfectNode: return pc_->wt(pc_node_);
        case Kind::CrystalState: {
            WeightVector w;
            for (int i : type_->colors()) w.set(i, node_wt_pairing(*type_, state_, i));
            return w;
        }
        case Kind::HighestWeight: return hw_;
    }
    return {};
}

bool Factor::operator==(const Factor& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::PerfectNode: return pc_ == o.pc_ && pc_node_ == o.pc_node_;
        case Kind::CrystalState: return type_ == o.type_ && state_ == o.state_;
        case Kind::HighestWeight: return hw_ == o.hw_;
    }
    return false;
}

std::string Factor::str() const {
    switch (kind_) {
        case Kind::PerfectNode: return pc_->node_name(pc_node_);
        case Kind::CrystalState: return state_.id();
        case Kind::HighestWeight: return "v(" + hw_.str() + ")";
    }
    return "?";
}

std::string TensorNode::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " (x) ";
        s += factors[i].str();
    }
    return s;
}

// ---- Signature rule ---------------------------------------------------------

namespace {

struct Signature {
    int eps = 0;
    int phi = 0;
    int e_slot = -1;  // factor owning the topmost surviving minus
    int f_slot = -1;  // factor owning the deepest surviving plus
};

// Word  -^{eps_1} +^{phi_1} ... -^{eps_N} +^{phi_N}  with "+-" pairs
// cancelled; afterwards the stack reads -^a +^b.
Signature signature(const TensorNode& tn, int color) {
    static thread_local std::vector<std::pair<int, char>> stack;
    stack.clear();
    for (std::size_t s = 0; s < tn.factors.size(); ++s) {
        int ne = tn.factors[s].eps(color);
        int np = tn.factors[s].phi(color);
        for (int r = 0; r < ne; ++r) {
            if (!stack.empty() && stack.back().second == '+')
                stack.pop_back();
            else
                stack.push_back({static_cast<int>(s), '-'});
        }
        for (int r = 0; r < np; ++r) stack.push_back({static_cast<int>(s), '+'});
    }
    Signature sig;
    for (const auto& [slot, sign] : stack) {
        if (sign == '-') {
            ++sig.eps;
            sig.e_slot = slot;
        } else {
            ++sig.phi;
            if (sig.f_slot < 0) sig.f_slot = slot;
        }
    }
    return sig;
}

}  // namespace

int tensor_eps(const TensorNode& tn, int color) { return signature(tn, color).eps; }
int tensor_phi(const TensorNode& tn, int color) { return signature(tn, color).phi; }

WeightVector tensor_eps_vector(const TensorNode& tn, const RootSystemType& t) {
    WeightVector w;
    for (int i : t.colors()) w.set(i, tensor_eps(tn, i));
    return w;
}

WeightVector tensor_phi_vector(const TensorNode& tn, const RootSystemType& t) {
    WeightVector w;
    for (int i : t.colors()) w.set(i, tensor_phi(tn, i));
    return w;
}

WeightVector tensor_wt(const TensorNode& tn) {
    WeightVector w;
    for (const Factor& f : tn.factors) w += f.wt();
    return w;
}

Coeff tensor_eps_total(const TensorNode& tn, const RootSystemType& t) {
    Coeff s = 0;
    for (int i : t.colors()) s += tensor_eps(tn, i);
    return s;
}

std::optional<int> tensor_e_slot(const TensorNode& tn, int color) {
    Signature sig = signature(tn, color);
    if (sig.eps == 0) return std::nullopt;
    return sig.e_slot;
}

std::optional<int> tensor_f_slot(const TensorNode& tn, int color) {
    Signature sig = signature(tn, color);
    if (sig.phi == 0) return std::nullopt;
    return sig.f_slot;
}

std::optional<TensorNode> tensor_e(const TensorNode& tn, int color) {
    auto slot = tensor_e_slot(tn, color);
    if (!slot) return std::nullopt;
    auto up = tn.factors[static_cast<std::size_t>(*slot)].e(color);
    if (!up) throw std::logic_error("signature chose a factor with eps 0");
    TensorNode out = tn;
    out.factors[static_cast<std::size_t>(*slot)] = std::move(*up);
    return out;
}

std::optional<TensorNode> tensor_f(const TensorNode& tn, int color) {
    auto slot = tensor_f_slot(tn, color);
    if (!slot) return std::nullopt;
    auto down = tn.factors[static_cast<std::size_t>(*slot)].f(color);
    if (!down) throw std::logic_error("signature chose a factor with phi 0");
    TensorNode out = tn;
    out.factors[static_cast<std::size_t>(*slot)] = std::move(*down);
    return out;
}

std::pair<WeightVector, WeightVector> box_tensor_stats(const TensorNode& boxes,
                                                       const RootSystemType& t) {
    return {tensor_eps_vector(boxes, t), tensor_phi_vector(boxes, t)};
}

// ---- KMN decomposition ------------------------------------------------------

std::vector<KmnSummand> kmn_decompose(const RootSystemType& t, const WeightVector& lambda,
                                      const PerfectCrystal& pc) {
    if (level(t, lambda) < 1)
        throw std::invalid_argument("kmn_decompose: level(" + lambda.str() +
                                    ") below the level of the perfect crystal");
    std::vector<KmnSummand> out;
    for (int b = 0; b < pc.node_count; ++b) {
        bool ok = true;
        for (int i : t.colors())
            if (pc.eps(b, i) > pairing(t, i, lambda)) {
                ok = false;
                break;
            }
        if (ok) out.push_back({b, lambda + pc.wt(b)});
    }
    return out;
}

KmnComponentCheck kmn_component_check(const RootSystemType& t, const WeightVector& lambda,
                                      const PerfectCrystal& pc, int depth) {
    auto expected = kmn_decompose(t, lambda, pc);
    CrystalGraph g = generate(t, lambda, depth);

    const int nb = pc.node_count;
    auto pair_id = [&](int x, int b) { return x * nb + b; };
    std::vector<int> uf(static_cast<std::size_t>(g.node_count()) * nb);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (uf[static_cast<std::size_t>(a)] != a) {
            uf[static_cast<std::size_t>(a)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(a)])];
            a = uf[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { uf[static_cast<std::size_t>(find(a))] = find(b); };

    for (int x = 0; x < g.node_count(); ++x) {
        for (int b = 0; b < nb; ++b) {
            for (int i : t.colors()) {
                // Binary tensor rule: f acts on the left (crystal) factor iff
                // phi_i(left) > eps_i(right).  Left moves that would leave
                // the truncation are skipped.
                if (g.phi(x, i) > pc.eps(b, i)) {
                    int xf = g.interior(x) ? g.out_node(x, i) : -1;
                    if (xf >= 0) unite(pair_id(x, b), pair_id(xf, b));
                } else {
                    int bf = pc.out_arrow(b, i);
                    if (bf >= 0) unite(pair_id(x, b), pair_id(x, bf));
                }
            }
        }
    }

    KmnComponentCheck res;
    std::map<int, std::vector<std::pair<int, int>>> highest_by_root;  // root -> (x, b)
    std::map<int, long long> comp_sizes;
    for (int x = 0; x < g.node_count(); ++x)
        for (int b = 0; b < nb; ++b) {
            int root = find(pair_id(x, b));
            comp_sizes[root] += 1;
            bool hw = true;
            for (int i : t.colors()) {
                if (g.eps(x, i) != 0 || pc.eps(b, i) > g.phi(x, i)) {
                    hw = false;
                    break;
                }
            }
            if (hw) highest_by_root[root].push_back({x, b});
        }
    res.components = static_cast<long long>(comp_sizes.size());

    std::ostringstream detail;
    bool ok = res.components == static_cast<long long>(expected.size());
    if (!ok)
        detail << "component count " << res.components << " != |B^{<=lambda}| "
               << expected.size() << "; ";
    std::vector<KmnSummand> found;
    for (auto& [root, hws] : highest_by_root) {
        if (hws.size() != 1) {
            ok = false;
            detail << "component with " << hws.size() << " highest elements; ";
            continue;
        }
        auto [x, b] = hws.front();
        if (x != g.highest_idx) {
            ok = false;
            detail << "component highest pair is not v_lambda (x) b; ";
        }
        WeightVector w = g.lambda + pc.wt(b);
        found.push_back({b, w});
    }
    if (highest_by_root.size() != comp_sizes.size()) {
        ok = false;
        detail << "component without a highest element; ";
    }
    std::sort(found.begin(), found.end(),
              [](const KmnSummand& a, const KmnSummand& b) { return a.pc_node < b.pc_node; });
    std::vector<KmnSummand> want = expected;
    std::sort(want.begin(), want.end(),
              [](const KmnSummand& a, const KmnSummand& b) { return a.pc_node < b.pc_node; });
    if (found.size() != want.size()) {
        ok = false;
    } else {
        for (std::size_t i = 0; i < found.size(); ++i)
            if (found[i].pc_node != want[i].pc_node || !(found[i].weight == want[i].weight)) {
                ok = false;
                detail << "summand mismatch at pc node " << found[i].pc_node << "; ";
            }
    }
    res.found = std::move(found);
    res.matches = ok;
    res.detail = detail.str();
    return res;
}

// ---- psi -------------------------------------------------------------------

TensorNode psi_highest(const CrystalGraph& g_lambda,
                       const std::vector<const PerfectCrystal*>& pcs, const WeightVector& mu) {
    const RootSystemType& t = g_lambda.type;
    std::vector<TensorNode> hits;
    std::vector<int> pick(pcs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int x) {
        if (slot == pcs.size()) {
            TensorNode tn;
            tn.factors.push_back(Factor::crystal(t, g_lambda.nodes[x].state));
            for (std::size_t s = 0; s < pcs.size(); ++s)
                tn.factors.push_back(Factor::perfect(*pcs[s], pick[s]));
            for (int i : t.colors())
                if (tensor_eps(tn, i) != 0) return;
            if (!(tensor_wt(tn) == mu)) return;
            hits.push_back(std::move(tn));
            return;
        }
        for (int b = 0; b < pcs[slot]->node_count; ++b) {
            pick[slot] = b;
            rec(slot + 1, x);
        }
    };
    for (int x = 0; x < g_lambda.node_count(); ++x) rec(0, x);
    if (hits.empty())
        throw std::runtime_error("no component of weight " + mu.str() + " found in truncation");
    if (hits.size() > 1)
        throw std::runtime_error("several highest elements of weight " + mu.str() +
                                 " in truncation");
    return hits.front();
}

TensorNode psi_embed(const CrystalGraph& g_lambda, const std::vector<const PerfectCrystal*>& pcs,
                     const CrystalGraph& g_mu, int node) {
    TensorNode image = psi_highest(g_lambda, pcs, g_mu.lambda);
    auto walks = walks_to_highest(g_mu, node);
    if (walks.empty()) throw std::runtime_error("node has no walk from the highest weight node");
    const std::vector<int>& w = walks.front();
    for (std::size_t r = w.size(); r-- > 0;) {
        auto next = tensor_f(image, w[r]);
        if (!next)
            throw std::runtime_error("walk replay died in the product at color " +
                                     std::to_string(w[r]));
        image = std::move(*next);
    }
    return image;
}

// ---- Existence construction --------------------------------------------------

namespace {

WalkReport check_one_realization(const PerfectCrystal& pc, const Walk& w,
                                 const std::vector<int>& path) {
    const RootSystemType& t = pc.context;
    const CartanMatrix& a = cartan_matrix(t);
    const int k = w.length();

    WalkReport rep;
    rep.walk = w;
    rep.k = k;
    rep.m = repeat_count_m(t, w);
    rep.lambda = pc.eps_vector(path.front());
    rep.mu = pc.phi_vector(path[static_cast<std::size_t>(k) - 1]);
    for (int c : t.colors())
        if (pc.in_arrow(path.front(), c) >= 0 && a(c, w.colors[0]) >= 0) rep.boundary = true;
    if (k >= 2 && a(w.colors[static_cast<std::size_t>(k) - 2],
                    w.colors[static_cast<std::size_t>(k) - 1]) >= 0)
        rep.boundary = true;

    auto keep = [&](int r) {  // does [i_r] survive in the box tensor?
        if (r == k) return true;
        return a(w.colors[static_cast<std::size_t>(r) - 1], w.colors[static_cast<std::size_t>(r)]) < 0;
    };

    TensorNode t0;  // v_lambda (x) [i_0] (x) ... (x) [i_{k-1}]
    t0.factors.push_back(Factor::highest(rep.lambda));
    t0.factors.push_back(Factor::perfect(pc, path.front()));
    for (int r = 1; r <= k - 1; ++r)
        if (keep(r)) t0.factors.push_back(Factor::perfect(pc, path[static_cast<std::size_t>(r)]));

    TensorNode t1;  // v_lambda (x) [i_1] (x) ... (x) [i_k]
    t1.factors.push_back(Factor::highest(rep.lambda));
    for (int r = 1; r <= k; ++r)
        if (keep(r)) t1.factors.push_back(Factor::perfect(pc, path[static_cast<std::size_t>(r)]));

    std::ostringstream detail;

    // Clause 1: t0 is a highest weight node of weight mu.
    rep.hw_check = true;
    for (int i : t.colors())
        if (tensor_eps(t0, i) != 0) {
            rep.hw_check = false;
            detail << "eps_" << i << "(t0) = " << tensor_eps(t0, i) << " != 0; ";
        }
    if (!(tensor_wt(t0) == rep.mu)) {
        rep.hw_check = false;
        detail << "wt(t0) = " << tensor_wt(t0).str() << " != mu = " << rep.mu.str() << "; ";
    }

    // Clause 2: f_{i_1} ... f_{i_k} t0 == t1, applying f_{i_k} first.
    rep.replay_check = true;
    TensorNode cur = t0;
    for (int r = k; r >= 1 && rep.replay_check; --r) {
        int color = w.colors[static_cast<std::size_t>(r) - 1];
        auto slot = tensor_f_slot(cur, color);
        if (!slot) {
            rep.replay_check = false;
            detail << "f_" << color << " kills the node at step " << r << "; ";
            break;
        }
        if (!cur.factors[static_cast<std::size_t>(*slot)].can_apply()) {
            rep.replay_check = false;
            detail << "f_" << color << " would act on v_lambda at step " << r << "; ";
            break;
        }
        cur = *tensor_f(cur, color);
    }
    if (rep.replay_check && !(cur == t1)) {
        rep.replay_check = false;
        detail << "replay reached " << cur.str() << " instead of " << t1.str() << "; ";
    }

    // Clause 3: the constructed node is nonzero (replay succeeded) and the
    // singularity statements that apply at this length.
    rep.singular_check = true;
    auto singular = [&](const TensorNode& tn) { return tensor_eps_total(tn, t) <= 1; };
    if (k == 1) {
        if (!singular(t1)) {
            rep.singular_check = false;
            detail << "t1 not singular, eps = " << tensor_eps_vector(t1, t).str() << "; ";
        }
    } else if (k >= 3 &&
               a(w.colors[0], w.colors[1]) < 0 && a(w.colors[1], w.colors[2]) < 0) {
        if (!singular(t1)) {
            rep.singular_check = false;
            detail << "t1 not singular, eps = " << tensor_eps_vector(t1, t).str() << "; ";
        }
        auto parent = tensor_e(t1, w.colors[0]);
        if (!parent) {
            rep.singular_check = false;
            detail << "e_" << w.colors[0] << "(t1) = 0, no parent; ";
        } else if (!singular(*parent)) {
            rep.singular_check = false;
            detail << "parent not singular, eps = " << tensor_eps_vector(*parent, t).str()
                   << "; ";
        }
    }

    rep.detail = detail.str();
    return rep;
}

}  // namespace

WalkReport construct_walk_node(const PerfectCrystal& pc, const Walk& w) {
    const int k = w.length();
    if (k < 1) throw std::invalid_argument("construct_walk_node: empty walk");
    auto paths = realizations(pc, w);
    if (paths.empty())
        throw std::invalid_argument("walk " + w.str() + " is not consecutive on " + pc.label);
    if (k >= 2 && cartan_matrix(pc.context)(w.colors[0], w.colors[1]) >= 0)
        throw std::invalid_argument("walk " + w.str() + " has a_{i1,i2} >= 0; node would not be singular");
    if (k >= 2 && paths.size() > 1)
        throw std::runtime_error("walk " + w.str() + " has an ambiguous realization on " + pc.label);

    WalkReport agg = check_one_realization(pc, w, paths.front());
    for (std::size_t p = 1; p < paths.size(); ++p) {
        WalkReport rep = check_one_realization(pc, w, paths[p]);
        agg.hw_check = agg.hw_check && rep.hw_check;
        agg.replay_check = agg.replay_check && rep.replay_check;
        agg.singular_check = agg.singular_check && rep.singular_check;
        agg.boundary = agg.boundary || rep.boundary;
        agg.detail += rep.detail;
    }
    return agg;
}

WalkReport construct_walk_node(const RootSystemType& t, const Walk& w) {
    PerfectCrystal pc = b11(t);
    return construct_walk_node(pc, w);
}

}  // namespace crystal
