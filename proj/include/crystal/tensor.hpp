#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"
#include "crystal/node.hpp"
#include "crystal/perfect.hpp"

namespace crystal {

// One slot of a tensor product.  Either a node of a perfect crystal, a
// monomial-model crystal node, or an abstract highest weight node v_lambda
// (eps = 0, phi = lambda; e undefined, f unsupported -- the existence
// construction never has to move it, and trying to is itself a finding).
class Factor {
public:
    enum class Kind { PerfectNode, CrystalState, HighestWeight };

    static Factor perfect(const PerfectCrystal& pc, int node);
    static Factor crystal(const RootSystemType& t, CrystalNode state);
    static Factor highest(WeightVector lambda);

    Kind kind() const { return kind_; }
    bool can_apply() const { return kind_ != Kind::HighestWeight; }

    int eps(int color) const;
    int phi(int color) const;
    std::optional<Factor> e(int color) const;
    std::optional<Factor> f(int color) const;
    WeightVector wt() const;

    int perfect_node() const { return pc_node_; }
    const CrystalNode& crystal_state() const { return state_; }

    bool operator==(const Factor& o) const;
    std::string str() const;

private:
    Factor() = default;
    Kind kind_ = Kind::HighestWeight;
    const PerfectCrystal* pc_ = nullptr;
    int pc_node_ = -1;
    std::optional<RootSystemType> type_;
    CrystalNode state_;
    WeightVector hw_;
};

// Ordered factor sequence, leftmost first (the paper's B_2 (x) B_1 has the
// acting-preference factor b_2 on the left).
struct TensorNode {
    std::vector<Factor> factors;
    bool operator==(const TensorNode& o) const { return factors == o.factors; }
    std::string str() const;
};

// eps/phi of the product via the signature rule, which folds the binary
// formulas associatively over the sequence.
int tensor_eps(const TensorNode& tn, int color);
int tensor_phi(const TensorNode& tn, int color);
WeightVector tensor_eps_vector(const TensorNode& tn, const RootSystemType& t);
WeightVector tensor_phi_vector(const TensorNode& tn, const RootSystemType& t);
WeightVector tensor_wt(const TensorNode& tn);
Coeff tensor_eps_total(const TensorNode& tn, const RootSystemType& t);

// Index of the factor e_i / f_i acts on, or nullopt when the operator
// kills the node.
std::optional<int> tensor_e_slot(const TensorNode& tn, int color);
std::optional<int> tensor_f_slot(const TensorNode& tn, int color);

std::optional<TensorNode> tensor_e(const TensorNode& tn, int color);
std::optional<TensorNode> tensor_f(const TensorNode& tn, int color);

// (eps-vector, phi-vector) of a box tensor, for the box-statistics lemma.
std::pair<WeightVector, WeightVector> box_tensor_stats(const TensorNode& boxes,
                                                       const RootSystemType& t);

// --- Kyoto-style decomposition and embedding -------------------------------

struct KmnSummand {
    int pc_node;
    WeightVector weight;  // lambda + wt(b)
};

// B^{<= lambda} with the summand weights.  Requires level(lambda) >= 1.
std::vector<KmnSummand> kmn_decompose(const RootSystemType& t, const WeightVector& lambda,
                                      const PerfectCrystal& pc);

// Desk-scale check: connected components of the truncated product
// B(lambda) (x) pc against the decomposition.
struct KmnComponentCheck {
    long long components = 0;
    std::vector<KmnSummand> found;  // per component: pc node of the highest pair + weight
    bool matches = false;
    std::string detail;
};
KmnComponentCheck kmn_component_check(const RootSystemType& t, const WeightVector& lambda,
                                      const PerfectCrystal& pc, int depth);

// The unique all-eps-zero element of weight mu in B(lambda) (x) pc_1 (x)
// ... (x) pc_k, scanning the truncation.  Throws when absent or ambiguous.
TensorNode psi_highest(const CrystalGraph& g_lambda,
                       const std::vector<const PerfectCrystal*>& pcs, const WeightVector& mu);

// psi_k^{lambda,mu} applied to a node of the truncated B(mu): replay the
// node's walk from the matched highest element.
TensorNode psi_embed(const CrystalGraph& g_lambda, const std::vector<const PerfectCrystal*>& pcs,
                     const CrystalGraph& g_mu, int node);

// --- Existence construction -------------------------------------------------

struct WalkReport {
    Walk walk;
    WeightVector lambda, mu;
    int k = 0, m = 0;
    bool hw_check = false;
    bool replay_check = false;
    bool singular_check = false;
    // The box bookkeeping of the proposition degenerates when the
    // predecessor box is entered by a repeated color (a_{c,i_1} >= 0 for
    // the in-color c of [i_0]; the embedding psi is then undefined, the
    // source fixes it "when it is defined") or when the walk ends inside
    // a repeat (a_{i_{k-1},i_k} >= 0, making the mu reference node a
    // dropped box).  Such walks are reported, not asserted.
    bool boundary = false;
    std::string detail;
    bool pass() const { return hw_check && replay_check && singular_check; }
};

// Builds v_lambda (x) [i_1] (x) ... (x) [i_k] for a consecutive walk and
// verifies the three clauses of the existence proposition.  Throws on
// non-consecutive walks and on a_{i_1,i_2} >= 0 (the excluded case).  A
// length-1 walk may have several realizations; all are checked.
WalkReport construct_walk_node(const PerfectCrystal& pc, const Walk& w);
WalkReport construct_walk_node(const RootSystemType& t, const Walk& w);  // on b11(t)

}  // namespace crystal
