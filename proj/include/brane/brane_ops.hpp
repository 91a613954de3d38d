#pragma once

#include "brane/shriek.hpp"

namespace brane {

using Tuple = std::vector<int>;
using TensorVec = std::map<Tuple, Q>;

// Basis of H^*(M_{S^k}) up to a degree, ordered by degree and then by representative.
struct GradedBasis {
    ModelPtr model;
    int max_degree = 0;
    std::vector<int> degree;
    std::vector<Element> reps;
    std::vector<int> first_of_degree;  // index of the first basis element of each degree (size max_degree+2)

    int size() const { return static_cast<int>(degree.size()); }
    int tuple_degree(const Tuple& t) const;
    std::string label(int i) const;
    std::string tuple_label(const Tuple& t) const;
    std::vector<Tuple> tuples(int arity, int total_degree) const;
    std::vector<Q> coords_of(int i) const;  // coordinates of basis element i within its degree
};

// A linear map between tensor powers of a graded space, stored column by column.
struct TensorOp {
    int src_arity = 1;
    int tgt_arity = 1;
    int degree = 0;
    int max_src_degree = 0;  // columns exist for every source tuple of total degree <= this
    std::map<Tuple, TensorVec> cols;

    TensorVec apply(const TensorVec& v) const;
    TensorVec column(const Tuple& t) const;
};

void add_to(TensorVec& acc, const Tuple& t, const Q& c);
TensorVec scaled(const TensorVec& v, const Q& c);
bool tensor_equal(const TensorVec& a, const TensorVec& b);
// Apply op to the factors [pos, pos + src_arity) of every tuple with the Koszul sign of passing the earlier factors.
TensorVec apply_at(const TensorOp& op, const GradedBasis& H, int pos, const TensorVec& v);
TensorVec swap_factors(const GradedBasis& H, const TensorVec& v);
std::string tensor_str(const TensorVec& v, const std::function<std::string(int)>& label);

struct BraneOperation {
    enum class Kind { ProductDual, CoproductDual, HomologyProduct, HomologyCoproduct };
    Kind kind = Kind::ProductDual;
    int k = 2;
    GorensteinInfo info;
    int shift = 0;  // cohomological degree of the dual operation
    std::shared_ptr<const GradedBasis> H;
    TensorOp op;
    // homology operations: degrees of the shifted basis σ a_i^*
    std::vector<int> shifted_degree;
};

struct PipelineContext;  // cached models and maps of one (V, k)

class BraneEngine {
  public:
    BraneEngine(ModelPtr V, int k, GorensteinInfo info, int cutoff);
    ~BraneEngine();

    const ModelPtr& V() const { return V_; }
    int k() const { return k_; }
    int cutoff() const { return cutoff_; }
    const GorensteinInfo& info() const { return info_; }
    std::shared_ptr<const GradedBasis> basis() const { return H_; }

    BraneOperation product_dual();
    BraneOperation coproduct_dual();

    // Chain-level routes, exposed for inspection.
    Element product_dual_cocycle(const Element& a);   // a: cocycle in M_{S^k}; result in M_{S^k}⊗2
    Element coproduct_dual_cocycle(const Element& c); // c: cocycle in M_{S^k}⊗2; result in M_{S^k}
    const ModelPtr& sphere() const;                   // M_{S^k}
    const ModelPtr& sphere_square() const;            // M_{S^k}⊗2
    Element kunneth(const Tuple& t) const;            // a_i ⊗ a_j as a cocycle of M_{S^k}⊗2
    TensorVec kunneth_coords(const Element& cocycle, int degree) const;

    const ShriekResult& gamma();
    const ShriekResult& delta();

  private:
    ModelPtr V_;
    int k_;
    GorensteinInfo info_;
    int cutoff_;
    std::unique_ptr<PipelineContext> ctx_;
    std::shared_ptr<GradedBasis> H_;
};

BraneOperation brane_product_dual(const ModelPtr& V, int k, const GorensteinInfo& info, int cutoff);
BraneOperation brane_coproduct_dual(const ModelPtr& V, int k, const GorensteinInfo& info, int cutoff);

// Transpose into the dual basis of homology and transport across the m-fold shift with Koszul signs:
// pairing <α⊗β, a⊗b> = (−1)^(|β||a|)<α,a><β,b>, dual maps <f*ξ, a> = (−1)^(r|ξ|)<ξ, f a>,
// product σ∘μ∘(σ^{-1}⊗σ^{-1}) and coproduct (σ⊗σ)∘δ∘σ^{-1} with |σ| = −m.
BraneOperation dualize_to_homology(const BraneOperation& op);

struct CheckReport {
    std::string name;
    bool pass = true;
    int checked = 0;
    Q sign = 1;
    std::string witness;
};

CheckReport check_associativity(const BraneOperation& op, int max_degree);
CheckReport check_commutativity(const BraneOperation& op, int max_degree);
CheckReport check_frobenius(const BraneOperation& prod, const BraneOperation& coprod, int max_degree);
// δ∨∘(δ∨⊗id) on H⊗3, the dual of (δ⊗1)∘δ; reports the first nonzero value as witness.
CheckReport coproduct_iterate_nonzero(const BraneOperation& coprod, int max_degree);
CheckReport check_zero_operation(const BraneOperation& op);

// Deterministic negative control: adds `delta` to one nonzero entry chosen by `seed`. Entries whose source or
// target tuple reads the same backwards are fixed by τ and invisible to the symmetry checks, so they are avoided
// whenever another entry exists. A nonnegative `max_src_degree` keeps the entry inside a checked range.
BraneOperation perturb(const BraneOperation& op, unsigned seed, const Q& delta = 1, int max_src_degree = -1);

// The homology table of the odd-sphere example in terms of ∧(y,z).
struct SphereTable {
    int deg_y = 0, deg_z = 0;
    bool exterior = false;  // product is ∧(y,z)
    Q normalization;        // β with z = β σ(x·s²x)^*
    struct Equation {
        std::string lhs;
        std::string expected;
        std::string computed;
        bool match = false;
    };
    std::vector<Equation> coproduct;
    std::vector<std::string> product_lines;
    bool pass() const;
};
SphereTable odd_sphere_table(const BraneOperation& hprod, const BraneOperation& hcoprod);

}  // namespace brane
