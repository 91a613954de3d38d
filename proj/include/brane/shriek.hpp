#pragma once

#include "brane/cohomology.hpp"

namespace brane {

// A map P -> B of degree r, linear over the base B of the semifree model P, given on fiber monomials.
class ModuleMap {
  public:
    ModuleMap() = default;
    ModuleMap(ModelPtr source, int degree, int defined_up_to, std::map<Monomial, Element> images = {});

    const ModelPtr& source() const { return src_; }
    const ModelPtr& target() const { return src_->base(); }
    int degree() const { return degree_; }
    int defined_up_to() const { return defined_up_to_; }
    const std::map<Monomial, Element>& images() const { return images_; }

    // Value on a fiber monomial; zero when unset. Throws beyond the defined range.
    Element value(const Monomial& fiber) const;
    void set(const Monomial& fiber, const Element& v);
    // B-linear extension: F(b·σ) = (-1)^(r|b|) b F(σ).
    Element apply(const Element& e) const;

  private:
    ModelPtr src_;
    int degree_ = 0;
    int defined_up_to_ = 0;
    std::map<Monomial, Element> images_;
};

struct BaseFiberSplit {
    int sign = 1;
    Monomial base;   // source ids
    Monomial fiber;  // source ids
};
// m = sign · base · fiber
BaseFiberSplit split_base_fiber(const DgaModel& P, const Monomial& m);
std::vector<Monomial> fiber_basis(const DgaModel& P, int n);

// D(F) = d_B∘F − (−1)^r F∘d_P, evaluated on every fiber monomial of degree <= cutoff.
ModuleMap hom_differential(const ModuleMap& F, int cutoff);
std::optional<Witness> check_cocycle(const ModuleMap& F, int cutoff);

// (F ⊗ id)(z) for z in A ⊗_B P = base_change(P, f).model; lands in A.
Element apply_tensor_id(const ModuleMap& F, const BaseChange& bc, const DgaMorphism& f, const Element& z);

struct GorensteinInfo {
    int p = 0;     // even generators
    int q = 0;     // odd generators
    int m = 0;     // formal dimension
    int mbar = 0;  // dimension of the iterated loop space Ω^(k-1)M
};
// Defaults: m = Σ|y_j| − Σ(|x_i| − 1); mbar = Σ_{|s^(k-1)v| odd} |s^(k-1)v| − Σ_{|s^(k-1)v| even} |s^k v|.
// Overrides are accepted when they have the forced parities.
GorensteinInfo gorenstein_info(const DgaModel& V, int k, std::optional<int> m = std::nullopt,
                               std::optional<int> mbar = std::nullopt);

struct ShriekResult {
    ModuleMap map;
    Monomial leading;
    Element leading_value;
    Element correction;       // the solved u (δ! only)
    bool used_solver = false;
    std::string note;
};

// Cocycle in Hom over the base with a fixed leading value; the rest is solved from D(F) = 0 with
// inclusion-minimal support (greedy over the correction and then the fiber monomials in canonical order).
ShriekResult solve_shriek(const ModelPtr& P, int degree, const Monomial& leading, const Element& leading_value,
                          const std::vector<Element>& correction_basis, int cutoff);

// γ! on disk_model(V,k) over sphere_model(V,k). For k = 2 this is the explicit pure formula; other k use the
// same ansatz and fall back to the solver.
ShriekResult shriek_gamma(const ModelPtr& V, const ModelPtr& disk, int k, int cutoff);
ShriekResult shriek_gamma_pure(const ModelPtr& V, int cutoff);
// δ! = f on path_model(V) over (∧V)⊗2.
ShriekResult shriek_delta(const ModelPtr& V, const ModelPtr& path, int cutoff);
ShriekResult shriek_delta_semipure(const ModelPtr& V, int cutoff);

struct Pairing {
    Element value;           // (F ⊗ id)(z) in the quotient
    int degree = 0;
    std::vector<Q> coords;   // its class
    bool nonzero() const;
};
Pairing evaluation_pairing(const ModuleMap& F, const BaseChange& bc, const DgaMorphism& f, const Element& z);

// Designated nontriviality certificates.
struct Certificate {
    BaseChange context;
    DgaMorphism to_quotient;
    Element cycle;
    Pairing pairing;
};
// γ! against s^2y_1⋯s^2y_q ⊗ 1 in M_{D²} ⊗_{M_{S¹}} M_{S¹}/I with I = (x_i, y_j, s y_j).
Certificate gamma_certificate(const ModelPtr& V, const ShriekResult& gamma);
// f against s x_1⋯s x_p in M_P ⊗_{(∧V)⊗2} ∧V/I_V with I_V = (V^even).
Certificate delta_certificate(const ModelPtr& V, const ShriekResult& delta);

// Scalar c with t∘F∘t̃ = c·F on the designated cycle; equals (−1)^(p+q).
Q transposition_sign_loop(const ModelPtr& V, int cutoff);
// hom_t(t̃,t)(F) = t∘F∘t̃ as a module map.
ModuleMap conjugate(const ModuleMap& F, const DgaMorphism& t, const DgaMorphism& t_tilde);

// Two-generator complex (∧s^(k-1)v ⊗ ∧s^k v, d s^k v = s^(k-1)v) over ∧s^(k-1)v with its Ext generator f;
// returns c with t̄∘f∘t̂ = c·f.
Q one_generator_ext_sign(int gen_degree, int k, int cutoff = 12);
// Product of the one-generator signs over a basis of V; equals (−1)^(dim V).
Q ext_sign_product(const DgaModel& V, int k, int cutoff = 12);

}  // namespace brane
