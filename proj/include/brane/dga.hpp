#pragma once

#include "brane/gca.hpp"

#include <atomic>
#include <functional>
#include <set>

namespace brane {

class Derivation {
  public:
    Derivation() = default;
    Derivation(AlgPtr alg, int degree, std::vector<Element> images);

    const AlgPtr& algebra() const { return alg_; }
    int degree() const { return degree_; }
    const Element& image(GenId id) const { return images_.at(id); }
    const std::vector<Element>& images() const { return images_; }

    Element apply(const Monomial& m) const;
    Element apply(const Element& e) const;

  private:
    AlgPtr alg_;
    int degree_ = 0;
    std::vector<Element> images_;
};

Element extend_derivation(const Derivation& theta, const Element& e);

struct CohomologyCache;
class DgaModel;
using ModelPtr = std::shared_ptr<const DgaModel>;

class DgaModel {
  public:
    // `base_map[i]` is the generator of this model playing the role of generator i of `base`.
    static ModelPtr create(std::string name, AlgPtr alg, std::vector<Element> d_images, ModelPtr base = nullptr,
                           std::vector<GenId> base_map = {});

    const std::string& name() const { return name_; }
    const AlgPtr& algebra() const { return alg_; }
    const Derivation& d() const { return d_; }
    const ModelPtr& base() const { return base_; }
    const std::vector<GenId>& base_map() const { return base_map_; }
    std::uint64_t uid() const { return uid_; }

    bool in_base(GenId id) const;
    std::vector<GenId> fiber_generators() const;
    Element differential(const Element& e) const { return d_.apply(e); }

    CohomologyCache& cohomology_cache() const { return *cache_; }

    ~DgaModel();

  private:
    DgaModel() = default;

    std::string name_;
    AlgPtr alg_;
    Derivation d_;
    ModelPtr base_;
    std::vector<GenId> base_map_;
    std::vector<char> is_base_;
    std::uint64_t uid_ = 0;
    std::unique_ptr<CohomologyCache> cache_;
};

class DgaMorphism {
  public:
    DgaMorphism() = default;
    DgaMorphism(ModelPtr source, ModelPtr target, std::vector<Element> images);

    const ModelPtr& source() const { return src_; }
    const ModelPtr& target() const { return tgt_; }
    const Element& image(GenId id) const { return images_.at(id); }

    Element apply(const Monomial& m) const;
    Element apply(const Element& e) const;

  private:
    ModelPtr src_;
    ModelPtr tgt_;
    std::vector<Element> images_;
};

DgaMorphism compose(const DgaMorphism& g, const DgaMorphism& f);
DgaMorphism identity_morphism(const ModelPtr& m);

struct Witness {
    int degree = 0;
    std::string input;
    std::string value;
};

// nullopt when d∘d vanishes on every basis monomial of degree <= cutoff.
std::optional<Witness> check_d_squared(const DgaModel& m, int cutoff);
std::optional<Witness> check_d_squared_generators(const DgaModel& m);
std::optional<Witness> check_chain_map(const DgaMorphism& f, int cutoff);
std::optional<Witness> check_chain_map_generators(const DgaMorphism& f);

bool structurally_equal(const DgaModel& a, const DgaModel& b);

// --- model constructors ---
// Layout conventions (generator ids), with l = dim V:
//   sphere_model(V,k): [0,l) = V, [l,2l) = s^(k-1)V
//   disk_model(V,k):   sphere layout, then [2l,3l) = s^k V
//   path_model(V):     [0,l) = V@L, [l,2l) = V@R, [2l,3l) = sV
ModelPtr sphere_model(const ModelPtr& V, int k);
// The reversed disk has d(s^k v) = -s^(k-1)v + (-1)^k s^(k)(dv); it is the disk glued with the opposite orientation.
// `sphere`, when given, must be sphere_model(V,k); it becomes the shared base.
ModelPtr disk_model(const ModelPtr& V, int k, bool reversed = false, ModelPtr sphere = nullptr);
ModelPtr path_model(const ModelPtr& V, int max_iterations = 64);
ModelPtr tensor_models(const ModelPtr& a, const ModelPtr& b);

// The suspension derivation s^(j) used by sphere/disk constructions, as a derivation of `m`'s algebra
// sending generator v (id < l) to the generator at offset `target_block * l`.
Derivation suspension_derivation(const AlgPtr& alg, int l, int target_block, int degree);

DgaMorphism morphism_phi(const ModelPtr& sphere, const ModelPtr& V);
DgaMorphism morphism_eps_tilde(const ModelPtr& disk, const ModelPtr& V);
DgaMorphism morphism_eps_bar(const ModelPtr& path, const ModelPtr& V);
DgaMorphism base_inclusion(const ModelPtr& m);

struct Transpositions {
    DgaMorphism t;        // on the base
    DgaMorphism t_tilde;  // on the model
};
// For a path model: t swaps the tensor factors and t̃ also negates sV.
// For a disk model: t negates s^(k-1)V on the sphere base and t̃ negates s^(k-1)V and s^k V.
Transpositions transposition_morphisms(const ModelPtr& m);

struct Quotient {
    ModelPtr model;
    DgaMorphism projection;
};
// Quotient by the ideal generated by `killed` generators; throws unless d(I) ⊂ I.
Quotient quotient(const ModelPtr& m, const std::set<GenId>& killed, const std::string& name = "");

// A ⊗_B M for M semifree over B and f: B -> A. Generators: those of A, then M's fiber generators.
struct BaseChange {
    ModelPtr model;
    std::vector<GenId> fiber_map;  // M generator id -> result id (-1 for base generators)
    DgaMorphism from_target;       // A -> result
};
BaseChange base_change(const ModelPtr& M, const DgaMorphism& f, const std::string& fiber_suffix = "");

// M ⊗_B N for M, N semifree over the same base B. Generators: those of N (fiber tagged "@R"), then
// M's fiber tagged "@L". The result is semifree over B.
BaseChange relative_tensor(const ModelPtr& M, const ModelPtr& N);

bool is_minimal(const DgaModel& V);
bool is_pure(const DgaModel& V);
bool is_semipure(const DgaModel& V);

}  // namespace brane
