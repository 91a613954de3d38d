#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace brane {

using Q = mpq_class;
using GenId = int;

std::string to_string(const Q& q);

class AlgebraError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// How a generator arose. `source` is the index of the underlying generator of V
// (or -1 for plain generators), `shift` the suspension depth, `factor` the
// tensor-factor index.
struct Provenance {
    enum class Role { Plain, Base, Sphere, Disk, Path, Fiber };
    Role role = Role::Plain;
    int shift = 0;
    int source = -1;
    int factor = 0;
};

struct Generator {
    GenId id = 0;
    std::string name;
    int degree = 0;
    Provenance prov;
    bool odd() const { return degree % 2 != 0; }
};

struct Factor {
    GenId id;
    int exp;
    auto operator<=>(const Factor&) const = default;
};

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::vector<Factor> f) : factors_(std::move(f)) {}

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(GenId id) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

  private:
    std::vector<Factor> factors_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

class GradedAlgebra;
using AlgPtr = std::shared_ptr<const GradedAlgebra>;

class Element {
  public:
    using Terms = std::map<Monomial, Q>;

    Element() = default;
    explicit Element(AlgPtr alg) : alg_(std::move(alg)) {}
    Element(AlgPtr alg, const Monomial& m, const Q& c = 1);

    const AlgPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Q coeff(const Monomial& m) const;

    // Degree of a homogeneous nonzero element; nullopt for zero or mixed degrees.
    std::optional<int> degree() const;
    bool homogeneous() const;

    void add_term(const Monomial& m, const Q& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Q& c);
    Element operator-() const;

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

  private:
    AlgPtr alg_;
    Terms terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Q& c, Element a);
Element operator*(const Element& a, const Element& b);

// Canonical form of a raw product of generator powers; sign 0 means the product vanishes.
std::pair<int, Monomial> normalize(const GradedAlgebra& alg, const std::vector<Factor>& raw);

// Product of two canonical monomials with its Koszul sign (0 if it vanishes).
std::pair<int, Monomial> mul_monomials(const GradedAlgebra& alg, const Monomial& a, const Monomial& b);

Element mul(const Element& a, const Element& b);
Element power(const Element& a, int e);

class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
  public:
    struct DegreeBasis {
        std::vector<Monomial> monomials;
        std::unordered_map<Monomial, int, MonomialHash> index;
    };

    static AlgPtr create(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(GenId id) const;
    std::optional<GenId> find(const std::string& name) const;
    bool odd(GenId id) const { return gen(id).odd(); }

    int degree(const Monomial& m) const;
    // Sum of degrees of the odd factors modulo 2 equals degree parity; this is the count of odd factors.
    int odd_count(const Monomial& m) const;

    const DegreeBasis& basis_data(int n) const;
    const std::vector<Monomial>& basis(int n) const { return basis_data(n).monomials; }

    // Degree-n monomials using only the listed generators, in canonical order.
    std::vector<Monomial> basis_in(int n, const std::vector<GenId>& allowed) const;

    AlgPtr ptr() const { return shared_from_this(); }
    Element zero() const { return Element(ptr()); }
    Element one() const { return Element(ptr(), Monomial()); }
    Element generator(GenId id) const;
    Element generator(const std::string& name) const;

    std::string monomial_str(const Monomial& m) const;

  private:
    explicit GradedAlgebra(std::vector<Generator> gens);

    std::vector<Generator> gens_;
    std::unordered_map<std::string, GenId> by_name_;
    mutable std::mutex cache_mu_;
    mutable std::map<int, std::unique_ptr<DegreeBasis>> cache_;
};

// Free GCA on the disjoint union; generators of A keep ids 0..|A|-1, those of B are offset by |A|.
// Names are suffixed "@L" / "@R".
AlgPtr tensor(const AlgPtr& a, const AlgPtr& b);

// Re-express an element of `from` in `to` through a generator map (to-id per from-id, -1 sends to 0).
Element transport(const Element& e, const AlgPtr& to, const std::vector<GenId>& gen_map);

}  // namespace brane
