#include "brane/gca.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace brane {

std::string to_string(const Q& q) {
    Q c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

int Monomial::exponent(GenId id) const {
    for (const auto& f : factors_)
        if (f.id == id) return f.exp;
    return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& f : m.factors()) {
        h ^= static_cast<std::size_t>(f.id) * 0x100000001b3ULL + static_cast<std::size_t>(f.exp) + (h << 6) + (h >> 2);
    }
    return h;
}

Element::Element(AlgPtr alg, const Monomial& m, const Q& c) : alg_(std::move(alg)) {
    if (c != 0) terms_.emplace(m, c);
}

Q Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Q(0) : it->second;
}

std::optional<int> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = alg_->degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (alg_->degree(m) != d) return std::nullopt;
    return d;
}

bool Element::homogeneous() const { return terms_.empty() || degree().has_value(); }

void Element::add_term(const Monomial& m, const Q& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void check_same(const Element& a, const Element& b) {
    if (a.algebra() && b.algebra() && a.algebra() != b.algebra())
        throw AlgebraError("operands live in different algebras");
}

Element& Element::operator+=(const Element& o) {
    check_same(*this, o);
    if (!alg_) alg_ = o.alg_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same(*this, o);
    if (!alg_) alg_ = o.alg_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Q& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

bool Element::operator==(const Element& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    check_same(*this, o);
    return terms_ == o.terms_;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Q a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = m.is_one();
        if (a != 1 || unit) {
            os << to_string(a);
            if (!unit) os << "*";
        }
        if (!unit) os << alg_->monomial_str(m);
    }
    return os.str();
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Q& c, Element a) { return a *= c; }
Element operator*(const Element& a, const Element& b) { return mul(a, b); }

std::pair<int, Monomial> normalize(const GradedAlgebra& alg, const std::vector<Factor>& raw) {
    std::vector<Factor> f;
    f.reserve(raw.size());
    for (const auto& r : raw) {
        if (r.id < 0 || static_cast<std::size_t>(r.id) >= alg.size())
            throw AlgebraError("unknown generator id " + std::to_string(r.id));
        if (r.exp < 0) throw AlgebraError("negative exponent");
        if (r.exp == 0) continue;
        if (alg.odd(r.id) && r.exp > 1) return {0, Monomial()};
        f.push_back(r);
    }
    int sign = 1;
    // insertion sort, counting transpositions of odd factors
    for (std::size_t i = 1; i < f.size(); ++i) {
        for (std::size_t j = i; j > 0 && f[j - 1].id > f[j].id; --j) {
            if (alg.odd(f[j - 1].id) && alg.odd(f[j].id)) sign = -sign;
            std::swap(f[j - 1], f[j]);
        }
    }
    std::vector<Factor> out;
    for (const auto& x : f) {
        if (!out.empty() && out.back().id == x.id) {
            if (alg.odd(x.id)) return {0, Monomial()};
            out.back().exp += x.exp;
        } else {
            out.push_back(x);
        }
    }
    return {sign, Monomial(std::move(out))};
}

std::pair<int, Monomial> mul_monomials(const GradedAlgebra& alg, const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    // odd factors of a remaining at or after position i
    std::vector<int> odd_suffix(fa.size() + 1, 0);
    for (std::size_t i = fa.size(); i-- > 0;) odd_suffix[i] = odd_suffix[i + 1] + (alg.odd(fa[i].id) ? 1 : 0);

    std::vector<Factor> out;
    out.reserve(fa.size() + fb.size());
    int swaps = 0;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].id < fb[j].id)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].id < fa[i].id) {
            if (alg.odd(fb[j].id)) swaps += odd_suffix[i];
            out.push_back(fb[j++]);
        } else {
            if (alg.odd(fa[i].id)) return {0, Monomial()};
            out.push_back({fa[i].id, fa[i].exp + fb[j].exp});
            ++i;
            ++j;
        }
    }
    return {(swaps % 2) ? -1 : 1, Monomial(std::move(out))};
}

Element mul(const Element& a, const Element& b) {
    check_same(a, b);
    const AlgPtr& alg = a.algebra() ? a.algebra() : b.algebra();
    Element r(alg);
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            auto [s, m] = mul_monomials(*alg, ma, mb);
            if (s == 0) continue;
            Q c = ca * cb;
            if (s < 0) c = -c;
            r.add_term(m, c);
        }
    }
    return r;
}

Element power(const Element& a, int e) {
    Element r = a.algebra()->one();
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

GradedAlgebra::GradedAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        auto& g = gens_[i];
        g.id = static_cast<GenId>(i);
        if (g.degree < 1) throw AlgebraError("generator '" + g.name + "' must have degree >= 1");
        if (!by_name_.emplace(g.name, g.id).second) throw AlgebraError("duplicate generator name '" + g.name + "'");
    }
}

AlgPtr GradedAlgebra::create(std::vector<Generator> gens) {
    return std::shared_ptr<const GradedAlgebra>(new GradedAlgebra(std::move(gens)));
}

const Generator& GradedAlgebra::gen(GenId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= gens_.size())
        throw AlgebraError("unknown generator id " + std::to_string(id));
    return gens_[id];
}

std::optional<GenId> GradedAlgebra::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

int GradedAlgebra::degree(const Monomial& m) const {
    int d = 0;
    for (const auto& f : m.factors()) d += f.exp * gens_[f.id].degree;
    return d;
}

int GradedAlgebra::odd_count(const Monomial& m) const {
    int c = 0;
    for (const auto& f : m.factors())
        if (gens_[f.id].odd()) c += f.exp;
    return c;
}

static void enumerate(const GradedAlgebra& alg, const std::vector<GenId>& gens, std::size_t pos, int remaining,
                      std::vector<Factor>& cur, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (pos == gens.size()) return;
    const Generator& g = alg.gen(gens[pos]);
    enumerate(alg, gens, pos + 1, remaining, cur, out);
    int max_exp = g.odd() ? 1 : remaining / g.degree;
    for (int e = 1; e <= max_exp && e * g.degree <= remaining; ++e) {
        cur.push_back({g.id, e});
        enumerate(alg, gens, pos + 1, remaining - e * g.degree, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> GradedAlgebra::basis_in(int n, const std::vector<GenId>& allowed) const {
    std::vector<Monomial> out;
    if (n < 0) return out;
    std::vector<GenId> gens = allowed;
    std::sort(gens.begin(), gens.end());
    std::vector<Factor> cur;
    enumerate(*this, gens, 0, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

const GradedAlgebra::DegreeBasis& GradedAlgebra::basis_data(int n) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = cache_.find(n);
        if (it != cache_.end()) return *it->second;
    }
    auto data = std::make_unique<DegreeBasis>();
    if (n >= 0) {
        std::vector<GenId> all(gens_.size());
        for (std::size_t i = 0; i < gens_.size(); ++i) all[i] = static_cast<GenId>(i);
        data->monomials = basis_in(n, all);
        for (std::size_t i = 0; i < data->monomials.size(); ++i) data->index.emplace(data->monomials[i], static_cast<int>(i));
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto [it, inserted] = cache_.emplace(n, std::move(data));
    return *it->second;
}

Element GradedAlgebra::generator(GenId id) const {
    gen(id);
    return Element(ptr(), Monomial({{id, 1}}));
}

Element GradedAlgebra::generator(const std::string& name) const {
    auto id = find(name);
    if (!id) throw AlgebraError("unknown generator '" + name + "'");
    return generator(*id);
}

std::string GradedAlgebra::monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        s += gens_[f.id].name;
        if (f.exp > 1) s += "^" + std::to_string(f.exp);
    }
    return s;
}

AlgPtr tensor(const AlgPtr& a, const AlgPtr& b) {
    std::vector<Generator> gens;
    for (const auto& g : a->generators()) {
        Generator c = g;
        c.name += "@L";
        c.prov.factor = 0;
        gens.push_back(c);
    }
    for (const auto& g : b->generators()) {
        Generator c = g;
        c.name += "@R";
        c.prov.factor = 1;
        gens.push_back(c);
    }
    return GradedAlgebra::create(std::move(gens));
}

Element transport(const Element& e, const AlgPtr& to, const std::vector<GenId>& gen_map) {
    Element r(to);
    for (const auto& [m, c] : e.terms()) {
        std::vector<Factor> raw;
        bool dead = false;
        for (const auto& f : m.factors()) {
            GenId t = gen_map.at(f.id);
            if (t < 0) {
                dead = true;
                break;
            }
            raw.push_back({t, f.exp});
        }
        if (dead) continue;
        auto [s, nm] = normalize(*to, raw);
        if (s == 0) continue;
        r.add_term(nm, s > 0 ? c : Q(-c));
    }
    return r;
}

}  // namespace brane
