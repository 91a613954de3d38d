#include "brane/shriek.hpp"

#include <algorithm>

namespace brane {

namespace {

std::vector<GenId> inverse_base_map(const DgaModel& P) {
    std::vector<GenId> inv(P.algebra()->size(), -1);
    for (std::size_t i = 0; i < P.base_map().size(); ++i) inv[P.base_map()[i]] = static_cast<GenId>(i);
    return inv;
}

Element rebase(const Element& e, const AlgPtr& to) {
    if (e.algebra() == to || e.is_zero()) return e.is_zero() ? to->zero() : e;
    std::vector<GenId> ids(e.algebra()->size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<GenId>(i);
    return transport(e, to, ids);
}

bool odd(int n) { return n % 2 != 0; }

std::vector<Monomial> fiber_monomials_upto(const DgaModel& P, int cutoff) {
    std::vector<Monomial> out;
    for (int n = 0; n <= cutoff; ++n) {
        auto b = fiber_basis(P, n);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

}  // namespace

ModuleMap::ModuleMap(ModelPtr source, int degree, int defined_up_to, std::map<Monomial, Element> images)
    : src_(std::move(source)), degree_(degree), defined_up_to_(defined_up_to) {
    if (!src_->base()) throw AlgebraError("module map source must be semifree over a base");
    for (auto& [m, v] : images) set(m, v);
}

Element ModuleMap::value(const Monomial& fiber) const {
    if (src_->algebra()->degree(fiber) > defined_up_to_)
        throw ModelError("module map evaluated on " + src_->algebra()->monomial_str(fiber) + " beyond its defined range " +
                         std::to_string(defined_up_to_));
    auto it = images_.find(fiber);
    if (it == images_.end()) return target()->algebra()->zero();
    return it->second;
}

void ModuleMap::set(const Monomial& fiber, const Element& v) {
    for (const auto& f : fiber.factors())
        if (src_->in_base(f.id)) throw AlgebraError("module map keys must be fiber monomials");
    Element w = rebase(v, target()->algebra());
    auto d = w.degree();
    int expect = src_->algebra()->degree(fiber) + degree_;
    if (!w.is_zero() && (!d || *d != expect))
        throw AlgebraError("module map value on " + src_->algebra()->monomial_str(fiber) + " must have degree " +
                           std::to_string(expect));
    if (w.is_zero())
        images_.erase(fiber);
    else
        images_[fiber] = w;
}

BaseFiberSplit split_base_fiber(const DgaModel& P, const Monomial& m) {
    const auto& alg = *P.algebra();
    std::vector<Factor> base, fiber;
    int odd_fiber_seen = 0;
    int swaps = 0;
    for (const auto& f : m.factors()) {
        if (P.in_base(f.id)) {
            if (alg.odd(f.id)) swaps += odd_fiber_seen;
            base.push_back(f);
        } else {
            if (alg.odd(f.id)) odd_fiber_seen += f.exp;
            fiber.push_back(f);
        }
    }
    return {odd(swaps) ? -1 : 1, Monomial(base), Monomial(fiber)};
}

std::vector<Monomial> fiber_basis(const DgaModel& P, int n) { return P.algebra()->basis_in(n, P.fiber_generators()); }

Element ModuleMap::apply(const Element& e) const {
    const auto& balg = target()->algebra();
    const auto inv = inverse_base_map(*src_);
    Element r(balg);
    for (const auto& [m, c] : e.terms()) {
        auto s = split_base_fiber(*src_, m);
        Element fv = value(s.fiber);
        if (fv.is_zero()) continue;
        Element b = transport(Element(src_->algebra(), s.base), balg, inv);
        Element t = mul(b, fv);
        Q coef = c * s.sign;
        if (odd(degree_) && odd(src_->algebra()->degree(s.base))) coef = -coef;
        t *= coef;
        r += t;
    }
    return r;
}

ModuleMap hom_differential(const ModuleMap& F, int cutoff) {
    const auto& P = *F.source();
    const auto& B = *F.target();
    ModuleMap D(F.source(), F.degree() + 1, cutoff);
    for (int n = 0; n <= cutoff; ++n) {
        for (const auto& sigma : fiber_basis(P, n)) {
            Element v = B.differential(F.value(sigma));
            Element w = F.apply(P.d().apply(sigma));
            if (odd(F.degree()))
                v += w;
            else
                v -= w;
            D.set(sigma, v);
        }
    }
    return D;
}

std::optional<Witness> check_cocycle(const ModuleMap& F, int cutoff) {
    ModuleMap D = hom_differential(F, cutoff);
    for (const auto& [m, v] : D.images())
        return Witness{F.source()->algebra()->degree(m), F.source()->algebra()->monomial_str(m), v.str()};
    return std::nullopt;
}

Element apply_tensor_id(const ModuleMap& F, const BaseChange& bc, const DgaMorphism& f, const Element& z) {
    const auto& R = *bc.model;
    const auto& ralg = R.algebra();
    const auto& palg = F.source()->algebra();
    const ModelPtr& A = f.target();
    std::vector<GenId> to_p(ralg->size(), -1);
    for (std::size_t i = 0; i < bc.fiber_map.size(); ++i)
        if (bc.fiber_map[i] >= 0) to_p[bc.fiber_map[i]] = static_cast<GenId>(i);
    const GenId a_size = static_cast<GenId>(A->algebra()->size());

    Element r(A->algebra());
    for (const auto& [m, c] : z.terms()) {
        std::vector<Factor> fib, rest;
        int odd_rest_seen = 0, swaps = 0;
        for (const auto& fac : m.factors()) {
            if (to_p[fac.id] >= 0) {
                if (ralg->odd(fac.id)) swaps += odd_rest_seen;
                fib.push_back({to_p[fac.id], fac.exp});
            } else {
                if (fac.id >= a_size) throw AlgebraError("element does not live in the base-changed model");
                if (ralg->odd(fac.id)) odd_rest_seen += fac.exp;
                rest.push_back(fac);
            }
        }
        auto [s, sigma] = normalize(*palg, fib);
        if (s == 0) continue;
        Element fv = F.value(sigma);
        if (fv.is_zero()) continue;
        Element img = f.apply(rebase(fv, f.source()->algebra()));
        Element t = mul(img, Element(A->algebra(), Monomial(rest)));
        Q coef = c * s;
        if (odd(swaps)) coef = -coef;
        t *= coef;
        r += t;
    }
    return r;
}

GorensteinInfo gorenstein_info(const DgaModel& V, int k, std::optional<int> m, std::optional<int> mbar) {
    GorensteinInfo g;
    int dm = 0, dmbar = 0;
    for (const auto& gen : V.algebra()->generators()) {
        if (gen.odd()) {
            ++g.q;
            dm += gen.degree;
        } else {
            ++g.p;
            dm -= gen.degree - 1;
        }
        int a = gen.degree - (k - 1);
        dmbar += odd(a) ? a : -(gen.degree - k);
    }
    g.m = m.value_or(dm);
    g.mbar = mbar.value_or(dmbar);
    if (odd(g.m - g.p - g.q))
        throw ModelError("formal dimension " + std::to_string(g.m) + " must have the parity of p+q = " + std::to_string(g.p + g.q));
    if (odd(g.mbar - static_cast<int>(V.algebra()->size())))
        throw ModelError("loop-space dimension " + std::to_string(g.mbar) + " must have the parity of dim V = " +
                         std::to_string(V.algebra()->size()));
    return g;
}

ShriekResult solve_shriek(const ModelPtr& P, int degree, const Monomial& leading, const Element& leading_value,
                          const std::vector<Element>& correction_basis, int cutoff) {
    const DgaModel& B = *P->base();
    const auto& balg = B.algebra();
    const auto inv = inverse_base_map(*P);
    const int r = degree;
    const Element L = rebase(leading_value, balg);

    struct Block {
        int offset = 0;
        std::vector<Element> basis;
    };
    std::vector<Monomial> sigmas = fiber_monomials_upto(*P, cutoff);
    std::map<Monomial, Block> blocks;
    int unknowns = 0;
    for (const auto& s : sigmas) {
        Block b;
        b.offset = unknowns;
        if (s == leading) {
            for (const auto& c : correction_basis) b.basis.push_back(rebase(c, balg));
        } else {
            for (const auto& mono : balg->basis(P->algebra()->degree(s) + r)) b.basis.emplace_back(balg, mono);
        }
        unknowns += static_cast<int>(b.basis.size());
        blocks.emplace(s, std::move(b));
    }
    const bool lead_in_range = blocks.count(leading) > 0;

    LinearSystem sys(unknowns);
    for (const auto& tau : sigmas) {
        const int t = P->algebra()->degree(tau) + r + 1;
        std::vector<std::pair<int, Element>> contrib;
        Element constant = balg->zero();

        const Block& own = blocks.at(tau);
        for (std::size_t i = 0; i < own.basis.size(); ++i) contrib.emplace_back(own.offset + static_cast<int>(i), B.differential(own.basis[i]));
        if (tau == leading) constant += B.differential(L);

        std::map<Monomial, Element> expansion;
        const Element dtau = P->d().apply(tau);
        for (const auto& [m, c] : dtau.terms()) {
            auto s = split_base_fiber(*P, m);
            Element b = transport(Element(P->algebra(), s.base), balg, inv);
            b *= c * s.sign;
            auto it = expansion.find(s.fiber);
            if (it == expansion.end())
                expansion.emplace(s.fiber, b);
            else
                it->second += b;
        }
        for (const auto& [sig, b] : expansion) {
            if (b.is_zero()) continue;
            auto bit = blocks.find(sig);
            if (bit == blocks.end())
                throw ModelError("shriek solver: d(" + P->algebra()->monomial_str(tau) + ") reaches beyond the cutoff");
            Q factor = odd(r) ? 1 : -1;
            if (odd(r) && odd(*b.degree())) factor = -factor;
            for (std::size_t i = 0; i < bit->second.basis.size(); ++i) {
                Element e = mul(b, bit->second.basis[i]);
                e *= factor;
                contrib.emplace_back(bit->second.offset + static_cast<int>(i), e);
            }
            if (sig == leading) {
                Element e = mul(b, L);
                e *= factor;
                constant += e;
            }
        }

        const auto& tb = balg->basis_data(t);
        std::map<int, SparseVec> rows;
        for (const auto& [u, e] : contrib) {
            if (e.is_zero()) continue;
            for (const auto& [g, c] : to_sparse(e, tb)) rows[g] = axpy(c, SparseVec{{u, Q(1)}}, rows[g]);
        }
        SparseVec cst = constant.is_zero() ? SparseVec{} : to_sparse(constant, tb);
        std::set<int> eqs;
        for (const auto& [g, row] : rows) eqs.insert(g);
        for (const auto& [g, c] : cst) eqs.insert(g);
        for (int g : eqs) sys.add_equation(rows[g], -entry(cst, g));
    }
    if (!sys.consistent())
        throw ModelError("no cocycle with the prescribed leading term exists up to degree " + std::to_string(cutoff));

    std::vector<std::vector<int>> groups;
    if (lead_in_range && !blocks.at(leading).basis.empty()) {
        const Block& lb = blocks.at(leading);
        std::vector<int> g;
        for (std::size_t i = 0; i < lb.basis.size(); ++i) g.push_back(lb.offset + static_cast<int>(i));
        groups.push_back(g);
    }
    for (const auto& s : sigmas) {
        if (s == leading) continue;
        const Block& b = blocks.at(s);
        if (b.basis.empty()) continue;
        std::vector<int> g;
        for (std::size_t i = 0; i < b.basis.size(); ++i) g.push_back(b.offset + static_cast<int>(i));
        groups.push_back(g);
    }
    for (const auto& g : groups) {
        LinearSystem trial = sys;
        for (int u : g) trial.add_equation(SparseVec{{u, Q(1)}}, 0);
        if (trial.consistent()) sys = std::move(trial);
    }
    std::vector<Q> x = sys.particular_solution();

    ShriekResult res;
    res.map = ModuleMap(P, degree, cutoff);
    res.leading = leading;
    res.leading_value = L;
    res.correction = balg->zero();
    res.used_solver = true;
    for (const auto& s : sigmas) {
        const Block& b = blocks.at(s);
        Element v = balg->zero();
        for (std::size_t i = 0; i < b.basis.size(); ++i) {
            Element e = b.basis[i];
            e *= x[b.offset + i];
            v += e;
        }
        if (s == leading) {
            res.correction = v;
            v += L;
        }
        res.map.set(s, v);
    }
    if (auto w = check_cocycle(res.map, cutoff))
        throw ModelError("shriek solver produced a non-cocycle at " + w->input + ": " + w->value);
    return res;
}

ShriekResult shriek_gamma(const ModelPtr& V, const ModelPtr& disk, int k, int cutoff) {
    const int l = static_cast<int>(V->algebra()->size());
    if (static_cast<int>(disk->algebra()->size()) != 3 * l) throw AlgebraError("gamma expects the disk model of V");
    if (!is_minimal(*V)) throw ModelError("gamma needs a minimal model");
    if (k == 2 && !is_pure(*V)) throw ModelError("gamma needs a pure model");
    const auto& dalg = disk->algebra();
    const auto& balg = disk->base()->algebra();
    std::vector<Factor> lead;
    Element value = balg->one();
    for (int i = 0; i < l; ++i) {
        int a = V->algebra()->gen(i).degree - (k - 1);
        if (odd(a))
            value = mul(value, balg->generator(l + i));
        else
            lead.push_back({2 * l + i, 1});
    }
    Monomial leading(lead);
    const int r = *value.degree() - dalg->degree(leading);

    ShriekResult res;
    res.map = ModuleMap(disk, r, cutoff, {{leading, value}});
    res.leading = leading;
    res.leading_value = value;
    res.correction = balg->zero();
    if (auto w = check_cocycle(res.map, cutoff)) {
        std::string why = "explicit formula is not a cocycle at " + w->input + " (D = " + w->value + ")";
        res = solve_shriek(disk, r, leading, value, {}, cutoff);
        res.note = why + "; solved from the cocycle condition";
    }
    if (k != 2) res.note += (res.note.empty() ? "" : "; ") + std::string("experimental for k != 2");
    return res;
}

ShriekResult shriek_gamma_pure(const ModelPtr& V, int cutoff) { return shriek_gamma(V, disk_model(V, 2), 2, cutoff); }

ShriekResult shriek_delta(const ModelPtr& V, const ModelPtr& path, int cutoff) {
    if (!is_minimal(*V)) throw ModelError("delta needs a minimal model");
    if (!is_semipure(*V)) throw ModelError("delta needs a semi-pure model");
    const int l = static_cast<int>(V->algebra()->size());
    const auto& balg = path->base()->algebra();
    GorensteinInfo g = gorenstein_info(*V, 2);
    std::vector<Factor> lead;
    Element value = balg->one();
    std::vector<int> odd_ids;
    for (int i = 0; i < l; ++i) {
        if (V->algebra()->odd(i)) {
            value = mul(value, balg->generator(l + i) - balg->generator(i));
            odd_ids.push_back(i);
        } else {
            lead.push_back({2 * l + i, 1});
        }
    }
    Monomial leading(lead);
    std::vector<Element> corr;
    for (const auto& mono : balg->basis(path->algebra()->degree(leading) + g.m)) {
        bool in_ideal = false;
        for (int i : odd_ids)
            if (mono.exponent(i) && mono.exponent(l + i)) in_ideal = true;
        if (in_ideal) corr.emplace_back(balg, mono);
    }
    return solve_shriek(path, g.m, leading, value, corr, cutoff);
}

ShriekResult shriek_delta_semipure(const ModelPtr& V, int cutoff) { return shriek_delta(V, path_model(V), cutoff); }

bool Pairing::nonzero() const {
    for (const auto& c : coords)
        if (c != 0) return true;
    return false;
}

Pairing evaluation_pairing(const ModuleMap& F, const BaseChange& bc, const DgaMorphism& f, const Element& z) {
    Element dz = bc.model->differential(z);
    if (!dz.is_zero()) throw ModelError("evaluation pairing: " + z.str() + " is not a cocycle (d = " + dz.str() + ")");
    Pairing p;
    p.value = apply_tensor_id(F, bc, f, z);
    auto d = z.degree();
    p.degree = (d ? *d : 0) + F.degree();
    p.coords = class_coordinates(*f.target(), p.value, p.degree);
    return p;
}

static Element move_fiber(const BaseChange& bc, const Monomial& m) {
    std::vector<Factor> f;
    for (const auto& x : m.factors()) f.push_back({bc.fiber_map.at(x.id), x.exp});
    auto [s, mono] = normalize(*bc.model->algebra(), f);
    return Element(bc.model->algebra(), mono, Q(s));
}

Certificate gamma_certificate(const ModelPtr& V, const ShriekResult& gamma) {
    const ModelPtr& P = gamma.map.source();
    const ModelPtr& S = P->base();
    const int l = static_cast<int>(V->algebra()->size());
    std::set<GenId> killed;
    for (int i = 0; i < l; ++i) {
        killed.insert(i);
        if (V->algebra()->odd(i)) killed.insert(l + i);
    }
    Quotient qt = quotient(S, killed, S->name() + "/I");
    BaseChange bc = base_change(P, qt.projection);
    Element z = move_fiber(bc, gamma.leading);
    Pairing pr = evaluation_pairing(gamma.map, bc, qt.projection, z);
    return {bc, qt.projection, z, pr};
}

Certificate delta_certificate(const ModelPtr& V, const ShriekResult& delta) {
    const ModelPtr& P = delta.map.source();
    const ModelPtr& B = P->base();
    const int l = static_cast<int>(V->algebra()->size());
    std::set<GenId> even;
    for (int i = 0; i < l; ++i)
        if (!V->algebra()->odd(i)) even.insert(i);
    Quotient qv = quotient(V, even, V->name() + "/I_V");
    std::vector<Element> imgs;
    for (int i = 0; i < l; ++i) imgs.push_back(qv.model->algebra()->zero());
    for (int i = 0; i < l; ++i) imgs.push_back(qv.projection.image(i));
    DgaMorphism f(B, qv.model, std::move(imgs));
    BaseChange bc = base_change(P, f);
    Element z = move_fiber(bc, delta.leading);
    Pairing pr = evaluation_pairing(delta.map, bc, f, z);
    return {bc, f, z, pr};
}

ModuleMap conjugate(const ModuleMap& F, const DgaMorphism& t, const DgaMorphism& t_tilde) {
    ModuleMap G(F.source(), F.degree(), F.defined_up_to());
    for (int n = 0; n <= F.defined_up_to(); ++n)
        for (const auto& sigma : fiber_basis(*F.source(), n))
            G.set(sigma, t.apply(F.apply(t_tilde.apply(sigma))));
    return G;
}

static Q ratio(const std::vector<Q>& a, const std::vector<Q>& b) {
    // a = c * b with b nonzero
    std::optional<Q> c;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0) {
            if (a[i] != 0) throw ModelError("pairings are not proportional");
            continue;
        }
        Q ci = a[i] / b[i];
        if (c && *c != ci) throw ModelError("pairings are not proportional");
        c = ci;
    }
    if (!c) throw ModelError("pairing is degenerate");
    return *c;
}

Q transposition_sign_loop(const ModelPtr& V, int cutoff) {
    ModelPtr P = path_model(V);
    ShriekResult f = shriek_delta(V, P, cutoff);
    Transpositions tr = transposition_morphisms(P);
    ModuleMap g = conjugate(f.map, tr.t, tr.t_tilde);
    Certificate c = delta_certificate(V, f);
    Pairing pg = evaluation_pairing(g, c.context, c.to_quotient, c.cycle);
    return ratio(pg.coords, c.pairing.coords);
}

Q one_generator_ext_sign(int gen_degree, int k, int cutoff) {
    if (k < 2) throw ModelError("one-generator Ext sign needs k >= 2");
    if (gen_degree < k + 1) throw ModelError("generator degree must exceed k");
    const int a = gen_degree - (k - 1);
    AlgPtr balg = GradedAlgebra::create({{0, "s" + std::to_string(k - 1) + "_v", a, {Provenance::Role::Sphere, k - 1, 0, 0}}});
    ModelPtr B = DgaModel::create("E", balg, {balg->zero()});
    AlgPtr palg = GradedAlgebra::create({{0, "s" + std::to_string(k - 1) + "_v", a, {Provenance::Role::Sphere, k - 1, 0, 0}},
                                         {1, "s" + std::to_string(k) + "_v", a - 1, {Provenance::Role::Disk, k, 0, 0}}});
    ModelPtr P = DgaModel::create("E'", palg, {palg->zero(), palg->generator(0)}, B, {0});

    ModuleMap f;
    if (odd(a))
        f = ModuleMap(P, a, cutoff, {{Monomial(), balg->generator(0)}});
    else
        f = ModuleMap(P, -(a - 1), cutoff, {{Monomial({{1, 1}}), balg->one()}});
    if (auto w = check_cocycle(f, cutoff)) throw ModelError("one-generator f is not a cocycle at " + w->input);

    DgaMorphism t_bar(B, B, {-balg->generator(0)});
    DgaMorphism t_hat(P, P, {-palg->generator(0), -palg->generator(1)});
    ModuleMap g = conjugate(f, t_bar, t_hat);

    std::optional<Q> c;
    for (int n = 0; n <= cutoff; ++n)
        for (const auto& sigma : fiber_basis(*P, n)) {
            Element fv = f.value(sigma), gv = g.value(sigma);
            if (fv.is_zero()) {
                if (!gv.is_zero()) throw ModelError("conjugate is not proportional to f");
                continue;
            }
            Q ci = gv.terms().begin()->second / fv.terms().begin()->second;
            Element check = fv;
            check *= ci;
            if (check != gv || (c && *c != ci)) throw ModelError("conjugate is not proportional to f");
            c = ci;
        }
    if (!c) throw ModelError("f vanishes");
    return *c;
}

Q ext_sign_product(const DgaModel& V, int k, int cutoff) {
    Q s = 1;
    for (const auto& g : V.algebra()->generators()) s *= one_generator_ext_sign(g.degree, k, cutoff);
    return s;
}

}  // namespace brane
