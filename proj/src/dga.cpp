#include "brane/dga.hpp"

#include "brane/cohomology.hpp"

#include <algorithm>
#include <numeric>

namespace brane {

namespace {

std::atomic<std::uint64_t> next_uid{1};

Element substitute(const Element& e, const std::vector<Element>& images, const AlgPtr& target) {
    Element r(target);
    for (const auto& [m, c] : e.terms()) {
        Element t = target->one();
        for (const auto& f : m.factors()) {
            const Element& img = images.at(f.id);
            if (img.is_zero()) {
                t = target->zero();
                break;
            }
            for (int i = 0; i < f.exp; ++i) t = mul(t, img);
        }
        t *= c;
        r += t;
    }
    return r;
}

Element embed(const Element& e, const AlgPtr& to, GenId offset) {
    std::vector<GenId> map(e.algebra() ? e.algebra()->size() : 0);
    std::iota(map.begin(), map.end(), offset);
    if (!e.algebra()) return to->zero();
    return transport(e, to, map);
}

std::string sname(int k, const std::string& base) { return "s" + std::to_string(k) + "_" + base; }

}  // namespace

Derivation::Derivation(AlgPtr alg, int degree, std::vector<Element> images)
    : alg_(std::move(alg)), degree_(degree), images_(std::move(images)) {
    if (images_.size() != alg_->size()) throw AlgebraError("derivation must be given on every generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        auto& img = images_[i];
        if (!img.algebra()) img = alg_->zero();
        if (img.algebra() != alg_) throw AlgebraError("derivation image lives in another algebra");
        auto d = img.degree();
        if (!img.is_zero() && (!d || *d != alg_->gen(static_cast<GenId>(i)).degree + degree_))
            throw AlgebraError("derivation image of '" + alg_->gen(static_cast<GenId>(i)).name +
                               "' is not homogeneous of degree " +
                               std::to_string(alg_->gen(static_cast<GenId>(i)).degree + degree_));
    }
}

Element Derivation::apply(const Monomial& m) const {
    Element r(alg_);
    const auto& f = m.factors();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Generator& g = alg_->gen(f[i].id);
        const Element& img = images_[f[i].id];
        if (!img.is_zero()) {
            std::vector<Factor> pre(f.begin(), f.begin() + static_cast<long>(i));
            std::vector<Factor> post(f.begin() + static_cast<long>(i) + 1, f.end());
            std::vector<Factor> mid;
            if (f[i].exp > 1) mid.push_back({f[i].id, f[i].exp - 1});
            Element left(alg_, Monomial(pre));
            Element power_part(alg_, Monomial(mid), Q(f[i].exp));
            Element right(alg_, Monomial(post));
            Element term = mul(mul(mul(left, power_part), img), right);
            if ((degree_ * prefix_degree) % 2 != 0) term = -term;
            r += term;
        }
        prefix_degree += f[i].exp * g.degree;
    }
    return r;
}

Element Derivation::apply(const Element& e) const {
    if (e.algebra() && e.algebra() != alg_) throw AlgebraError("derivation applied to an element of another algebra");
    Element r(alg_);
    for (const auto& [m, c] : e.terms()) {
        Element t = apply(m);
        t *= c;
        r += t;
    }
    return r;
}

Element extend_derivation(const Derivation& theta, const Element& e) { return theta.apply(e); }

ModelPtr DgaModel::create(std::string name, AlgPtr alg, std::vector<Element> d_images, ModelPtr base,
                          std::vector<GenId> base_map) {
    std::shared_ptr<DgaModel> m(new DgaModel());
    m->name_ = std::move(name);
    m->alg_ = alg;
    m->d_ = Derivation(alg, 1, std::move(d_images));
    m->base_ = std::move(base);
    m->base_map_ = std::move(base_map);
    m->is_base_.assign(alg->size(), 0);
    m->uid_ = next_uid++;
    m->cache_ = std::make_unique<CohomologyCache>();
    if (m->base_) {
        const auto& balg = m->base_->algebra();
        if (m->base_map_.size() != balg->size()) throw AlgebraError("base map must cover every base generator");
        for (std::size_t i = 0; i < m->base_map_.size(); ++i) {
            GenId t = m->base_map_[i];
            if (alg->gen(t).degree != balg->gen(static_cast<GenId>(i)).degree)
                throw AlgebraError("base map changes the degree of '" + balg->gen(static_cast<GenId>(i)).name + "'");
            if (m->is_base_[t]) throw AlgebraError("base map is not injective");
            m->is_base_[t] = 1;
        }
        for (std::size_t i = 0; i < m->base_map_.size(); ++i) {
            Element expect = transport(m->base_->d().image(static_cast<GenId>(i)), alg, m->base_map_);
            if (expect != m->d_.image(m->base_map_[i]))
                throw AlgebraError("differential of base generator '" + balg->gen(static_cast<GenId>(i)).name +
                                   "' does not agree with the base");
        }
    }
    return m;
}

DgaModel::~DgaModel() = default;

bool DgaModel::in_base(GenId id) const { return is_base_.at(id) != 0; }

std::vector<GenId> DgaModel::fiber_generators() const {
    std::vector<GenId> r;
    for (std::size_t i = 0; i < alg_->size(); ++i)
        if (!is_base_[i]) r.push_back(static_cast<GenId>(i));
    return r;
}

DgaMorphism::DgaMorphism(ModelPtr source, ModelPtr target, std::vector<Element> images)
    : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)) {
    const auto& sa = src_->algebra();
    const auto& ta = tgt_->algebra();
    if (images_.size() != sa->size()) throw AlgebraError("morphism must be given on every generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        auto& img = images_[i];
        if (!img.algebra()) img = ta->zero();
        if (img.algebra() != ta) throw AlgebraError("morphism image lives in another algebra");
        auto d = img.degree();
        if (!img.is_zero() && (!d || *d != sa->gen(static_cast<GenId>(i)).degree))
            throw AlgebraError("morphism does not preserve the degree of '" + sa->gen(static_cast<GenId>(i)).name + "'");
    }
}

Element DgaMorphism::apply(const Monomial& m) const {
    return substitute(Element(src_->algebra(), m), images_, tgt_->algebra());
}

Element DgaMorphism::apply(const Element& e) const {
    if (e.algebra() && e.algebra() != src_->algebra()) throw AlgebraError("morphism applied outside its source");
    return substitute(e, images_, tgt_->algebra());
}

DgaMorphism compose(const DgaMorphism& g, const DgaMorphism& f) {
    if (f.target() != g.source()) throw AlgebraError("cannot compose: target and source differ");
    std::vector<Element> imgs;
    for (std::size_t i = 0; i < f.source()->algebra()->size(); ++i) imgs.push_back(g.apply(f.image(static_cast<GenId>(i))));
    return DgaMorphism(f.source(), g.target(), std::move(imgs));
}

DgaMorphism identity_morphism(const ModelPtr& m) {
    std::vector<Element> imgs;
    for (std::size_t i = 0; i < m->algebra()->size(); ++i) imgs.push_back(m->algebra()->generator(static_cast<GenId>(i)));
    return DgaMorphism(m, m, std::move(imgs));
}

std::optional<Witness> check_d_squared_generators(const DgaModel& m) {
    const auto& alg = m.algebra();
    for (std::size_t i = 0; i < alg->size(); ++i) {
        Element dd = m.differential(m.d().image(static_cast<GenId>(i)));
        if (!dd.is_zero()) return Witness{alg->gen(static_cast<GenId>(i)).degree, alg->gen(static_cast<GenId>(i)).name, dd.str()};
    }
    return std::nullopt;
}

std::optional<Witness> check_d_squared(const DgaModel& m, int cutoff) {
    const auto& alg = m.algebra();
    for (int n = 0; n <= cutoff; ++n) {
        for (const auto& mono : alg->basis(n)) {
            Element dd = m.differential(m.d().apply(mono));
            if (!dd.is_zero()) return Witness{n, alg->monomial_str(mono), dd.str()};
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_chain_map_generators(const DgaMorphism& f) {
    const auto& alg = f.source()->algebra();
    for (std::size_t i = 0; i < alg->size(); ++i) {
        GenId g = static_cast<GenId>(i);
        Element lhs = f.apply(f.source()->d().image(g));
        Element rhs = f.target()->differential(f.image(g));
        if (lhs != rhs) return Witness{alg->gen(g).degree, alg->gen(g).name, (lhs - rhs).str()};
    }
    return std::nullopt;
}

std::optional<Witness> check_chain_map(const DgaMorphism& f, int cutoff) {
    const auto& alg = f.source()->algebra();
    for (int n = 0; n <= cutoff; ++n) {
        for (const auto& mono : alg->basis(n)) {
            Element lhs = f.apply(f.source()->d().apply(mono));
            Element rhs = f.target()->differential(f.apply(mono));
            if (lhs != rhs) return Witness{n, alg->monomial_str(mono), (lhs - rhs).str()};
        }
    }
    return std::nullopt;
}

bool structurally_equal(const DgaModel& a, const DgaModel& b) {
    const auto& ga = a.algebra()->generators();
    const auto& gb = b.algebra()->generators();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (ga[i].name != gb[i].name || ga[i].degree != gb[i].degree) return false;
        if (a.d().image(static_cast<GenId>(i)).terms() != b.d().image(static_cast<GenId>(i)).terms()) return false;
    }
    return true;
}

Derivation suspension_derivation(const AlgPtr& alg, int l, int target_block, int degree) {
    std::vector<Element> imgs(alg->size(), alg->zero());
    for (int i = 0; i < l; ++i) imgs[i] = alg->generator(target_block * l + i);
    return Derivation(alg, degree, std::move(imgs));
}

static void require_degrees(const ModelPtr& V, int min_degree, const std::string& what) {
    for (const auto& g : V->algebra()->generators())
        if (g.degree < min_degree)
            throw AlgebraError(what + " needs every generator of degree >= " + std::to_string(min_degree) + ", but '" +
                               g.name + "' has degree " + std::to_string(g.degree));
}

static std::vector<Generator> copy_base(const ModelPtr& V) {
    std::vector<Generator> gens;
    for (const auto& g : V->algebra()->generators()) {
        Generator c = g;
        c.prov = {Provenance::Role::Base, 0, g.id, 0};
        gens.push_back(c);
    }
    return gens;
}

ModelPtr sphere_model(const ModelPtr& V, int k) {
    if (k < 1) throw AlgebraError("sphere model needs k >= 1");
    require_degrees(V, k, "sphere model");
    const int l = static_cast<int>(V->algebra()->size());
    auto gens = copy_base(V);
    for (const auto& g : V->algebra()->generators())
        gens.push_back({0, sname(k - 1, g.name), g.degree - (k - 1), {Provenance::Role::Sphere, k - 1, g.id, 0}});
    AlgPtr alg = GradedAlgebra::create(std::move(gens));
    Derivation s = suspension_derivation(alg, l, 1, -(k - 1));
    std::vector<Element> d(2 * l);
    for (int i = 0; i < l; ++i) {
        d[i] = embed(V->d().image(i), alg, 0);
        Element sd = s.apply(d[i]);
        d[l + i] = ((k - 1) % 2 == 0) ? sd : -sd;
    }
    std::vector<GenId> bmap(l);
    std::iota(bmap.begin(), bmap.end(), 0);
    return DgaModel::create("S" + std::to_string(k - 1) + "(" + V->name() + ")", alg, std::move(d), V, bmap);
}

ModelPtr disk_model(const ModelPtr& V, int k, bool reversed, ModelPtr sphere) {
    if (k < 1) throw AlgebraError("disk model needs k >= 1");
    require_degrees(V, k + 1, "disk model");
    ModelPtr fresh = sphere_model(V, k);
    if (!sphere)
        sphere = fresh;
    else if (!structurally_equal(*sphere, *fresh))
        throw AlgebraError("disk model: the given base is not the sphere model of V");
    const int l = static_cast<int>(V->algebra()->size());
    std::vector<Generator> gens = sphere->algebra()->generators();
    for (const auto& g : V->algebra()->generators())
        gens.push_back({0, sname(k, g.name), g.degree - k, {Provenance::Role::Disk, k, g.id, 0}});
    AlgPtr alg = GradedAlgebra::create(std::move(gens));
    Derivation s_km1 = suspension_derivation(alg, l, 1, -(k - 1));
    Derivation s_k = suspension_derivation(alg, l, 2, -k);
    std::vector<Element> d(3 * l);
    for (int i = 0; i < l; ++i) {
        d[i] = embed(V->d().image(i), alg, 0);
        Element a = s_km1.apply(d[i]);
        d[l + i] = ((k - 1) % 2 == 0) ? a : -a;
        Element b = s_k.apply(d[i]);
        if (k % 2 != 0) b = -b;
        Element lead = alg->generator(l + i);
        d[2 * l + i] = reversed ? b - lead : lead + b;
    }
    std::vector<GenId> bmap(2 * l);
    std::iota(bmap.begin(), bmap.end(), 0);
    std::string nm = "D" + std::to_string(k) + (reversed ? "rev" : "") + "(" + V->name() + ")";
    return DgaModel::create(nm, alg, std::move(d), sphere, bmap);
}

ModelPtr tensor_models(const ModelPtr& a, const ModelPtr& b) {
    AlgPtr alg = tensor(a->algebra(), b->algebra());
    const GenId off = static_cast<GenId>(a->algebra()->size());
    std::vector<Element> d;
    for (std::size_t i = 0; i < a->algebra()->size(); ++i) d.push_back(embed(a->d().image(static_cast<GenId>(i)), alg, 0));
    for (std::size_t i = 0; i < b->algebra()->size(); ++i) d.push_back(embed(b->d().image(static_cast<GenId>(i)), alg, off));
    return DgaModel::create(a->name() + "⊗" + b->name(), alg, std::move(d));
}

ModelPtr path_model(const ModelPtr& V, int max_iterations) {
    require_degrees(V, 2, "path model");
    if (!is_minimal(*V)) throw AlgebraError("path model needs a minimal Sullivan algebra");
    const int l = static_cast<int>(V->algebra()->size());
    ModelPtr base = tensor_models(V, V);
    std::vector<Generator> gens = base->algebra()->generators();
    for (auto& g : gens) g.prov = {Provenance::Role::Base, 0, g.id % l, g.id / l};
    for (const auto& g : V->algebra()->generators())
        gens.push_back({0, "s_" + g.name, g.degree - 1, {Provenance::Role::Path, 1, g.id, 0}});
    AlgPtr alg = GradedAlgebra::create(std::move(gens));

    std::vector<Element> d(3 * l, alg->zero());
    for (int i = 0; i < 2 * l; ++i) d[i] = embed(base->d().image(i), alg, 0);
    std::vector<char> known(3 * l, 0);
    std::fill(known.begin(), known.begin() + 2 * l, 1);

    Derivation s = suspension_derivation(alg, l, 2, -1);
    // s(v@R) = sv as well
    {
        std::vector<Element> imgs = s.images();
        for (int i = 0; i < l; ++i) imgs[l + i] = alg->generator(2 * l + i);
        s = Derivation(alg, -1, std::move(imgs));
    }

    auto apply_d = [&](const Element& e) {
        for (const auto& [m, c] : e.terms())
            for (const auto& f : m.factors())
                if (!known[f.id]) throw AlgebraError("path model: differential of '" + alg->gen(f.id).name + "' needed before it is built");
        return Derivation(alg, 1, d).apply(e);
    };

    std::vector<int> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return V->algebra()->gen(a).degree < V->algebra()->gen(b).degree;
    });
    for (int i : order) {
        Element series = alg->zero();
        Element term = alg->generator(i);
        Q fact = 1;
        for (int it = 1;; ++it) {
            if (it > max_iterations)
                throw AlgebraError("path model: series for '" + V->algebra()->gen(i).name + "' does not terminate");
            term = s.apply(apply_d(term));
            if (term.is_zero()) break;
            fact *= it;
            Element t = term;
            t *= Q(1) / fact;
            series += t;
        }
        d[2 * l + i] = alg->generator(l + i) - alg->generator(i) - series;
        known[2 * l + i] = 1;
    }
    std::vector<GenId> bmap(2 * l);
    std::iota(bmap.begin(), bmap.end(), 0);
    return DgaModel::create("P(" + V->name() + ")", alg, std::move(d), base, bmap);
}

static int count_role(const ModelPtr& m, Provenance::Role r) {
    int c = 0;
    for (const auto& g : m->algebra()->generators())
        if (g.prov.role == r) ++c;
    return c;
}

DgaMorphism morphism_phi(const ModelPtr& sphere, const ModelPtr& V) {
    const int l = static_cast<int>(V->algebra()->size());
    if (static_cast<int>(sphere->algebra()->size()) != 2 * l || count_role(sphere, Provenance::Role::Sphere) != l)
        throw AlgebraError("phi expects a sphere model over V");
    std::vector<Element> imgs(2 * l, V->algebra()->zero());
    for (int i = 0; i < l; ++i) imgs[i] = V->algebra()->generator(i);
    return DgaMorphism(sphere, V, std::move(imgs));
}

DgaMorphism morphism_eps_tilde(const ModelPtr& disk, const ModelPtr& V) {
    const int l = static_cast<int>(V->algebra()->size());
    if (static_cast<int>(disk->algebra()->size()) != 3 * l || count_role(disk, Provenance::Role::Disk) != l)
        throw AlgebraError("eps_tilde expects a disk model over V");
    std::vector<Element> imgs(3 * l, V->algebra()->zero());
    for (int i = 0; i < l; ++i) imgs[i] = V->algebra()->generator(i);
    return DgaMorphism(disk, V, std::move(imgs));
}

DgaMorphism morphism_eps_bar(const ModelPtr& path, const ModelPtr& V) {
    const int l = static_cast<int>(V->algebra()->size());
    if (static_cast<int>(path->algebra()->size()) != 3 * l || count_role(path, Provenance::Role::Path) != l)
        throw AlgebraError("eps_bar expects a path model over V");
    std::vector<Element> imgs(3 * l, V->algebra()->zero());
    for (int i = 0; i < l; ++i) {
        imgs[i] = V->algebra()->generator(i);
        imgs[l + i] = V->algebra()->generator(i);
    }
    return DgaMorphism(path, V, std::move(imgs));
}

DgaMorphism base_inclusion(const ModelPtr& m) {
    if (!m->base()) throw AlgebraError("model '" + m->name() + "' has no base");
    std::vector<Element> imgs;
    for (GenId g : m->base_map()) imgs.push_back(m->algebra()->generator(g));
    return DgaMorphism(m->base(), m, std::move(imgs));
}

Transpositions transposition_morphisms(const ModelPtr& m) {
    const auto& alg = m->algebra();
    const ModelPtr& base = m->base();
    if (!base) throw AlgebraError("transpositions need a model with a base");
    const int paths = count_role(m, Provenance::Role::Path);
    const int disks = count_role(m, Provenance::Role::Disk);
    if (paths > 0) {
        const int l = paths;
        std::vector<Element> tb, tm;
        for (int i = 0; i < 2 * l; ++i) tb.push_back(base->algebra()->generator(i < l ? i + l : i - l));
        for (int i = 0; i < 2 * l; ++i) tm.push_back(alg->generator(i < l ? i + l : i - l));
        for (int i = 0; i < l; ++i) tm.push_back(-alg->generator(2 * l + i));
        return {DgaMorphism(base, base, std::move(tb)), DgaMorphism(m, m, std::move(tm))};
    }
    if (disks > 0) {
        const int l = disks;
        std::vector<Element> tb, tm;
        for (int i = 0; i < 2 * l; ++i) {
            Element g = base->algebra()->generator(i);
            tb.push_back(i < l ? g : -g);
        }
        for (int i = 0; i < 3 * l; ++i) {
            Element g = alg->generator(i);
            tm.push_back(i < l ? g : -g);
        }
        return {DgaMorphism(base, base, std::move(tb)), DgaMorphism(m, m, std::move(tm))};
    }
    throw AlgebraError("transpositions are defined for path and disk models only");
}

Quotient quotient(const ModelPtr& m, const std::set<GenId>& killed, const std::string& name) {
    const auto& alg = m->algebra();
    auto in_ideal = [&](const Monomial& mono) {
        for (const auto& f : mono.factors())
            if (killed.count(f.id)) return true;
        return false;
    };
    for (GenId g : killed) {
        for (const auto& [mono, c] : m->d().image(g).terms())
            if (!in_ideal(mono))
                throw AlgebraError("ideal is not d-stable: d(" + alg->gen(g).name + ") contains " + alg->monomial_str(mono));
    }
    std::vector<Generator> gens;
    std::vector<GenId> map(alg->size(), -1);
    for (const auto& g : alg->generators()) {
        if (killed.count(g.id)) continue;
        map[g.id] = static_cast<GenId>(gens.size());
        gens.push_back(g);
    }
    AlgPtr qa = GradedAlgebra::create(gens);
    std::vector<Element> d;
    for (const auto& g : alg->generators())
        if (!killed.count(g.id)) d.push_back(transport(m->d().image(g.id), qa, map));
    ModelPtr qm = DgaModel::create(name.empty() ? m->name() + "/I" : name, qa, std::move(d));
    std::vector<Element> imgs;
    for (const auto& g : alg->generators()) imgs.push_back(map[g.id] < 0 ? qa->zero() : qa->generator(map[g.id]));
    return {qm, DgaMorphism(m, qm, std::move(imgs))};
}

static BaseChange base_change_impl(const ModelPtr& M, const DgaMorphism& f, const std::string& fiber_suffix,
                                   const std::string& target_fiber_suffix, const ModelPtr& result_base,
                                   std::vector<GenId> result_base_map, const std::string& name) {
    if (!M->base()) throw AlgebraError("base change: '" + M->name() + "' is not semifree over a base");
    if (f.source() != M->base() && !structurally_equal(*f.source(), *M->base()))
        throw AlgebraError("base change: morphism does not start at the base of '" + M->name() + "'");
    const ModelPtr& A = f.target();
    const auto& aalg = A->algebra();
    const auto& malg = M->algebra();

    std::vector<Generator> gens = aalg->generators();
    if (!target_fiber_suffix.empty() && A->base()) {
        for (auto& g : gens)
            if (!A->in_base(g.id)) g.name += target_fiber_suffix;
    }
    std::set<std::string> used;
    for (const auto& g : gens) used.insert(g.name);
    std::vector<GenId> fiber_map(malg->size(), -1);
    for (GenId g : M->fiber_generators()) {
        Generator c = malg->gen(g);
        c.name += fiber_suffix;
        while (used.count(c.name)) c.name += "'";
        used.insert(c.name);
        fiber_map[g] = static_cast<GenId>(gens.size());
        gens.push_back(c);
    }
    AlgPtr alg = GradedAlgebra::create(std::move(gens));

    std::vector<Element> subst(malg->size());
    for (std::size_t i = 0; i < M->base_map().size(); ++i)
        subst[M->base_map()[i]] = embed(f.image(static_cast<GenId>(i)), alg, 0);
    for (GenId g : M->fiber_generators()) subst[g] = alg->generator(fiber_map[g]);

    std::vector<Element> d;
    for (std::size_t i = 0; i < aalg->size(); ++i) d.push_back(embed(A->d().image(static_cast<GenId>(i)), alg, 0));
    for (GenId g : M->fiber_generators()) d.push_back(substitute(M->d().image(g), subst, alg));

    ModelPtr model = DgaModel::create(name, alg, std::move(d), result_base, std::move(result_base_map));
    std::vector<Element> from;
    for (std::size_t i = 0; i < aalg->size(); ++i) from.push_back(alg->generator(static_cast<GenId>(i)));
    return {model, fiber_map, DgaMorphism(A, model, std::move(from))};
}

BaseChange base_change(const ModelPtr& M, const DgaMorphism& f, const std::string& fiber_suffix) {
    const ModelPtr& A = f.target();
    std::vector<GenId> bmap(A->algebra()->size());
    std::iota(bmap.begin(), bmap.end(), 0);
    return base_change_impl(M, f, fiber_suffix, "", A, bmap, A->name() + "⊗" + M->name());
}

BaseChange relative_tensor(const ModelPtr& M, const ModelPtr& N) {
    if (!M->base() || !N->base()) throw AlgebraError("relative tensor needs two semifree models");
    if (M->base() != N->base() && !structurally_equal(*M->base(), *N->base()))
        throw AlgebraError("relative tensor: bases differ");
    return base_change_impl(M, base_inclusion(N), "@L", "@R", N->base(), N->base_map(),
                            M->name() + "⊗_" + M->base()->name() + N->name());
}

bool is_minimal(const DgaModel& V) {
    for (const auto& img : V.d().images())
        for (const auto& [m, c] : img.terms()) {
            int len = 0;
            for (const auto& f : m.factors()) len += f.exp;
            if (len < 2) return false;
        }
    return true;
}

bool is_pure(const DgaModel& V) {
    const auto& alg = V.algebra();
    for (const auto& g : alg->generators()) {
        const Element& img = V.d().image(g.id);
        if (!g.odd()) {
            if (!img.is_zero()) return false;
            continue;
        }
        for (const auto& [m, c] : img.terms())
            for (const auto& f : m.factors())
                if (alg->odd(f.id)) return false;
    }
    return true;
}

bool is_semipure(const DgaModel& V) {
    const auto& alg = V.algebra();
    for (const auto& g : alg->generators()) {
        if (g.odd()) continue;
        for (const auto& [m, c] : V.d().image(g.id).terms()) {
            bool has_even = false;
            for (const auto& f : m.factors())
                if (!alg->odd(f.id)) has_even = true;
            if (!has_even) return false;
        }
    }
    return true;
}

}  // namespace brane
