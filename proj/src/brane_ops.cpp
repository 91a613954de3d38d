#include "brane/brane_ops.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace brane {

namespace {

bool odd(long n) { return n % 2 != 0; }

Q sign_of(long n) { return odd(n) ? Q(-1) : Q(1); }

}  // namespace

int GradedBasis::tuple_degree(const Tuple& t) const {
    int d = 0;
    for (int i : t) d += degree.at(i);
    return d;
}

std::string GradedBasis::label(int i) const {
    const Element& r = reps.at(i);
    if (r.size() == 1 && r.terms().begin()->second == 1) return r.str();
    return "[" + r.str() + "]";
}

std::string GradedBasis::tuple_label(const Tuple& t) const {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += "⊗";
        s += label(t[i]);
    }
    return s;
}

std::vector<Tuple> GradedBasis::tuples(int arity, int total_degree) const {
    std::vector<Tuple> out;
    Tuple cur;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == arity) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int i = 0; i < size(); ++i) {
            if (degree[i] > remaining) break;
            if (pos == arity - 1 && degree[i] != remaining) continue;
            cur.push_back(i);
            rec(pos + 1, remaining - degree[i]);
            cur.pop_back();
        }
    };
    if (total_degree >= 0) rec(0, total_degree);
    return out;
}

std::vector<Q> GradedBasis::coords_of(int i) const {
    int d = degree.at(i);
    int n = first_of_degree[d + 1] - first_of_degree[d];
    std::vector<Q> c(n);
    c[i - first_of_degree[d]] = 1;
    return c;
}

void add_to(TensorVec& acc, const Tuple& t, const Q& c) {
    if (c == 0) return;
    auto [it, inserted] = acc.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    }
}

TensorVec scaled(const TensorVec& v, const Q& c) {
    TensorVec r;
    if (c == 0) return r;
    for (const auto& [t, x] : v) r.emplace(t, x * c);
    return r;
}

bool tensor_equal(const TensorVec& a, const TensorVec& b) { return a == b; }

TensorVec TensorOp::column(const Tuple& t) const {
    auto it = cols.find(t);
    if (it != cols.end()) return it->second;
    return {};
}

TensorVec TensorOp::apply(const TensorVec& v) const {
    TensorVec r;
    for (const auto& [t, c] : v)
        for (const auto& [u, x] : column(t)) add_to(r, u, c * x);
    return r;
}

TensorVec apply_at(const TensorOp& op, const GradedBasis& H, int pos, const TensorVec& v) {
    TensorVec r;
    for (const auto& [t, c] : v) {
        if (pos + op.src_arity > static_cast<int>(t.size())) throw std::invalid_argument("operation does not fit the tuple");
        Tuple sub(t.begin() + pos, t.begin() + pos + op.src_arity);
        if (H.tuple_degree(sub) > op.max_src_degree)
            throw std::out_of_range("operation was not computed in degree " + std::to_string(H.tuple_degree(sub)));
        int before = 0;
        for (int i = 0; i < pos; ++i) before += H.degree[t[i]];
        Q s = sign_of(static_cast<long>(op.degree) * before);
        for (const auto& [u, x] : op.column(sub)) {
            Tuple nt(t.begin(), t.begin() + pos);
            nt.insert(nt.end(), u.begin(), u.end());
            nt.insert(nt.end(), t.begin() + pos + op.src_arity, t.end());
            add_to(r, nt, c * x * s);
        }
    }
    return r;
}

TensorVec swap_factors(const GradedBasis& H, const TensorVec& v) {
    TensorVec r;
    for (const auto& [t, c] : v) {
        if (t.size() != 2) throw std::invalid_argument("swap needs pairs");
        add_to(r, {t[1], t[0]}, c * sign_of(static_cast<long>(H.degree[t[0]]) * H.degree[t[1]]));
    }
    return r;
}

struct PipelineContext {
    ModelPtr Ssm, S, D, Dr, SS, P, A2;
    BaseChange A1, A3, B1, B2;
    DgaMorphism e1, g1, e2, incl, h, e3, incl_A1;
    bool product_ready = false, coproduct_ready = false;
    std::optional<ShriekResult> gamma, delta;
    std::map<int, Matrix> e1_inv, e2_inv, e3_inv, kunneth_inv;
    std::map<int, std::vector<Tuple>> kunneth_tuples;
};

BraneEngine::BraneEngine(ModelPtr V, int k, GorensteinInfo info, int cutoff)
    : V_(std::move(V)), k_(k), info_(info), cutoff_(cutoff), ctx_(std::make_unique<PipelineContext>()) {
    if (k_ < 2) throw ModelError("brane operations need k >= 2");
    if (!is_minimal(*V_)) throw ModelError("brane operations need a minimal model");
    auto& c = *ctx_;
    const int l = static_cast<int>(V_->algebra()->size());
    c.Ssm = sphere_model(V_, k_);
    c.S = sphere_model(V_, k_ + 1);
    c.D = disk_model(V_, k_, false, c.Ssm);
    c.Dr = disk_model(V_, k_, true, c.Ssm);
    c.SS = tensor_models(c.S, c.S);
    c.A1 = relative_tensor(c.D, c.Dr);

    // A1 = D ⊗_{Ssm} Dr has generators V, s^(k-1)V, s^k V (reversed copy), s^k V (normal copy).
    const auto& a1 = c.A1.model->algebra();
    const auto& s = c.S->algebra();
    {
        std::vector<Element> img(4 * l, s->zero());
        for (int i = 0; i < l; ++i) {
            img[i] = s->generator(i);
            img[2 * l + i] = s->generator(l + i);
        }
        c.e1 = DgaMorphism(c.A1.model, c.S, std::move(img));
    }

    int hmax = cutoff_ + std::max({info_.m, info_.mbar, 0});
    auto H = std::make_shared<GradedBasis>();
    H->model = c.S;
    H->max_degree = hmax;
    for (int n = 0; n <= hmax; ++n) {
        H->first_of_degree.push_back(H->size());
        for (const auto& r : cohomology_basis(*c.S, n).representatives) {
            H->degree.push_back(n);
            H->reps.push_back(r);
        }
    }
    H->first_of_degree.push_back(H->size());
    H_ = H;
    (void)a1;
}

BraneEngine::~BraneEngine() = default;

const ModelPtr& BraneEngine::sphere() const { return ctx_->S; }
const ModelPtr& BraneEngine::sphere_square() const { return ctx_->SS; }

const ShriekResult& BraneEngine::delta() {
    auto& c = *ctx_;
    if (!c.delta) {
        if (!c.P) c.P = path_model(V_);
        c.delta = shriek_delta(V_, c.P, cutoff_);
    }
    return *c.delta;
}

const ShriekResult& BraneEngine::gamma() {
    auto& c = *ctx_;
    if (!c.gamma) c.gamma = shriek_gamma(V_, c.D, k_, cutoff_);
    return *c.gamma;
}

static Element pull_back(const DgaMorphism& e, std::map<int, Matrix>& cache, const Element& y, int n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, invert_on_cohomology(e, n)).first;
    std::vector<Q> coords = class_coordinates(*e.target(), y, n);
    return class_representative(*e.source(), n, it->second.apply(coords));
}

Element BraneEngine::kunneth(const Tuple& t) const {
    const auto& c = *ctx_;
    const auto& ss = c.SS->algebra();
    const GenId off = static_cast<GenId>(c.S->algebra()->size());
    std::vector<GenId> left(off), right(off);
    for (GenId i = 0; i < off; ++i) {
        left[i] = i;
        right[i] = off + i;
    }
    return mul(transport(H_->reps.at(t.at(0)), ss, left), transport(H_->reps.at(t.at(1)), ss, right));
}

TensorVec BraneEngine::kunneth_coords(const Element& cocycle, int n) const {
    auto& c = *ctx_;
    auto it = c.kunneth_inv.find(n);
    if (it == c.kunneth_inv.end()) {
        if (n > H_->max_degree) throw std::out_of_range("Kunneth basis not available in degree " + std::to_string(n));
        auto tuples = H_->tuples(2, n);
        int dim = cohomology_data(*c.SS, n)->dimension();
        if (static_cast<int>(tuples.size()) != dim)
            throw ModelError("Kunneth count mismatch in degree " + std::to_string(n));
        Matrix K(dim, dim);
        for (int j = 0; j < dim; ++j) {
            auto col = class_coordinates(*c.SS, kunneth(tuples[j]), n);
            for (int i = 0; i < dim; ++i) K(i, j) = col[i];
        }
        auto inv = K.inverse();
        if (!inv) throw ModelError("Kunneth classes are dependent in degree " + std::to_string(n));
        c.kunneth_tuples[n] = tuples;
        it = c.kunneth_inv.emplace(n, *inv).first;
    }
    std::vector<Q> x = it->second.apply(class_coordinates(*c.SS, cocycle, n));
    TensorVec r;
    const auto& tuples = c.kunneth_tuples.at(n);
    for (std::size_t i = 0; i < x.size(); ++i) add_to(r, tuples[i], x[i]);
    return r;
}

Element BraneEngine::product_dual_cocycle(const Element& a) {
    auto& c = *ctx_;
    const int l = static_cast<int>(V_->algebra()->size());
    if (!c.product_ready) {
        delta();
        c.A2 = relative_tensor(c.S, c.S).model;  // V, s^k V@R, s^k V@L
        const auto& a2 = c.A2->algebra();
        {
            std::vector<Element> img(4 * l, a2->zero());
            for (int i = 0; i < l; ++i) {
                img[i] = a2->generator(i);
                img[2 * l + i] = a2->generator(l + i);      // reversed copy -> right factor
                img[3 * l + i] = a2->generator(2 * l + i);  // normal copy -> left factor
            }
            c.g1 = DgaMorphism(c.A1.model, c.A2, std::move(img));
        }
        const auto& ss = c.SS->algebra();
        {
            std::vector<Element> img(2 * l);
            for (int i = 0; i < l; ++i) {
                img[i] = ss->generator(i);
                img[l + i] = ss->generator(2 * l + i);
            }
            c.incl = DgaMorphism(c.P->base(), c.SS, std::move(img));
        }
        c.A3 = base_change(c.P, c.incl);
        {
            std::vector<Element> img(5 * l, a2->zero());
            for (int i = 0; i < l; ++i) {
                img[i] = a2->generator(i);
                img[l + i] = a2->generator(2 * l + i);
                img[2 * l + i] = a2->generator(i);
                img[3 * l + i] = a2->generator(l + i);
            }
            c.e2 = DgaMorphism(c.A3.model, c.A2, std::move(img));
        }
        for (const DgaMorphism* f : {&c.e1, &c.g1, &c.incl, &c.e2})
            if (auto w = check_chain_map_generators(*f))
                throw ModelError("product pipeline map is not a chain map at " + w->input + ": " + w->value);
        c.product_ready = true;
    }
    auto deg = a.degree();
    const int n = deg ? *deg : 0;
    Element z1 = pull_back(c.e1, c.e1_inv, a, n);
    Element z2 = c.g1.apply(z1);
    Element z3 = pull_back(c.e2, c.e2_inv, z2, n);
    return apply_tensor_id(c.delta->map, c.A3, c.incl, z3);
}

Element BraneEngine::coproduct_dual_cocycle(const Element& x) {
    auto& c = *ctx_;
    const int l = static_cast<int>(V_->algebra()->size());
    if (!c.coproduct_ready) {
        gamma();
        DgaMorphism phi = morphism_phi(c.Ssm, V_);
        c.B1 = base_change(c.A1.model, phi);  // V, s^k V (reversed copy), s^k V (normal copy)
        const auto& b1 = c.B1.model->algebra();
        {
            std::vector<Element> img(4 * l);
            for (int i = 0; i < l; ++i) {
                img[i] = b1->generator(i);
                img[l + i] = b1->generator(2 * l + i);
                img[2 * l + i] = b1->generator(i);
                img[3 * l + i] = b1->generator(l + i);
            }
            c.h = DgaMorphism(c.SS, c.B1.model, std::move(img));
        }
        c.incl_A1 = base_inclusion(c.A1.model);
        c.B2 = base_change(c.D, c.incl_A1, "@0");
        {
            std::vector<Element> img(5 * l, b1->zero());
            for (int i = 0; i < l; ++i) {
                img[i] = b1->generator(i);
                img[2 * l + i] = b1->generator(l + i);
                img[3 * l + i] = b1->generator(2 * l + i);
            }
            c.e3 = DgaMorphism(c.B2.model, c.B1.model, std::move(img));
        }
        for (const DgaMorphism* f : {&c.e1, &c.h, &c.e3})
            if (auto w = check_chain_map_generators(*f))
                throw ModelError("coproduct pipeline map is not a chain map at " + w->input + ": " + w->value);
        c.coproduct_ready = true;
    }
    auto deg = x.degree();
    const int n = deg ? *deg : 0;
    Element y = c.h.apply(x);
    Element z = pull_back(c.e3, c.e3_inv, y, n);
    Element w = apply_tensor_id(c.gamma->map, c.B2, c.incl_A1, z);
    return c.e1.apply(w);
}

BraneOperation BraneEngine::product_dual() {
    BraneOperation op;
    op.kind = BraneOperation::Kind::ProductDual;
    op.k = k_;
    op.info = info_;
    op.H = H_;
    op.shift = delta().map.degree();
    op.op.src_arity = 1;
    op.op.tgt_arity = 2;
    op.op.degree = op.shift;
    op.op.max_src_degree = cutoff_;
    for (int i = 0; i < H_->size(); ++i) {
        int n = H_->degree[i];
        if (n > cutoff_) break;
        Element z = product_dual_cocycle(H_->reps[i]);
        TensorVec col = kunneth_coords(z, n + op.shift);
        if (!col.empty()) op.op.cols[{i}] = col;
    }
    return op;
}

BraneOperation BraneEngine::coproduct_dual() {
    BraneOperation op;
    op.kind = BraneOperation::Kind::CoproductDual;
    op.k = k_;
    op.info = info_;
    op.H = H_;
    op.shift = gamma().map.degree();
    op.op.src_arity = 2;
    op.op.tgt_arity = 1;
    op.op.degree = op.shift;
    op.op.max_src_degree = cutoff_;
    for (int n = 0; n <= cutoff_; ++n) {
        for (const auto& t : H_->tuples(2, n)) {
            int tn = n + op.shift;
            if (tn < 0) continue;
            Element w = coproduct_dual_cocycle(kunneth(t));
            std::vector<Q> coords = class_coordinates(*ctx_->S, w, tn);
            TensorVec col;
            for (std::size_t j = 0; j < coords.size(); ++j) add_to(col, {H_->first_of_degree[tn] + static_cast<int>(j)}, coords[j]);
            if (!col.empty()) op.op.cols[t] = col;
        }
    }
    return op;
}

BraneOperation brane_product_dual(const ModelPtr& V, int k, const GorensteinInfo& info, int cutoff) {
    BraneEngine e(V, k, info, cutoff);
    return e.product_dual();
}

BraneOperation brane_coproduct_dual(const ModelPtr& V, int k, const GorensteinInfo& info, int cutoff) {
    BraneEngine e(V, k, info, cutoff);
    return e.coproduct_dual();
}

BraneOperation dualize_to_homology(const BraneOperation& op) {
    const GradedBasis& H = *op.H;
    const long m = op.info.m;
    BraneOperation out = op;
    out.op.cols.clear();
    out.shifted_degree.clear();
    for (int i = 0; i < H.size(); ++i) out.shifted_degree.push_back(H.degree[i] - static_cast<int>(m));
    const long r = op.shift;
    if (op.kind == BraneOperation::Kind::ProductDual) {
        out.kind = BraneOperation::Kind::HomologyProduct;
        out.op.src_arity = 2;
        out.op.tgt_arity = 1;
        out.op.degree = static_cast<int>(m) - op.shift;
        for (const auto& [src, col] : op.op.cols) {
            const int k = src[0];
            for (const auto& [t, x] : col) {
                const long ai = H.degree[t[0]], aj = H.degree[t[1]];
                Q c = x * sign_of(r * (ai + aj)) * sign_of(ai * aj) * sign_of(m * (ai - m));
                add_to(out.op.cols[t], {k}, c);
            }
        }
    } else if (op.kind == BraneOperation::Kind::CoproductDual) {
        out.kind = BraneOperation::Kind::HomologyCoproduct;
        out.op.src_arity = 1;
        out.op.tgt_arity = 2;
        out.op.degree = -static_cast<int>(m) - op.shift;
        for (const auto& [t, col] : op.op.cols) {
            const long ai = H.degree[t[0]], aj = H.degree[t[1]];
            for (const auto& [kt, x] : col) {
                const long ak = H.degree[kt[0]];
                Q c = x * sign_of(r * ak) * sign_of(ai * aj) * sign_of(m * ai);
                add_to(out.op.cols[kt], t, c);
            }
        }
    } else {
        throw std::invalid_argument("operation is already on homology");
    }
    // a homology column is complete when every dual column it is read from was computed
    out.op.max_src_degree = op.op.max_src_degree + op.shift;
    for (auto it = out.op.cols.begin(); it != out.op.cols.end();)
        it = it->second.empty() ? out.op.cols.erase(it) : std::next(it);
    return out;
}

std::string tensor_str(const TensorVec& v, const std::function<std::string(int)>& label) {
    if (v.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : v) {
        Q a = abs(c);
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (a != 1) s += to_string(a) + "*";
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "⊗" : "") + label(t[i]);
    }
    return s;
}

static std::string vec_str(const GradedBasis& H, const TensorVec& v) {
    return tensor_str(v, [&](int i) { return H.label(i); });
}

static void fail(CheckReport& rep, const std::string& w) {
    if (rep.pass) rep.witness = w;
    rep.pass = false;
}

CheckReport check_associativity(const BraneOperation& op, int max_degree) {
    const GradedBasis& H = *op.H;
    CheckReport rep;
    if (op.kind == BraneOperation::Kind::ProductDual) {
        rep.name = "associativity (product)";
        rep.sign = sign_of(op.info.m);
        for (int i = 0; i < H.size() && H.degree[i] <= max_degree; ++i) {
            TensorVec v = op.op.column({i});
            TensorVec L = apply_at(op.op, H, 0, v);
            TensorVec R = scaled(apply_at(op.op, H, 1, v), rep.sign);
            ++rep.checked;
            if (L != R) fail(rep, "at " + H.label(i) + ": (μ∨⊗id)μ∨ = " + vec_str(H, L) + " but sign·(id⊗μ∨)μ∨ = " + vec_str(H, R));
        }
    } else if (op.kind == BraneOperation::Kind::CoproductDual) {
        rep.name = "associativity (coproduct)";
        rep.sign = sign_of(op.info.mbar);
        for (int n = 0; n <= max_degree; ++n)
            for (const auto& t : H.tuples(3, n)) {
                TensorVec v{{t, Q(1)}};
                TensorVec L = op.op.apply(apply_at(op.op, H, 0, v));
                TensorVec R = scaled(op.op.apply(apply_at(op.op, H, 1, v)), rep.sign);
                ++rep.checked;
                if (L != R) fail(rep, "at " + H.tuple_label(t) + ": " + vec_str(H, L) + " vs " + vec_str(H, R));
            }
    } else {
        throw std::invalid_argument("associativity is checked on dual operations");
    }
    return rep;
}

CheckReport check_commutativity(const BraneOperation& op, int max_degree) {
    const GradedBasis& H = *op.H;
    CheckReport rep;
    if (op.kind == BraneOperation::Kind::ProductDual) {
        rep.name = "commutativity (product)";
        rep.sign = sign_of(op.info.m);
        for (int i = 0; i < H.size() && H.degree[i] <= max_degree; ++i) {
            TensorVec v = op.op.column({i});
            TensorVec L = swap_factors(H, v);
            TensorVec R = scaled(v, rep.sign);
            ++rep.checked;
            if (L != R) fail(rep, "at " + H.label(i) + ": τμ∨ = " + vec_str(H, L) + " but sign·μ∨ = " + vec_str(H, R));
        }
    } else if (op.kind == BraneOperation::Kind::CoproductDual) {
        rep.name = "commutativity (coproduct)";
        rep.sign = sign_of(op.info.mbar);
        for (int n = 0; n <= max_degree; ++n)
            for (const auto& t : H.tuples(2, n)) {
                TensorVec v{{t, Q(1)}};
                TensorVec L = op.op.apply(swap_factors(H, v));
                TensorVec R = scaled(op.op.apply(v), rep.sign);
                ++rep.checked;
                if (L != R) fail(rep, "at " + H.tuple_label(t) + ": δ∨τ = " + vec_str(H, L) + " but sign·δ∨ = " + vec_str(H, R));
            }
    } else {
        throw std::invalid_argument("commutativity is checked on dual operations");
    }
    return rep;
}

CheckReport check_frobenius(const BraneOperation& prod, const BraneOperation& coprod, int max_degree) {
    const GradedBasis& H = *prod.H;
    CheckReport rep;
    rep.name = "Frobenius";
    rep.sign = sign_of(static_cast<long>(prod.info.m) * prod.info.mbar);
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& t : H.tuples(2, n)) {
            TensorVec v{{t, Q(1)}};
            TensorVec L = prod.op.apply(coprod.op.apply(v));
            TensorVec R = scaled(apply_at(coprod.op, H, 0, apply_at(prod.op, H, 1, v)), rep.sign);
            ++rep.checked;
            if (L != R) fail(rep, "at " + H.tuple_label(t) + ": μ∨δ∨ = " + vec_str(H, L) + " but sign·(δ∨⊗id)(id⊗μ∨) = " + vec_str(H, R));
        }
    return rep;
}

CheckReport coproduct_iterate_nonzero(const BraneOperation& coprod, int max_degree) {
    const GradedBasis& H = *coprod.H;
    CheckReport rep;
    rep.name = "iterated coproduct nonzero";
    rep.pass = false;
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& t : H.tuples(3, n)) {
            TensorVec v{{t, Q(1)}};
            TensorVec w = coprod.op.apply(apply_at(coprod.op, H, 0, v));
            ++rep.checked;
            if (!w.empty() && !rep.pass) {
                rep.pass = true;
                rep.witness = "δ∨(δ∨⊗id)(" + H.tuple_label(t) + ") = " + vec_str(H, w);
            }
        }
    return rep;
}

CheckReport check_zero_operation(const BraneOperation& op) {
    CheckReport rep;
    rep.name = "zero operation";
    const GradedBasis& H = *op.H;
    for (int n = 0; n <= op.op.max_src_degree; ++n) rep.checked += static_cast<int>(H.tuples(op.op.src_arity, n).size());
    for (const auto& [t, col] : op.op.cols)
        if (!col.empty()) {
            fail(rep, op.H->tuple_label(t) + " -> " + vec_str(*op.H, col));
            break;
        }
    return rep;
}

BraneOperation perturb(const BraneOperation& op, unsigned seed, const Q& delta, int max_src_degree) {
    auto palindrome = [](const Tuple& t) {
        return t.size() > 1 && std::equal(t.begin(), t.begin() + t.size() / 2, t.rbegin());
    };
    std::vector<std::pair<Tuple, Tuple>> entries, all;
    for (const auto& [t, col] : op.op.cols) {
        if (max_src_degree >= 0 && op.H->tuple_degree(t) > max_src_degree) continue;
        for (const auto& [u, x] : col) {
            all.emplace_back(t, u);
            if (!palindrome(t) && !palindrome(u)) entries.emplace_back(t, u);
        }
    }
    if (all.empty()) throw std::invalid_argument("no nonzero entry to perturb");
    if (entries.empty()) entries = all;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    auto [t, u] = entries[pick(rng)];
    BraneOperation out = op;
    add_to(out.op.cols[t], u, delta);
    return out;
}

bool SphereTable::pass() const {
    if (!exterior) return false;
    for (const auto& e : coproduct)
        if (!e.match) return false;
    return true;
}

SphereTable odd_sphere_table(const BraneOperation& hprod, const BraneOperation& hcoprod) {
    const GradedBasis& H = *hprod.H;
    SphereTable tab;
    // H^*(M_{S^2}) of (∧x, 0) is ∧(x, s2_x): degrees 0, |x|-2, |x|, 2|x|-2
    int xdeg = -1;
    for (int i = 0; i < H.size(); ++i)
        if (H.degree[i] > 0 && H.reps[i].size() == 1) {
            const auto& m = H.reps[i].terms().begin()->first;
            if (m.factors().size() == 1 && m.factors()[0].id == 0) xdeg = H.degree[i];
        }
    if (xdeg < 3) return tab;
    auto index_of = [&](int d) -> int {
        if (d > H.max_degree) return -1;
        int n = H.first_of_degree[d + 1] - H.first_of_degree[d];
        return n == 1 ? H.first_of_degree[d] : -1;
    };
    const int i1 = index_of(0), iw = index_of(xdeg - 2), ix = index_of(xdeg), ixw = index_of(2 * xdeg - 2);
    if (i1 < 0 || iw < 0 || ix < 0 || ixw < 0 || H.size() != 4) return tab;

    // shifted basis: e = σ x*, y = σ 1*, Z = σ (x s2x)*, W = σ (s2x)*
    const int E = ix, Y = i1, Z = ixw, W = iw;
    tab.deg_y = hprod.shifted_degree[Y];
    tab.deg_z = hprod.shifted_degree[Z];

    auto prod = [&](int a, int b) { return hprod.op.column({a, b}); };
    auto single = [](int i, const Q& c) {
        TensorVec v;
        add_to(v, {i}, c);
        return v;
    };
    bool ok = true;
    for (int a : {E, Y, Z, W}) {
        if (prod(E, a) != single(a, 1) || prod(a, E) != single(a, 1)) ok = false;
    }
    TensorVec yz = prod(Y, Z);
    Q c = yz.size() == 1 && yz.begin()->first == Tuple{W} ? yz.begin()->second : Q(0);
    if (c == 0) ok = false;
    if (prod(Z, Y) != single(W, sign_of(static_cast<long>(tab.deg_y) * tab.deg_z) * c)) ok = false;
    for (auto [a, b] : std::vector<std::pair<int, int>>{{Y, Y}, {Z, Z}, {Y, W}, {W, Y}, {Z, W}, {W, Z}, {W, W}})
        if (!prod(a, b).empty()) ok = false;
    tab.exterior = ok;
    tab.product_lines.push_back("1·a = a·1 = a for a in {1, y, z, yz}");
    tab.product_lines.push_back("y·z = yz, z·y = " + std::string(sign_of(static_cast<long>(tab.deg_y) * tab.deg_z) < 0 ? "-" : "") + "yz");
    tab.product_lines.push_back("y·y = z·z = 0");
    if (!ok) return tab;

    // rewrite the coproduct in the basis 1, y, z = βZ, yz = βcW with β fixed by the 1⊗yz coefficient of δ(1)
    auto cop = [&](int a) { return hcoprod.op.column({a}); };
    Q coeff_eW = 0;
    for (const auto& [t, x] : cop(E))
        if (t == Tuple{E, W}) coeff_eW = x;
    if (coeff_eW == 0) return tab;
    const Q beta = coeff_eW / c;
    tab.normalization = beta;
    std::map<int, std::string> name{{E, "1"}, {Y, "y"}, {Z, "z"}, {W, "yz"}};
    std::map<int, Q> inv_scale{{E, 1}, {Y, 1}, {Z, 1 / beta}, {W, 1 / (beta * c)}};
    std::map<int, Q> scale{{E, 1}, {Y, 1}, {Z, beta}, {W, beta * c}};
    auto render = [&](const std::map<std::pair<int, int>, Q>& v) {
        std::string s;
        bool first = true;
        for (int a : {E, Y, Z, W})
            for (int b : {E, Y, Z, W}) {
                auto it = v.find({a, b});
                if (it == v.end() || it->second == 0) continue;
                Q x = it->second;
                s += first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + ");
                first = false;
                if (abs(x) != 1) s += to_string(abs(x)) + "*";
                s += name[a] + "⊗" + name[b];
            }
        return s.empty() ? std::string("0") : s;
    };
    struct Expect {
        int src;
        std::map<std::pair<int, int>, Q> v;
    };
    std::vector<Expect> expected{
        {E, {{{E, W}, 1}, {{Y, Z}, -1}, {{Z, Y}, 1}, {{W, E}, 1}}},
        {Y, {{{Y, W}, 1}, {{W, Y}, 1}}},
        {Z, {{{Z, W}, 1}, {{W, Z}, 1}}},
        {W, {{{W, W}, -1}}},
    };
    for (const auto& ex : expected) {
        std::map<std::pair<int, int>, Q> got;
        for (const auto& [t, x] : cop(ex.src)) {
            Q v = x * scale[ex.src] * inv_scale[t[0]] * inv_scale[t[1]];
            if (v != 0) got[{t[0], t[1]}] = v;
        }
        SphereTable::Equation eq;
        eq.lhs = "δ(" + name[ex.src] + ")";
        eq.expected = render(ex.v);
        eq.computed = render(got);
        eq.match = (eq.expected == eq.computed);
        tab.coproduct.push_back(eq);
    }
    return tab;
}

}  // namespace brane
