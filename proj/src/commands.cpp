#include "brane/commands.hpp"

#include "brane/brane_ops.hpp"
#include "brane/model_file.hpp"

#include <algorithm>
#include <iostream>

namespace brane {

namespace {

class Table {
  public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void row(std::vector<std::string> r) { rows_.push_back(std::move(r)); }

    void print(std::ostream& os, bool tsv) const {
        if (tsv) {
            emit(os, header_, {}, "\t");
            for (const auto& r : rows_) emit(os, r, {}, "\t");
            return;
        }
        std::vector<std::size_t> w(header_.size());
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        emit(os, header_, w, "  ");
        for (const auto& r : rows_) emit(os, r, w, "  ");
    }

  private:
    // column widths count code points so that ⊗ and σ align
    static std::size_t display_width(const std::string& s) {
        return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    }
    static void emit(std::ostream& os, const std::vector<std::string>& r, const std::vector<std::size_t>& w,
                     const char* sep) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << sep;
            os << r[i];
            if (!w.empty() && i + 1 < r.size()) os << std::string(w[i] - display_width(r[i]), ' ');
        }
        os << "\n";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void generator_table(const DgaModel& m, std::ostream& out, bool tsv) {
    Table t({"generator", "degree", "d"});
    for (const auto& g : m.algebra()->generators())
        t.row({g.name, std::to_string(g.degree), m.d().image(g.id).str()});
    t.print(out, tsv);
}

int cutoff_for(const GorensteinInfo& info, int n) { return n + std::max({info.m, info.mbar, 0}); }

std::string dual_label(const GradedBasis& H, int i) { return "σ(" + H.label(i) + ")*"; }

void operation_table(const BraneOperation& op, std::ostream& out, bool tsv) {
    const GradedBasis& H = *op.H;
    const bool homology = op.kind == BraneOperation::Kind::HomologyProduct || op.kind == BraneOperation::Kind::HomologyCoproduct;
    auto label = [&](int i) { return homology ? dual_label(H, i) : H.label(i); };
    auto deg = [&](const Tuple& t) {
        int d = 0;
        for (int i : t) d += homology ? op.shifted_degree[i] : H.degree[i];
        return d;
    };
    std::vector<Tuple> sources;
    if (op.op.src_arity == 1) {
        for (int i = 0; i < H.size(); ++i)
            if (H.degree[i] <= op.op.max_src_degree) sources.push_back({i});
    } else {
        for (int n = 0; n <= op.op.max_src_degree; ++n)
            for (auto& t : H.tuples(2, n)) sources.push_back(t);
    }
    if (homology) {
        std::stable_sort(sources.begin(), sources.end(), [&](const Tuple& a, const Tuple& b) { return deg(a) > deg(b); });
        Table basis({"basis", "degree", "dual of"});
        for (int i = H.size() - 1; i >= 0; --i) basis.row({label(i), std::to_string(op.shifted_degree[i]), H.reps[i].str()});
        basis.print(out, tsv);
        out << "\n";
    }
    Table t({"degree", "source", "target", "coefficient"});
    for (const auto& s : sources) {
        std::string src;
        for (std::size_t i = 0; i < s.size(); ++i) src += (i ? "⊗" : "") + label(s[i]);
        TensorVec col = op.op.column(s);
        if (col.empty()) {
            t.row({std::to_string(deg(s)), src, "-", "0"});
            continue;
        }
        for (const auto& [u, c] : col) {
            std::string tgt;
            for (std::size_t i = 0; i < u.size(); ++i) tgt += (i ? "⊗" : "") + label(u[i]);
            t.row({std::to_string(deg(s)), src, tgt, to_string(c)});
        }
    }
    t.print(out, tsv);
}

void report(std::ostream& out, const CheckReport& r, bool& ok) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " (sign " << to_string(r.sign) << ", " << r.checked << " checked)";
    if (!r.witness.empty()) out << ": " << r.witness;
    out << "\n";
    ok = ok && r.pass;
}

// Runs `check` on a perturbed copy of `op`; the control passes when the checker rejects it.
template <class F>
void negative_control(std::ostream& out, const BraneOperation& op, int max_degree, const std::string& name, F check,
                      bool& ok) {
    bool any = false;
    for (const auto& [t, col] : op.op.cols) any = any || op.H->tuple_degree(t) <= max_degree;
    if (!any) {
        out << "SKIP negative control for " << name << ": no nonzero entry up to degree " << max_degree << "\n";
        return;
    }
    CheckReport r = check(perturb(op, 1, 1, max_degree));
    out << (r.pass ? "FAIL" : "PASS") << " negative control for " << name << (r.pass ? ": perturbation not detected" : ": perturbation detected") << "\n";
    ok = ok && !r.pass;
}

int run_verify(const CommandOptions& opt, const ModelFile& mf, std::ostream& out) {
    ModelPtr V = mf.model();
    GorensteinInfo info = gorenstein_info(*V, opt.k, mf.m, mf.mbar);
    const int N = opt.max_degree;
    bool ok = true;
    const std::string& s = opt.suite;

    if (s == "signs") {
        Q loop = transposition_sign_loop(V, std::max(N, 8));
        Q want = (info.p + info.q) % 2 ? Q(-1) : Q(1);
        bool p1 = loop == want;
        out << (p1 ? "PASS" : "FAIL") << " transposition sign loop = " << to_string(loop) << ", expected (-1)^(p+q) = " << to_string(want) << "\n";
        for (int deg : {opt.k + 1, opt.k + 2}) {
            Q c = one_generator_ext_sign(deg, opt.k);
            out << (c == -1 ? "PASS" : "FAIL") << " one-generator Ext sign, |v| = " << deg << ": " << to_string(c) << "\n";
            ok = ok && c == -1;
        }
        Q prod = ext_sign_product(*V, opt.k);
        Q want2 = V->algebra()->size() % 2 ? Q(-1) : Q(1);
        out << (prod == want2 ? "PASS" : "FAIL") << " Ext sign product = " << to_string(prod) << ", expected (-1)^(dim V) = " << to_string(want2) << "\n";
        ok = ok && p1 && prod == want2;
        return ok ? kOk : kVerificationFailed;
    }

    BraneEngine engine(V, opt.k, info, cutoff_for(info, N));
    if (s == "thm13") {
        if (info.p == 0) {
            out << "FAIL model has no even generators\n";
            return kVerificationFailed;
        }
        BraneEngine e13(V, opt.k, info, N);
        BraneOperation cop = e13.coproduct_dual();
        CheckReport r = check_zero_operation(cop);
        r.name = "coproduct dual vanishes up to degree " + std::to_string(N);
        report(out, r, ok);
        return ok ? kOk : kVerificationFailed;
    }

    BraneOperation prod = engine.product_dual();
    BraneOperation cop = engine.coproduct_dual();
    if (s == "assoc") {
        report(out, check_associativity(prod, N), ok);
        report(out, check_associativity(cop, N), ok);
        negative_control(out, prod, N, "product associativity", [&](const BraneOperation& p) { return check_associativity(p, N); }, ok);
        negative_control(out, cop, N, "coproduct associativity", [&](const BraneOperation& p) { return check_associativity(p, N); }, ok);
    } else if (s == "comm") {
        report(out, check_commutativity(prod, N), ok);
        report(out, check_commutativity(cop, N), ok);
        negative_control(out, prod, N, "product commutativity", [&](const BraneOperation& p) { return check_commutativity(p, N); }, ok);
        negative_control(out, cop, N, "coproduct commutativity", [&](const BraneOperation& p) { return check_commutativity(p, N); }, ok);
    } else if (s == "frobenius") {
        report(out, check_frobenius(prod, cop, N), ok);
        if (cop.op.cols.empty())
            out << "SKIP negative control for Frobenius (product): the coproduct vanishes, so both sides ignore the product\n";
        else
            negative_control(out, prod, N, "Frobenius (product)", [&](const BraneOperation& p) { return check_frobenius(p, cop, N); }, ok);
        negative_control(out, cop, N, "Frobenius (coproduct)", [&](const BraneOperation& p) { return check_frobenius(prod, p, N); }, ok);
    } else if (s == "thm12") {
        SphereTable tab = odd_sphere_table(dualize_to_homology(prod), dualize_to_homology(cop));
        out << "deg y = " << tab.deg_y << ", deg z = " << tab.deg_z << "\n";
        out << (tab.exterior ? "PASS" : "FAIL") << " product is the exterior algebra on y, z\n";
        for (const auto& l : tab.product_lines) out << "  " << l << "\n";
        if (tab.exterior) out << "normalization z = " << to_string(tab.normalization) << "·σ(x·s2_x)*\n";
        for (const auto& e : tab.coproduct) {
            out << (e.match ? "PASS " : "FAIL ") << e.lhs << " = " << e.computed;
            if (!e.match) out << "  (expected " << e.expected << ")";
            out << "\n";
        }
        ok = tab.pass();
    } else {
        throw std::invalid_argument("unknown suite '" + s + "'");
    }
    return ok ? kOk : kVerificationFailed;
}

int dispatch(const CommandOptions& opt, std::ostream& out) {
    ModelFile mf = read_model_file(opt.model_path);
    ModelPtr V = mf.model();
    const std::string& c = opt.command;
    if (c == "check-dga") {
        if (auto w = check_d_squared(*V, opt.max_degree)) {
            out << "FAIL d^2 != 0 in degree " << w->degree << ": d^2(" << w->input << ") = " << w->value << "\n";
            return kVerificationFailed;
        }
        out << "PASS d^2 = 0 up to degree " << opt.max_degree << "\n";
        return kOk;
    }
    if (c == "cohomology") {
        Table t({"degree", "dimension", "representatives"});
        for (int n = 0; n <= opt.max_degree; ++n) {
            CohomologyBasis b = cohomology_basis(*V, n);
            std::string reps;
            for (const auto& r : b.representatives) reps += (reps.empty() ? "" : ", ") + r.str();
            t.row({std::to_string(n), std::to_string(b.dimension()), reps.empty() ? "-" : reps});
        }
        t.print(out, opt.tsv);
        return kOk;
    }
    if (c == "sphere-model") {
        generator_table(*sphere_model(V, opt.k), out, opt.tsv);
        return kOk;
    }
    if (c == "disk-model") {
        generator_table(*disk_model(V, opt.k), out, opt.tsv);
        return kOk;
    }
    if (c == "path-model") {
        generator_table(*path_model(V), out, opt.tsv);
        return kOk;
    }
    if (c == "brane-product" || c == "brane-coproduct") {
        GorensteinInfo info = gorenstein_info(*V, opt.k, mf.m, mf.mbar);
        BraneEngine engine(V, opt.k, info, opt.max_degree);
        BraneOperation op = c == "brane-product" ? engine.product_dual() : engine.coproduct_dual();
        if (opt.homology) op = dualize_to_homology(op);
        if (!opt.tsv) out << "m = " << info.m << ", mbar = " << info.mbar << ", shift = " << op.shift << "\n";
        operation_table(op, out, opt.tsv);
        return kOk;
    }
    if (c == "verify") return run_verify(opt, mf, out);
    throw std::invalid_argument("unknown command '" + c + "'");
}

}  // namespace

int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(opt, out);
    } catch (const ParseError& e) {
        err << opt.model_path << ":" << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "model error: " << e.what() << "\n";
    }
    return kUsageOrModelError;
}

}  // namespace brane
