#include "brane/brane_ops.hpp"
#include "brane/model_file.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace brane;

namespace {

ModelPtr model(const std::string& text) { return parse_model(text).model(); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (exact, " << t.str() << "s)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failures;
}

std::string show(const GradedBasis& H, const TensorVec& v) {
    return tensor_str(v, [&](int i) { return H.label(i); });
}

int index_of(const GradedBasis& H, const std::string& label) {
    for (int i = 0; i < H.size(); ++i)
        if (H.label(i) == label) return i;
    throw std::out_of_range("no basis element " + label);
}

}  // namespace

int main() {
    const ModelPtr S3 = model("model S3\ngen x 3\n");
    const ModelPtr S4 = model("model S4\ngen x 4\ngen y 7\nd y = x^2\n");
    const ModelPtr S3xS3 = model("model S3xS3\ngen a 3\ngen b 3\n");

    BraneEngine engine(S3, 2, gorenstein_info(*S3, 2), 12);
    const BraneOperation prod = engine.product_dual();
    const BraneOperation cop = engine.coproduct_dual();
    const GradedBasis& H = *engine.basis();

    criterion(1, "odd-sphere homology table: exterior product and four coproduct equations", [&] {
        Outcome o;
        SphereTable tab = odd_sphere_table(dualize_to_homology(prod), dualize_to_homology(cop));
        o.require(tab.deg_y == -3, "deg y = " + std::to_string(tab.deg_y));
        o.require(tab.deg_z == 1, "deg z = " + std::to_string(tab.deg_z));
        o.require(tab.exterior, "product is not the exterior algebra on y, z");
        o.require(tab.coproduct.size() == 4, "coproduct table incomplete");
        for (const auto& e : tab.coproduct)
            o.require(e.match, e.lhs + " computed " + e.computed + ", expected " + e.expected);
        return o;
    });

    criterion(2, "dual-level values of the product and coproduct on S^3", [&] {
        Outcome o;
        const auto& ss = engine.sphere_square()->algebra();
        const auto& SS = *engine.sphere_square();
        // μ∨(1) = 1⊗x − x⊗1 and μ∨(s²x) = (1⊗x − x⊗1)(s²x⊗1 + 1⊗s²x), compared as classes in the tensor square
        Element unit = parse_element(ss, "x@R - x@L");
        Element susp = parse_element(ss, "x@R - x@L") * parse_element(ss, "s2_x@L + s2_x@R");
        Element mu1 = engine.product_dual_cocycle(engine.sphere()->algebra()->one());
        Element muw = engine.product_dual_cocycle(engine.sphere()->algebra()->generator("s2_x"));
        o.require(class_coordinates(SS, mu1, 3) == class_coordinates(SS, unit, 3), "μ∨(1) = " + show(H, prod.op.column({0})));
        o.require(class_coordinates(SS, muw, 4) == class_coordinates(SS, susp, 4),
                  "μ∨(s²x) = " + show(H, prod.op.column({index_of(H, "s2_x")})));
        const int one = index_of(H, "1"), w = index_of(H, "s2_x");
        const std::vector<std::pair<Tuple, std::string>> expect{
            {{one, one}, "0"}, {{w, one}, "-1"}, {{one, w}, "1"}, {{w, w}, "-s2_x"}};
        for (const auto& [t, want] : expect) {
            std::string got = show(H, cop.op.column(t));
            o.require(got == want, "δ∨(" + H.tuple_label(t) + ") = " + got + ", expected " + want);
        }
        return o;
    });

    criterion(3, "coproduct on the S^4 model vanishes through degree 14", [&] {
        Outcome o;
        BraneEngine e4(S4, 2, gorenstein_info(*S4, 2), 14);
        CheckReport r = check_zero_operation(e4.coproduct_dual());
        o.require(r.pass, r.witness);
        o.detail = o.pass ? std::to_string(r.checked) + " source tuples" : o.detail;
        return o;
    });

    criterion(4, "model constructions: d^2 = 0, ε̃ quasi-isomorphism, disk base change is the next sphere", [&] {
        Outcome o;
        for (const auto& V : {S3, S4, S3xS3}) {
            const std::string n = V->name();
            auto Ssm = sphere_model(V, 2);
            auto D = disk_model(V, 2, false, Ssm);
            o.require(!check_d_squared(*Ssm, 14), n + ": sphere model d^2 != 0");
            o.require(!check_d_squared(*sphere_model(V, 3), 14), n + ": next sphere model d^2 != 0");
            o.require(!check_d_squared(*D, 14), n + ": disk model d^2 != 0");
            o.require(!check_d_squared(*disk_model(V, 2, true, Ssm), 14), n + ": reversed disk d^2 != 0");
            o.require(!check_d_squared(*path_model(V), 14), n + ": path model d^2 != 0");
            auto fail = quasi_isomorphism_failure(morphism_eps_tilde(D, V), 14);
            o.require(!fail, n + ": ε̃ not invertible in degree " + (fail ? std::to_string(*fail) : ""));
            auto bc = base_change(D, morphism_phi(Ssm, V));
            o.require(structurally_equal(*bc.model, *sphere_model(V, 3)), n + ": base change differs from the sphere model");
        }
        return o;
    });

    criterion(5, "shriek maps are cocycles and pair nontrivially", [&] {
        Outcome o;
        for (const auto& V : {S3, S4, S3xS3}) {
            const std::string n = V->name();
            ShriekResult g = shriek_gamma_pure(V, 12);
            ShriekResult f = shriek_delta_semipure(V, 12);
            auto wg = check_cocycle(g.map, 12);
            auto wf = check_cocycle(f.map, 12);
            o.require(!wg, n + ": D(γ!) != 0 at " + (wg ? wg->input : ""));
            o.require(!wf, n + ": D(f) != 0 at " + (wf ? wf->input : ""));
            o.require(gamma_certificate(V, g).pairing.nonzero(), n + ": γ! pairs to zero");
            Certificate c = delta_certificate(V, f);
            o.require(c.pairing.nonzero(), n + ": f pairs to zero");
        }
        Certificate c4 = delta_certificate(S4, shriek_delta_semipure(S4, 12));
        o.require(c4.pairing.value.str() == "y", "S4: ev(f ⊗ s x) = " + c4.pairing.value.str());
        return o;
    });

    criterion(6, "sign laws: transposition loop (-1)^(p+q), one-generator Ext sign -1", [&] {
        Outcome o;
        Q l3 = transposition_sign_loop(S3, 12), l4 = transposition_sign_loop(S4, 12);
        o.require(l3 == -1, "S3 loop sign " + to_string(l3));
        o.require(l4 == 1, "S4 loop sign " + to_string(l4));
        Q odd_case = one_generator_ext_sign(3, 2), even_case = one_generator_ext_sign(4, 2);
        o.require(odd_case == -1, "|s v| odd: " + to_string(odd_case));
        o.require(even_case == -1, "|s v| even: " + to_string(even_case));
        return o;
    });

    criterion(7, "associativity, commutativity and Frobenius on S^3 through degree 8, negative controls rejected", [&] {
        Outcome o;
        const Q sm = -1, smbar = -1, smmbar = -1;  // m = 3, m̄ = -1
        for (const auto& r : {check_associativity(prod, 8), check_associativity(cop, 8)}) {
            o.require(r.pass, r.name + ": " + r.witness);
        }
        CheckReport cp = check_commutativity(prod, 8), cc = check_commutativity(cop, 8), fr = check_frobenius(prod, cop, 8);
        o.require(cp.pass && cp.sign == sm, cp.name + ": " + cp.witness);
        o.require(cc.pass && cc.sign == smbar, cc.name + ": " + cc.witness);
        o.require(fr.pass && fr.sign == smmbar, fr.name + ": " + fr.witness);
        BraneOperation bp = perturb(prod, 1, 1, 8), bc = perturb(cop, 1, 1, 8);
        o.require(!check_associativity(bp, 8).pass, "perturbed product passes associativity");
        o.require(!check_associativity(bc, 8).pass, "perturbed coproduct passes associativity");
        o.require(!check_commutativity(bp, 8).pass, "perturbed product passes commutativity");
        o.require(!check_commutativity(bc, 8).pass, "perturbed coproduct passes commutativity");
        o.require(!check_frobenius(bp, cop, 8).pass, "perturbed product passes Frobenius");
        o.require(!check_frobenius(prod, bc, 8).pass, "perturbed coproduct passes Frobenius");
        return o;
    });

    criterion(8, "iterated coproduct on S^3 is nonzero", [&] {
        Outcome o;
        CheckReport r = coproduct_iterate_nonzero(cop, 8);
        o.require(r.pass, "all iterated values vanish through degree 8");
        if (r.pass) o.detail = r.witness;
        return o;
    });

    std::cout << (failures ? std::to_string(failures) + " of 8 criteria failed" : std::string("all 8 criteria passed")) << std::endl;
    return failures ? 1 : 0;
}
