#include "support.hpp"

#include <gtest/gtest.h>

using namespace brane;
using namespace brane::testing;

namespace {

Monomial mono(const AlgPtr& alg, const std::string& text) {
    Element e = expr(alg, text);
    EXPECT_EQ(e.size(), 1u);
    return e.terms().begin()->first;
}

}  // namespace

TEST(Gorenstein, Dimensions) {
    auto g3 = gorenstein_info(*s3(), 2);
    EXPECT_EQ(g3.m, 3);
    EXPECT_EQ(g3.mbar, -1);
    EXPECT_EQ(g3.p, 0);
    EXPECT_EQ(g3.q, 1);
    auto g4 = gorenstein_info(*s4(), 2);
    EXPECT_EQ(g4.m, 4);
    EXPECT_EQ(g4.mbar, -2);
    auto g33 = gorenstein_info(*s3xs3(), 2);
    EXPECT_EQ(g33.m, 6);
    EXPECT_EQ(g33.mbar, -2);
}

TEST(Gorenstein, OverridesMustKeepParity) {
    EXPECT_EQ(gorenstein_info(*s3(), 2, 5, 1).m, 5);
    EXPECT_THROW(gorenstein_info(*s3(), 2, 4), ModelError);
    EXPECT_THROW(gorenstein_info(*s3(), 2, std::nullopt, 0), ModelError);
}

TEST(ModuleMap, BaseLinearity) {
    auto V = s4();
    auto g = shriek_gamma_pure(V, 10);
    const auto& P = g.map.source();
    const auto& a = P->algebra();
    // F(b σ) = (-1)^(r|b|) b F(σ) with r = -2
    Element b = expr(a, "x");
    Element sigma = expr(a, "s2_y");
    Element lhs = g.map.apply(b * sigma);
    Element rhs = transport(b, g.map.target()->algebra(), {0, 1, 2, 3, -1, -1}) * g.map.apply(sigma);
    EXPECT_EQ(lhs, rhs);
}

TEST(ModuleMap, SplitBaseFiberSign) {
    auto P = disk_model(s3(), 2);
    const auto& a = P->algebra();
    // s2_x * x = - x * s2_x; base part first
    auto s = split_base_fiber(*P, mono(a, "x*s1_x*s2_x"));
    EXPECT_EQ(s.sign, 1);
    EXPECT_EQ(a->monomial_str(s.base), "x*s1_x");
    EXPECT_EQ(a->monomial_str(s.fiber), "s2_x");
}

TEST(Shriek, GammaForTheThreeSphere) {
    auto V = s3();
    auto g = shriek_gamma(V, disk_model(V, 2), 2, 12);
    EXPECT_EQ(g.map.degree(), -1);
    const auto& a = g.map.source()->algebra();
    EXPECT_EQ(g.map.value(mono(a, "s2_x")).str(), "1");
    EXPECT_TRUE(g.map.value(Monomial()).is_zero());
    EXPECT_FALSE(check_cocycle(g.map, 12));
}

TEST(Shriek, GammaForTheFourSphere) {
    auto V = s4();
    auto g = shriek_gamma_pure(V, 12);
    EXPECT_EQ(g.map.degree(), -2);
    const auto& a = g.map.source()->algebra();
    EXPECT_EQ(g.map.value(mono(a, "s2_y")).str(), "s1_x");
    EXPECT_TRUE(g.map.value(Monomial()).is_zero());
    EXPECT_TRUE(g.map.value(mono(a, "s2_x")).is_zero());
    EXPECT_FALSE(check_cocycle(g.map, 12));
    EXPECT_FALSE(g.used_solver);
}

TEST(Shriek, GammaForAProductOfSpheres) {
    auto V = s3xs3();
    auto g = shriek_gamma_pure(V, 12);
    const auto& a = g.map.source()->algebra();
    EXPECT_EQ(g.map.value(mono(a, "s2_a*s2_b")).str(), "1");
    EXPECT_FALSE(check_cocycle(g.map, 12));
}

TEST(Shriek, DeltaForTheFourSphere) {
    auto V = s4();
    auto d = shriek_delta_semipure(V, 14);
    EXPECT_EQ(d.map.degree(), 4);
    const auto& a = d.map.source()->algebra();
    const auto& b = d.map.target()->algebra();
    EXPECT_EQ(d.map.value(mono(a, "s_x")), expr(b, "y@R - y@L"));
    EXPECT_TRUE(d.correction.is_zero());
    EXPECT_EQ(d.map.value(Monomial()), expr(b, "x@L + x@R"));
    EXPECT_FALSE(check_cocycle(d.map, 14));
}

TEST(Shriek, DeltaForTheThreeSphere) {
    auto d = shriek_delta_semipure(s3(), 12);
    EXPECT_EQ(d.map.degree(), 3);
    EXPECT_EQ(d.map.value(Monomial()), expr(d.map.target()->algebra(), "x@R - x@L"));
    EXPECT_FALSE(check_cocycle(d.map, 12));
}

TEST(Shriek, DeltaForAProductOfSpheres) {
    auto d = shriek_delta_semipure(s3xs3(), 12);
    const auto& b = d.map.target()->algebra();
    EXPECT_EQ(d.map.value(Monomial()), expr(b, "a@R - a@L") * expr(b, "b@R - b@L"));
    EXPECT_FALSE(check_cocycle(d.map, 12));
}

TEST(Shriek, HomDifferentialDetectsBrokenMaps) {
    auto V = s4();
    auto d = shriek_delta_semipure(V, 10);
    ModuleMap broken = d.map;
    broken.set(Monomial(), d.map.target()->algebra()->zero());
    EXPECT_TRUE(check_cocycle(broken, 10));
    auto w = check_cocycle(broken, 10);
    EXPECT_EQ(w->input, "s_x");
}

TEST(Shriek, EvaluationCertificates) {
    for (const auto& V : {s3(), s4(), s3xs3()}) {
        SCOPED_TRACE(V->name());
        auto g = shriek_gamma_pure(V, 12);
        auto gc = gamma_certificate(V, g);
        EXPECT_TRUE(gc.pairing.nonzero());
        auto d = shriek_delta_semipure(V, 12);
        auto dc = delta_certificate(V, d);
        EXPECT_TRUE(dc.pairing.nonzero());
    }
    // ev([f] ⊗ [s x]) = [y] for the four-sphere
    auto V = s4();
    auto dc = delta_certificate(V, shriek_delta_semipure(V, 12));
    EXPECT_EQ(dc.cycle.str(), "s_x");
    EXPECT_EQ(dc.pairing.value.str(), "y");
}

TEST(Signs, TranspositionSignLoop) {
    EXPECT_EQ(transposition_sign_loop(s3(), 10), -1);
    EXPECT_EQ(transposition_sign_loop(s4(), 10), 1);
    EXPECT_EQ(transposition_sign_loop(s3xs3(), 10), 1);
    EXPECT_EQ(transposition_sign_loop(s5(), 10), -1);
}

TEST(Signs, OneGeneratorExtSign) {
    // |s v| odd and even
    EXPECT_EQ(one_generator_ext_sign(3, 2), -1);
    EXPECT_EQ(one_generator_ext_sign(4, 2), -1);
    EXPECT_EQ(one_generator_ext_sign(5, 3), -1);
    EXPECT_EQ(one_generator_ext_sign(6, 3), -1);
}

TEST(Signs, ExtSignProductIsParityOfDimension) {
    EXPECT_EQ(ext_sign_product(*s3(), 2), -1);
    EXPECT_EQ(ext_sign_product(*s4(), 2), 1);
    EXPECT_EQ(ext_sign_product(*s3xs3(), 2), 1);
}
