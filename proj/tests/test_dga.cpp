#include "support.hpp"

#include <gtest/gtest.h>

using namespace brane;
using namespace brane::testing;

TEST(Derivation, LeibnizRule) {
    auto V = model("gen b 2\ngen c 3\ngen e 4\ngen f 5\nd c = b^2\nd f = b*e\n");
    auto S = sphere_model(V, 2);
    const Derivation s = suspension_derivation(S->algebra(), 4, 1, -1);
    std::mt19937 rng(5);
    for (const Derivation* theta : {&S->d(), &s}) {
        for (int i = 0; i < 6; ++i) {
            Element p = random_element(S->algebra(), i, rng), q = random_element(S->algebra(), 6 - i, rng);
            Q sign = (theta->degree() * i) % 2 ? -1 : 1;
            EXPECT_EQ(theta->apply(p * q), theta->apply(p) * q + sign * (p * theta->apply(q)));
        }
    }
}

TEST(Derivation, RejectsInhomogeneousImages) {
    auto V = s3();
    const auto& alg = V->algebra();
    EXPECT_THROW(Derivation(alg, 1, {alg->one()}), AlgebraError);
}

TEST(SphereModel, S4Differentials) {
    auto S = sphere_model(s4(), 2);
    const auto& a = S->algebra();
    EXPECT_TRUE(S->d().image(*a->find("s1_x")).is_zero());
    EXPECT_EQ(S->d().image(*a->find("s1_y")), expr(a, "-2*x*s1_x"));
    EXPECT_EQ(a->gen(*a->find("s1_y")).degree, 6);
}

TEST(SphereModel, OddSphereSuspensionSign) {
    // k - 1 = 2 gives d̄(s^2 v) = + s^(2)(dv)
    auto S = sphere_model(s4(), 3);
    const auto& a = S->algebra();
    EXPECT_EQ(S->d().image(*a->find("s2_y")), expr(a, "2*x*s2_x"));
}

TEST(SphereModel, RequiresConnectivity) { EXPECT_THROW(sphere_model(s3(), 4), std::exception); }

TEST(DiskModel, S4Differentials) {
    auto D = disk_model(s4(), 2);
    const auto& a = D->algebra();
    EXPECT_EQ(D->d().image(*a->find("s2_y")), expr(a, "s1_y + 2*x*s2_x"));
    EXPECT_EQ(D->d().image(*a->find("s2_x")), expr(a, "s1_x"));
    auto R = disk_model(s4(), 2, true);
    EXPECT_EQ(R->d().image(*R->algebra()->find("s2_y")), expr(R->algebra(), "-s1_y + 2*x*s2_x"));
}

TEST(PathModel, S4Differential) {
    auto P = path_model(s4());
    const auto& a = P->algebra();
    EXPECT_EQ(P->d().image(*a->find("s_x")), expr(a, "x@R - x@L"));
    EXPECT_EQ(P->d().image(*a->find("s_y")), expr(a, "y@R - y@L - x@L*s_x - x@R*s_x"));
}

TEST(PathModel, RejectsNonMinimal) {
    EXPECT_THROW(path_model(model("gen x 3\ngen y 4\nd x = y\n")), std::exception);
}

TEST(Models, DSquaredVanishes) {
    for (const auto& V : {s3(), s4(), s3xs3(), s5()}) {
        for (int k : {2, 3}) {
            if (k == 3 && V->algebra()->gen(0).degree < 4) continue;
            SCOPED_TRACE(V->name() + " k=" + std::to_string(k));
            EXPECT_FALSE(check_d_squared(*sphere_model(V, k), 14));
            EXPECT_FALSE(check_d_squared(*disk_model(V, k), 14));
            EXPECT_FALSE(check_d_squared(*disk_model(V, k, true), 14));
        }
        EXPECT_FALSE(check_d_squared(*path_model(V), 14));
    }
}

TEST(Models, DSquaredWitness) {
    auto bad = model("gen a 1\ngen b 2\ngen c 3\nd a = b\nd b = c\n");
    auto w = check_d_squared(*bad, 4);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->degree, 1);
    EXPECT_EQ(w->input, "a");
    EXPECT_EQ(w->value, "c");
}

TEST(Models, DiskBaseChangeIsTheNextSphere) {
    for (const auto& V : {s3(), s4(), s3xs3(), s5()}) {
        for (int k : {2, 3}) {
            if (k == 3 && V->algebra()->gen(0).degree < 4) continue;
            auto Sk = sphere_model(V, k);
            auto D = disk_model(V, k, false, Sk);
            auto bc = base_change(D, morphism_phi(Sk, V));
            EXPECT_TRUE(structurally_equal(*bc.model, *sphere_model(V, k + 1))) << V->name() << " k=" << k;
        }
    }
}

TEST(Models, EpsilonTildeIsAQuasiIsomorphism) {
    for (const auto& V : {s3(), s4(), s3xs3()}) {
        auto D = disk_model(V, 2);
        EXPECT_FALSE(quasi_isomorphism_failure(morphism_eps_tilde(D, V), 14)) << V->name();
        EXPECT_FALSE(check_chain_map(morphism_eps_tilde(D, V), 14));
    }
}

TEST(Models, EpsilonBarIsAQuasiIsomorphism) {
    for (const auto& V : {s3(), s4()}) {
        auto P = path_model(V);
        EXPECT_FALSE(quasi_isomorphism_failure(morphism_eps_bar(P, V), 12)) << V->name();
    }
}

TEST(Models, PhiIsAChainMap) {
    auto V = s4();
    auto S = sphere_model(V, 2);
    auto phi = morphism_phi(S, V);
    EXPECT_FALSE(check_chain_map(phi, 14));
    const auto& a = S->algebra();
    EXPECT_TRUE(phi.apply(S->differential(a->generator("s1_y"))).is_zero());
}

TEST(Models, ChainMapWitness) {
    auto V = s4();
    auto S = sphere_model(V, 2);
    // sending s1_x to nothing but keeping s1_y is not compatible with d(s1_y) = -2 x s1_x
    std::vector<Element> img{S->algebra()->generator(0), S->algebra()->generator(1), S->algebra()->zero(),
                             S->algebra()->generator(3)};
    DgaMorphism f(S, S, img);
    EXPECT_TRUE(check_chain_map(f, 8));
}

TEST(Models, QuotientByEvenPart) {
    auto V = s4();
    auto q = quotient(V, {0});
    ASSERT_EQ(q.model->algebra()->size(), 1u);
    EXPECT_EQ(q.model->algebra()->gen(0).name, "y");
    EXPECT_TRUE(q.model->d().image(0).is_zero());
    EXPECT_THROW(quotient(V, {1}), std::exception);
}

TEST(Models, TranspositionsAreChainInvolutions) {
    for (const auto& m : {path_model(s4()), disk_model(s4(), 2), path_model(s3xs3())}) {
        auto t = transposition_morphisms(m);
        EXPECT_FALSE(check_chain_map(t.t, 10));
        EXPECT_FALSE(check_chain_map(t.t_tilde, 10));
        auto tt = compose(t.t_tilde, t.t_tilde);
        for (std::size_t i = 0; i < m->algebra()->size(); ++i)
            EXPECT_EQ(tt.image(static_cast<GenId>(i)), m->algebra()->generator(static_cast<GenId>(i)));
    }
}

TEST(Models, RelativeTensorLayout) {
    auto V = s3();
    auto Ssm = sphere_model(V, 2);
    auto D = disk_model(V, 2, false, Ssm);
    auto Dr = disk_model(V, 2, true, Ssm);
    auto A = relative_tensor(D, Dr);
    const auto& a = A.model->algebra();
    ASSERT_EQ(a->size(), 4u);
    EXPECT_EQ(a->gen(0).name, "x");
    EXPECT_EQ(a->gen(1).name, "s1_x");
    EXPECT_EQ(a->gen(2).name, "s2_x@R");
    EXPECT_EQ(a->gen(3).name, "s2_x@L");
    EXPECT_EQ(A.model->d().image(2), expr(a, "-s1_x"));
    EXPECT_EQ(A.model->d().image(3), expr(a, "s1_x"));
    EXPECT_FALSE(check_d_squared(*A.model, 12));
}

TEST(Models, Predicates) {
    EXPECT_TRUE(is_pure(*s4()));
    EXPECT_TRUE(is_minimal(*s4()));
    EXPECT_TRUE(is_semipure(*s3xs3()));
    auto cp2 = model("gen x 2\ngen y 5\nd y = x^3\n");
    EXPECT_TRUE(is_pure(*cp2));
    EXPECT_FALSE(is_minimal(*model("gen x 3\ngen y 4\nd x = y\n")));
}
