#include "doctest.h"
#include "oracles.hpp"

using namespace gcross;
using namespace testsupport;


TEST_CASE("alpha-induced modules are bimodules") {
    for (const auto& [s, a] : theta_pairs()) {
        Spec S = spec(s);
        Frobenius A = load_algebra(S, data(a));
        for (int l = 0; l < S.rank(); ++l)
            for (int sign : {+1, -1}) {
                Report r = check_bimodule(alpha_bimodule(A, Obj::simple(l), sign), 1e-9);
                INFO(s, " ", a, " ", l, " ", sign, "\n", r.to_text());
                CHECK(r.ok());
            }
    }
}

TEST_CASE("tensor splitting is a retract onto the balanced product") {
    Spec S = spec("ising_trivialG");
    Frobenius A = load_algebra(S, data("algebra_1psi"));
    for (int a = 0; a < S.rank(); ++a)
        for (int b = 0; b < S.rank(); ++b)
            for (int sign : {+1, -1}) {
                Obj La = Obj::simple(a), Lb = Obj::simple(b);
                TensorSplit t = alpha_tensor_split(A, La, Lb, sign);
                CHECK(dist(compose(t.r, t.s), identity(S, otimes(A.A, otimes(La, Lb)))) < 1e-9);
                Morphism e = compose(t.s, t.r);
                CHECK(dist(compose(e, e), e) < 1e-9);
            }
}

TEST_CASE("Z matrix of the unit algebra is the identity") {
    for (const auto& name : bundled_specs()) {
        Spec S = spec(name);
        CHECK(z_matrix(unit_algebra(S)) == identity_z(S.rank()));
    }
}

TEST_CASE("Z matrix agrees with the bimodule intertwiner count") {
    for (const auto& [s, a] : std::vector<Pair>{{"ising_trivialG", "algebra_1psi"}, {"vec_z4", "algebra_z4_boson"},
                                                {"ising_trivialG", "algebra_unit"}, {"vec_z2_semion", "algebra_unit"}}) {
        CAPTURE(s);
        CAPTURE(a);
        Spec S = spec(s);
        Frobenius A = load_algebra(S, data(a));
        const auto Z = z_matrix(A);
        CHECK(Z == intertwiner_z(A));
        CHECK(Z == ptilde_z(A));
    }
}

TEST_CASE("Ising with 1+psi has diagonal Z") {
    // The fermion algebra is not commutative, so nothing condenses: hom(alpha+, alpha-) is
    // one-dimensional on each diagonal entry, including sigma.
    Spec S = spec("ising_trivialG");
    Frobenius A = load_algebra(S, data("algebra_1psi"));
    CHECK(z_matrix(A) == identity_z(3));
}

TEST_CASE("Z4 boson condensation Z matrix") {
    Spec S = spec("vec_z4");
    Frobenius A = load_algebra(S, data("algebra_z4_boson"));
    const std::vector<std::vector<int>> expect{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    CHECK(z_matrix(A) == expect);
}

TEST_CASE("local homs are fixed by the thick idempotent and J is bimodular") {
    Spec S = spec("vec_z4");
    Frobenius A = load_algebra(S, data("algebra_z4_boson"));
    for (int a = 0; a < S.rank(); ++a)
        for (int b = 0; b < S.rank(); ++b)
            for (const auto& f : local_homs(A, a, b)) {
                Morphism Pt = idempotent_Ptilde(A, Obj::simple(b));
                CHECK(dist(compose(Pt, f), f) < 1e-9);
                Morphism J = J_map(A, f);
                Bimodule X = alpha_bimodule(A, Obj::simple(a), +1), Y = alpha_bimodule(A, Obj::simple(b), -1);
                Morphism iA = identity(S, A.A);
                CHECK(dist(compose(J, X.left), compose(Y.left, tensor(iA, J))) < 1e-9);
                CHECK(dist(compose(J, X.right), compose(Y.right, tensor(J, iA))) < 1e-9);
            }
}
