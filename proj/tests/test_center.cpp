#include "doctest.h"
#include "support.hpp"

using namespace gcross;
using namespace testsupport;

TEST_CASE("full center is isomorphic to Theta on the reference pairs") {
    for (const auto& [s, a] : theta_pairs()) {
        CAPTURE(s);
        CAPTURE(a);
        Spec S = spec(s);
        NeutralDouble nd = neutral_double(S);
        Frobenius A = load_algebra(*nd.C, data(a));
        Theta lr = longo_rehren(nd);
        FullCenter F = full_center(A, nd, lr);
        INFO(F.checks.to_text());
        CHECK(F.checks.ok());
        // product idempotent directly vs through the left center of the commutative factor
        CHECK(dist(idempotent_P(F.prod), F.P) < 1e-9);
        Report fz = check_equivariant(F.Z, 1e-9);
        CHECK(fz.ok());
        CHECK(check_g_commutative(F.Z, 1e-9).ok());
        Theta T = build_theta(A, nd);
        CHECK(multiplicities(F.Z.A) == multiplicities(T.alg.A));
        Comparison C = compare_center_theta(F.Z, T.alg);
        INFO(C.checks.to_text());
        CHECK(C.iso_found);
        Report iso = check_isomorphism(F.Z, T.alg, C.psi, 1e-8);
        INFO(iso.to_text());
        CHECK(iso.ok());
    }
}

TEST_CASE("comparison rejects algebras on different objects") {
    Spec S = spec("vec_z4");
    NeutralDouble nd = neutral_double(S);
    Frobenius A = load_algebra(*nd.C, data("algebra_z4_boson"));
    Theta lr = longo_rehren(nd);
    Theta T = build_theta(A, nd);
    Comparison C = compare_center_theta(lr.alg, T.alg);
    CHECK_FALSE(C.multiplicities_equal);
    CHECK_FALSE(C.iso_found);
}

TEST_CASE("Z matrices commute with S and T") {
    {
        Spec S = spec("ising_trivialG");
        ModularCheck mc = modular_invariance(S, z_matrix(unit_algebra(S)));
        CHECK(mc.zs < 1e-9);
        CHECK(mc.zt < 1e-9);
    }
    {
        Spec S = spec("vec_z4");
        Frobenius A = load_algebra(S, data("algebra_z4_boson"));
        ModularCheck mc = modular_invariance(S, z_matrix(A));
        CHECK(mc.zs < 1e-9);
        CHECK(mc.zt < 1e-9);
        // a non-invariant matrix is detected
        std::vector<std::vector<int>> bad(4, std::vector<int>(4, 0));
        bad[0][0] = 1;
        bad[1][1] = 1;
        ModularCheck mb = modular_invariance(S, bad);
        CHECK(std::max(mb.zs, mb.zt) > 1e-2);
    }
}

TEST_CASE("Ising modular data") {
    Spec S = spec("ising_trivialG");
    ModularData md = modular_data(S);
    const int s = S.find_label("sigma"), p = S.find_label("psi");
    CHECK(std::abs(md.T(s, s) - std::exp(cplx(0, M_PI / 8))) < 1e-9);
    CHECK(std::abs(md.T(p, p) + 1.0) < 1e-9);
    CHECK(std::abs(md.S(0, 0) - 0.5) < 1e-9);
    CHECK((md.S * md.S.adjoint() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("modularity report") {
    {
        Spec S = spec("ising_trivialG");
        NeutralDouble nd = neutral_double(S);
        ModularityReport r = modularity_report(longo_rehren(nd), S);
        CHECK(r.maximal);
        CHECK(r.has_st);
        CHECK(r.modular);
        CHECK(r.checks.ok());
        CHECK(std::abs(r.dim_theta - 4.0) < 1e-9);
    }
    {
        // the grading of the crossed Ising is faithful: |G| dim C_e = dim C = 4
        Spec S = spec("ising_z2crossed");
        NeutralDouble nd = neutral_double(S);
        ModularityReport r = modularity_report(longo_rehren(nd), S);
        CHECK(r.maximal);
        CHECK_FALSE(r.has_st);
        CHECK(r.g_times_neutral_dim == doctest::Approx(4.0));
    }
    {
        // 2 is transparent for i^(a^2): the braiding is degenerate and Theta(1+2) is twice dim C
        Spec S = spec("vec_z4");
        NeutralDouble nd = neutral_double(S);
        Frobenius A = load_algebra(*nd.C, data("algebra_z4_boson"));
        ModularityReport r = modularity_report(build_theta(A, nd), S);
        CHECK_FALSE(r.modular);
        CHECK_FALSE(r.maximal);
        CHECK(std::abs(r.dim_theta - 8.0) < 1e-9);
        CHECK(r.checks.ok());
    }
}
