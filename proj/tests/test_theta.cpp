#include "doctest.h"
#include "support.hpp"

using namespace gcross;
using namespace testsupport;

namespace {

// sum_{lam1, lam2} Z d_lam1 d_lam2
double expected_dim(const Spec& S, const std::vector<std::vector<int>>& Z) {
    double d = 0.0;
    for (int a = 0; a < S.rank(); ++a)
        for (int b = 0; b < S.rank(); ++b) d += Z[a][b] * S.qdim(a) * S.qdim(b);
    return d;
}

}  // namespace

TEST_CASE("Theta passes all structural checks on the reference pairs") {
    for (const auto& [s, a] : theta_pairs()) {
        CAPTURE(s);
        CAPTURE(a);
        Spec S = spec(s);
        NeutralDouble nd = neutral_double(S);
        Frobenius A = load_algebra(*nd.C, data(a));
        Theta T = build_theta(A, nd);
        INFO(T.checks.to_text());
        CHECK(T.checks.ok());
        Report r = check_theta(T, 1e-9);
        INFO(r.to_text());
        CHECK(r.ok());
        CHECK(dist(compose(T.alg.m, T.alg.delta), identity(*nd.D, T.alg.A) * T.dim_theta) < 1e-9);
        CHECK(std::abs(T.dim_theta - expected_dim(S, T.Z)) < 1e-9);
        CHECK(check_g_commutative(T.alg, 1e-9).ok());
    }
}

TEST_CASE("Theta summands are (lam1, lam2 dual) with multiplicity Z") {
    Spec S = spec("vec_z4");
    NeutralDouble nd = neutral_double(S);
    Frobenius A = load_algebra(*nd.C, data("algebra_z4_boson"));
    Theta T = build_theta(A, nd);
    std::map<int, int> expect;
    for (int a = 0; a < S.rank(); ++a)
        for (int b = 0; b < S.rank(); ++b)
            if (T.Z[a][b]) expect[nd.pair(a, S.dual(b))] += T.Z[a][b];
    CHECK(multiplicities(T.alg.A) == expect);
}

TEST_CASE("Theta coefficients are gauge independent") {
    for (const auto& [s, a] : theta_pairs()) {
        CAPTURE(s);
        CAPTURE(a);
        Spec S = spec(s);
        NeutralDouble nd = neutral_double(S);
        Frobenius A = load_algebra(*nd.C, data(a));
        Theta T = build_theta(A, nd);
        // vertex bases and u-scalars: the algebra must not change at all
        ThetaOptions ov;
        ov.regauge_vertices = true;
        ov.seed = 5;
        Theta Tv = build_theta(A, nd, ov);
        CHECK(dist(T.alg.m, Tv.alg.m) < 1e-8);
        CHECK(dist(T.alg.delta, Tv.alg.delta) < 1e-8);
        for (const auto& [g, z] : T.alg.z) CHECK(dist(z, Tv.alg.z.at(g)) < 1e-8);
        // local-hom bases: isomorphic through the recorded change of basis
        ThetaOptions ol;
        ol.randomize_local_basis = true;
        ol.seed = 9;
        Theta Tl = build_theta(A, nd, ol);
        CHECK(Tl.checks.ok());
        std::map<std::pair<int, int>, Mat> inv;
        for (const auto& [k, G] : Tl.gauge) inv[k] = G.inverse();
        Report iso = check_isomorphism(T.alg, Tl.alg, multiplicity_map(T, Tl, inv), 1e-8);
        INFO(iso.to_text());
        CHECK(iso.ok());
    }
}

TEST_CASE("Longo-Rehren algebra has dimension dim C") {
    for (const auto& name : bundled_specs()) {
        CAPTURE(name);
        Spec S = spec(name);
        NeutralDouble nd = neutral_double(S);
        Theta lr = longo_rehren(nd);
        double d2 = 0.0;
        for (const auto& l : S.labels) d2 += l.qdim * l.qdim;
        CHECK(std::abs(lr.dim_theta - d2) < 1e-9);
        CHECK(lr.checks.ok());
    }
}
