#include "doctest.h"
#include "gcross/lemmas.hpp"
#include "gcross/suite.hpp"
#include "support.hpp"

using namespace gcross;
using namespace testsupport;


TEST_CASE("crossing and conjugation identities hold on seeded random instances") {
    for (const auto& name : bundled_specs()) {
        CAPTURE(name);
        Spec S = spec(name);
        auto algs = usable_algebras(S, GCROSS_DATA_DIR, 1e-9);
        std::vector<const Frobenius*> ptr;
        for (const auto& [an, a] : algs)
            if (a.neutral()) ptr.push_back(&a);
        LemmaOptions opt;
        opt.instances = 25;
        opt.seed = 11;
        Report r = lemma_suite(S, ptr, opt);
        INFO(r.to_text());
        CHECK(r.ok());
        CHECK(r.find("thick_rotation") != nullptr);
        CHECK((r.find("conjugation_star") != nullptr) == S.unitary);
    }
}

TEST_CASE("Ising keeps the nontrivial algebra in the suite") {
    Spec S = spec("ising_trivialG");
    auto algs = usable_algebras(S, GCROSS_DATA_DIR, 1e-9);
    CHECK(std::any_of(algs.begin(), algs.end(), [](const auto& p) { return p.first == "1psi"; }));
    Spec X = spec("ising_z2crossed");
    auto xalgs = usable_algebras(X, GCROSS_DATA_DIR, 1e-9);
    CHECK(std::any_of(xalgs.begin(), xalgs.end(), [](const auto& p) { return p.first == "ind_unit"; }));
}

TEST_CASE("thick crossing is invertible on the balanced subspace") {
    Spec S = spec("ising_trivialG");
    Frobenius A = load_algebra(S, data("algebra_1psi"));
    Obj sigma = Obj::simple(S.find_label("sigma"));
    LeftModule mu = free_left(A, sigma);
    Morphism e = balance(A, alpha_bimodule(A, sigma, +1).right, mu.act);
    CHECK(dist(compose(e, e), e) < 1e-12);
    Morphism B = thick_plus(A, sigma, mu);
    Morphism Bi = balanced_inverse(B, e);
    CHECK(dist(compose(Bi, B), e) < 1e-10);
    CHECK(dist(compose(B, Bi), identity(S, B.tgt)) < 1e-10);
}

TEST_CASE("rotating the crossing with the wrong crossing type is detected") {
    Spec S = spec("ising_trivialG");
    Obj L = Obj::simple(S.find_label("sigma")), Ld = dual(S, L);
    Morphism iL = identity(S, L);
    auto rotated = [&](const Morphism& inner) {
        return compose({tensor({ev_r(S, L), iL, iL}), tensor({iL, inner, iL}), tensor({iL, iL, coev_r(S, L)})});
    };
    CHECK(dist(rotated(braid_inv(S, Ld, L)), braid(S, L, L)) < 1e-12);
    CHECK(dist(rotated(braid(S, L, Ld)), braid(S, L, L)) > 1e-2);
}
