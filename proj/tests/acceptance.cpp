// Acceptance runner: one PASS/FAIL line per criterion. Tolerances and time budgets are fixed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gcross/lemmas.hpp"
#include "gcross/suite.hpp"
#include "oracles.hpp"

using namespace gcross;
using namespace testsupport;

namespace {

constexpr double kTol = 1e-9;
constexpr double kLemmaTol = 1e-8;
constexpr double kGaugeTol = 1e-8;
constexpr double kIsoTol = 1e-8;
constexpr double kPerturb = 1e-3;
constexpr double kPentagonFloor = 1e-4;
constexpr int kInstances = 100;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int k, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    o.require(t < budget_s, "runtime " + std::to_string(t) + " s over budget");
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s  (%.2f s / %.0f s)%s\n", k, o.pass ? "PASS" : "FAIL", title, t, budget_s, o.detail.str().c_str());
    std::fflush(stdout);
}

std::string fmt(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2e", x);
    return b;
}

}  // namespace

int main() {
    criterion(1, "bundled categories validate; perturbed Ising F breaks the pentagon", 5.0, [](Outcome& o) {
        double worst = 0.0;
        for (const auto& name : bundled_specs()) {
            Report r = validate_spec(spec(name));
            o.require(r.ok(), name + " does not validate");
            worst = std::max(worst, r.max_residual());
        }
        o.require(worst < kTol, "validation residual " + fmt(worst));
        const Spec base = spec("ising_trivialG");
        double weakest = INFINITY;
        int entries = 0;
        for (const auto& [key, blk] : base.F)
            for (long i = 0; i < blk.M.rows(); ++i)
                for (long j = 0; j < blk.M.cols(); ++j, ++entries) {
                    Spec S = base;
                    S.F.at(key).M(i, j) += kPerturb;
                    S.finalize_blocks();
                    weakest = std::min(weakest, validate_spec(S).find("pentagon")->residual);
                }
        o.require(weakest >= kPentagonFloor, "weakest perturbed pentagon " + fmt(weakest));
        o.detail << " max validation residual " << fmt(worst) << ", " << entries << " F-symbols perturbed, min pentagon residual "
                 << fmt(weakest);
    });

    criterion(2, "crossing / conjugation / thick-crossing identities on seeded instances", 120.0, [](Outcome& o) {
        double worst = 0.0;
        size_t families = 0;
        for (const auto& name : bundled_specs()) {
            Spec S = spec(name);
            auto algs = usable_algebras(S, GCROSS_DATA_DIR, kTol);
            std::vector<const Frobenius*> neutral;
            for (const auto& [an, A] : algs)
                if (A.neutral()) neutral.push_back(&A);
            LemmaOptions lo;
            lo.instances = kInstances;
            lo.seed = 2024;
            lo.tol = kLemmaTol;
            Report r = lemma_suite(S, neutral, lo);
            for (const auto& c : r.checks) o.require(c.pass, name + "/" + c.name + " " + fmt(c.residual));
            worst = std::max(worst, r.max_residual());
            families = std::max(families, r.checks.size());
        }
        o.detail << " " << families << " families x " << bundled_specs().size() << " categories, max residual " << fmt(worst);
    });

    criterion(3, "left central idempotents: idempotent, trivial for commutative A, product formula", 60.0, [](Outcome& o) {
        double idem = 0.0, comm = 0.0, prod = 0.0;
        for (const auto& name : bundled_specs()) {
            Spec S = spec(name);
            for (const auto& [an, A] : usable_algebras(S, GCROSS_DATA_DIR, kTol)) {
                for (int l = -1; l < S.rank(); ++l) {
                    Obj L = l < 0 ? Obj::unit() : Obj::simple(l);
                    std::map<int, Morphism> zl;
                    try {
                        zl = trivial_equivariance(S, L);
                    } catch (const std::exception&) {
                        continue;  // no trivial equivariant structure on this simple
                    }
                    Morphism P = idempotent_P(A, L, zl);
                    idem = std::max(idem, dist(compose(P, P), P));
                }
                if (A.neutral())
                    for (int l = 0; l < S.rank(); ++l) {
                        Morphism Q = idempotent_Ptilde(A, Obj::simple(l));
                        idem = std::max(idem, dist(compose(Q, Q), Q));
                    }
                if (check_g_commutative(A, kTol).ok()) comm = std::max(comm, dist(idempotent_P(A), identity(S, A.A)));
            }
        }
        for (const auto& [s, a] : theta_pairs()) {
            Spec S = spec(s);
            NeutralDouble nd = neutral_double(S);
            Frobenius A = load_algebra(*nd.C, data(a));
            FullCenter F = full_center(A, nd, longo_rehren(nd));
            prod = std::max(prod, dist(idempotent_P(F.prod), F.P));
        }
        o.require(idem < kTol, "idempotence " + fmt(idem));
        o.require(comm < kTol, "commutative P - id " + fmt(comm));
        o.require(prod < kTol, "P_AB two ways " + fmt(prod));
        o.detail << " idempotence " << fmt(idem) << ", commutative " << fmt(comm) << ", product " << fmt(prod);
    });

    criterion(4, "Theta on the four reference pairs: axioms, m Delta = dim, gauge independence", 180.0, [](Outcome& o) {
        double worst = 0.0, gauge = 0.0;
        for (const auto& [s, a] : theta_pairs()) {
            Spec S = spec(s);
            NeutralDouble nd = neutral_double(S);
            Frobenius A = load_algebra(*nd.C, data(a));
            Theta T = build_theta(A, nd);
            Report r = check_theta(T, kTol);
            r.merge(T.checks);
            r.merge(check_g_commutative(T.alg, kTol));
            r.merge(check_g_cocommutative(T.alg, kTol));
            r.add("m_delta_dim", dist(compose(T.alg.m, T.alg.delta), identity(*nd.D, T.alg.A) * T.dim_theta), kTol);
            for (const auto& c : r.checks) o.require(c.pass, s + "/" + a + "/" + c.name);
            worst = std::max(worst, r.max_residual());

            Theta Tv = build_theta(A, nd, ThetaOptions{true, false, 77, kTol});
            double g = std::max(dist(T.alg.m, Tv.alg.m), dist(T.alg.delta, Tv.alg.delta));
            for (const auto& [h, z] : T.alg.z) g = std::max(g, dist(z, Tv.alg.z.at(h)));
            Theta Tl = build_theta(A, nd, ThetaOptions{false, true, 78, kTol});
            std::map<std::pair<int, int>, Mat> inv;
            for (const auto& [k, G] : Tl.gauge) inv[k] = G.inverse();
            Report iso = check_isomorphism(T.alg, Tl.alg, multiplicity_map(T, Tl, inv), kGaugeTol);
            g = std::max(g, iso.max_residual());
            gauge = std::max(gauge, g);
        }
        o.require(gauge < kGaugeTol, "gauge " + fmt(gauge));
        o.detail << " max check residual " << fmt(worst) << ", gauge change " << fmt(gauge);
    });

    criterion(5, "Z matrices against brute-force oracles", 60.0, [](Outcome& o) {
        for (const auto& name : bundled_specs()) {
            Spec S = spec(name);
            o.require(z_matrix(unit_algebra(S)) == identity_z(S.rank()), name + " unit Z");
        }
        Spec I = spec("ising_trivialG"), Z4 = spec("vec_z4");
        Frobenius f = load_algebra(I, data("algebra_1psi")), b = load_algebra(Z4, data("algebra_z4_boson"));
        for (const Frobenius* A : {&f, &b}) {
            auto Z = z_matrix(*A);
            o.require(Z == intertwiner_z(*A), A->name + " vs intertwiner nullspace");
            o.require(Z == ptilde_z(*A), A->name + " vs Ptilde rank");
        }
        o.require(z_matrix(b) == std::vector<std::vector<int>>{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}}, "Z4 boson pattern");
        o.detail << " unit on " << bundled_specs().size() << " categories; 1+psi and 1+2 match both oracles";
    });

    criterion(6, "Z commutes with S and T", 30.0, [](Outcome& o) {
        Spec I = spec("ising_trivialG"), Z4 = spec("vec_z4");
        Frobenius b = load_algebra(Z4, data("algebra_z4_boson"));
        ModularCheck m1 = modular_invariance(I, z_matrix(unit_algebra(I)));
        ModularCheck m2 = modular_invariance(Z4, z_matrix(b));
        const double r = std::max({m1.zs, m1.zt, m2.zs, m2.zt});
        o.require(r < kTol, "commutator " + fmt(r));
        o.detail << " max |ZS-SZ|, |ZT-TZ| = " << fmt(r);
    });

    criterion(7, "full center isomorphic to Theta on the four reference pairs", 300.0, [](Outcome& o) {
        double worst = 0.0;
        for (const auto& [s, a] : theta_pairs()) {
            Spec S = spec(s);
            NeutralDouble nd = neutral_double(S);
            Frobenius A = load_algebra(*nd.C, data(a));
            FullCenter F = full_center(A, nd, longo_rehren(nd));
            Theta T = build_theta(A, nd);
            Comparison C = compare_center_theta(F.Z, T.alg, 7, kIsoTol);
            o.require(C.multiplicities_equal, s + "/" + a + " multiplicities");
            o.require(C.iso_found && C.residual < kIsoTol, s + "/" + a + " iso " + fmt(C.residual));
            if (C.iso_found) {
                Report iso = check_isomorphism(F.Z, T.alg, C.psi, kIsoTol);
                o.require(iso.ok(), s + "/" + a + " iso recheck");
            }
            worst = std::max(worst, C.residual);
        }
        o.detail << " max iso residual " << fmt(worst);
    });

    criterion(8, "induced algebra is G-commutative with dim |G/H| dim A", 10.0, [](Outcome& o) {
        Spec S = spec("ising_z2crossed");
        Frobenius base = unit_algebra(S);
        const std::vector<int> H{S.group.identity};
        Frobenius ind = induce_algebra(base, H);
        Report r = check_g_commutative(ind, kTol);
        o.require(r.ok(), "G-commutativity " + fmt(r.max_residual()));
        const cplx expect = static_cast<double>(S.group.order() / static_cast<int>(H.size())) * base.dim();
        o.require(ind.dim() == expect, "dim");
        o.require(ind.dim() == cplx(2.0), "dim is 2");
        o.detail << " residual " << fmt(r.max_residual()) << ", dim " << ind.dim().real();
    });

    criterion(9, "Longo-Rehren Theta has dimension dim C", 30.0, [](Outcome& o) {
        double worst = 0.0;
        for (const auto& name : bundled_specs()) {
            Spec S = spec(name);
            NeutralDouble nd = neutral_double(S);
            ModularityReport r = modularity_report(longo_rehren(nd), S);
            worst = std::max(worst, std::abs(r.dim_theta - r.global_dim));
        }
        o.require(worst < kTol, "dim difference " + fmt(worst));
        o.detail << " max |dim Theta_LR - dim C| = " << fmt(worst);
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
