#include "gcross/suite.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <thread>

#include "gcross/lemmas.hpp"

namespace gcross {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> stems(const std::string& dir, bool algebras) {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() != ".json") continue;
        std::string s = e.path().stem().string();
        if ((s.rfind("algebra_", 0) == 0) == algebras) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool acceptable(const Frobenius& A, double tol) {
    Report f = check_frobenius(A, tol);
    for (const auto& c : f.checks)
        if (!c.pass && c.name != "simple") return false;
    return check_equivariant(A, tol).ok();
}

Report spec_suite(const std::string& name, const SuiteOptions& opt) {
    Report rep;
    Spec S;
    try {
        S = load_spec(opt.data_dir + "/" + name + ".json");
    } catch (const std::exception& e) {
        rep.flag("load", false, e.what());
        return rep;
    }
    Report v = validate_spec(S);
    rep.merge(v, "validate/");
    if (!v.ok()) return rep;

    NeutralDouble nd = neutral_double(S);
    auto algs = usable_algebras(*nd.C, opt.data_dir, opt.tol);
    std::vector<const Frobenius*> neutral;
    for (const auto& [an, A] : algs)
        if (A.neutral()) neutral.push_back(&A);

    LemmaOptions lo;
    lo.instances = opt.instances;
    lo.seed = opt.seed;
    lo.tol = opt.lemma_tol;
    rep.merge(lemma_suite(*nd.C, neutral, lo), "lemmas/");

    rep.add("z_unit_is_identity", [&] {
        auto Z = z_matrix(unit_algebra(*nd.C), opt.tol);
        double bad = 0;
        for (int a = 0; a < S.rank(); ++a)
            for (int b = 0; b < S.rank(); ++b) bad += std::abs(Z[a][b] - (a == b ? 1 : 0));
        return bad;
    }(), 0.5);

    Theta lr = longo_rehren(nd, opt.tol);
    rep.merge(lr.checks, "theta_lr/");
    rep.add("theta_lr/dim_is_global_dim", std::abs(lr.dim_theta - S.global_dim()), opt.tol);

    for (const auto& [an, A] : algs) {
        const std::string p = an + "/";
        Morphism P = idempotent_P(A);
        rep.add(p + "P_idempotent", dist(compose(P, P), P), opt.tol);
        if (check_g_commutative(A, opt.tol).ok()) rep.add(p + "P_is_identity", dist(P, identity(*nd.C, A.A)), opt.tol);
        if (!A.neutral()) continue;
        if (!check_frobenius(A, opt.tol).ok()) {
            // not simple without its G-action (induced algebras): no Theta, but still G-commutative
            rep.merge(check_g_commutative(A, opt.tol), p);
            continue;
        }
        double pt = 0.0;
        for (int l = 0; l < S.rank(); ++l) {
            Morphism Q = idempotent_Ptilde(A, Obj::simple(l));
            pt = std::max(pt, dist(compose(Q, Q), Q));
        }
        rep.add(p + "Ptilde_idempotent", pt, opt.tol);

        Theta T = build_theta(A, nd, ThetaOptions{false, false, opt.seed, opt.tol});
        rep.merge(T.checks, p + "theta/");
        rep.merge(check_theta(T, opt.tol), p + "theta/");
        Theta Tg = build_theta(A, nd, ThetaOptions{true, false, opt.seed + 1, opt.tol});
        double gauge = std::max(dist(T.alg.m, Tg.alg.m), dist(T.alg.delta, Tg.alg.delta));
        for (const auto& [g, z] : T.alg.z) gauge = std::max(gauge, dist(z, Tg.alg.z.at(g)));
        rep.add(p + "theta/gauge_independent", gauge, 1e-8);

        FullCenter F = full_center(A, nd, lr, opt.tol);
        rep.merge(F.checks, p + "center/");
        rep.add(p + "center/P_two_ways", dist(idempotent_P(F.prod), F.P), opt.tol);
        rep.merge(check_g_commutative(F.Z, opt.tol), p + "center/");
        rep.merge(check_g_cocommutative(F.Z, opt.tol), p + "center/");
        Comparison C = compare_center_theta(F.Z, T.alg, opt.seed, 1e-8);
        rep.merge(C.checks, p + "compare/");

        ModularityReport mr = modularity_report(T, S, opt.tol);
        rep.merge(mr.checks, p + "modularity/");
    }
    return rep;
}

}  // namespace

std::vector<std::string> bundled_specs(const std::string& data_dir) { return stems(data_dir, false); }
std::vector<std::string> bundled_algebras(const std::string& data_dir) { return stems(data_dir, true); }

std::vector<std::pair<std::string, Frobenius>> usable_algebras(const Spec& S, const std::string& data_dir, double tol) {
    std::vector<std::pair<std::string, Frobenius>> out;
    out.emplace_back("unit", unit_algebra(S));
    for (const auto& a : bundled_algebras(data_dir)) {
        try {
            Frobenius A = load_algebra(S, data_dir + "/" + a + ".json");
            if (A.A == out[0].second.A) continue;  // another presentation of the unit
            if (acceptable(A, tol)) out.emplace_back(a.substr(8), std::move(A));
        } catch (const std::exception&) {
        }
    }
    return out;
}

Report property_suite(const SuiteOptions& opt) {
    const auto names = bundled_specs(opt.data_dir);
    std::vector<Report> parts(names.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < names.size();) {
            try {
                parts[k] = spec_suite(names[k], opt);
            } catch (const std::exception& e) {
                parts[k].flag("completed", false, e.what());
            }
        }
    };
    const int nthreads = std::max(1, std::min<int>(opt.jobs, static_cast<int>(names.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Report rep;
    for (size_t k = 0; k < names.size(); ++k) rep.merge(parts[k], names[k] + "/");
    return rep;
}

}  // namespace gcross
