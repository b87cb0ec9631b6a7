// gcross: validate categories, build Theta / full centers and run the property battery.
// Exit codes: 0 all checks pass, 1 a check or validation failed, 2 usage error.

#include <chrono>
#include <filesystem>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcross/suite.hpp"

using namespace gcross;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string command, spec_path, algebra_path = "unit";
    double tol = 1e-9;
    bool tol_set = false;
    std::string format = "text";
    std::uint64_t seed = 1;
    int jobs = 1;
    bool timings = false;
    int instances = 100;
};

struct Output {
    std::string command, spec, algebra;
    Report checks;
    json outputs = json::object();
    std::vector<std::pair<std::string, double>> timings;
};

class Stopwatch {
public:
    Stopwatch(Output& o, std::string name) : out_(o), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        out_.timings.emplace_back(name_, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count());
    }

private:
    Output& out_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

// A path, or the stem of a bundled file ("ising_trivialG", "algebra_1psi", "1psi").
std::string resolve(const std::string& arg, bool algebra) {
    if (fs::exists(arg)) return arg;
    for (const std::string& cand : {arg + ".json", std::string("algebra_") + arg + ".json"}) {
        if (!algebra && cand.rfind("algebra_", 0) == 0 && arg.rfind("algebra_", 0) != 0) continue;
        fs::path p = fs::path(GCROSS_DATA_DIR) / cand;
        if (fs::exists(p)) return p.string();
    }
    throw UsageError("no such file: " + arg);
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

json labels_json(const Spec& S, const std::vector<int>& xs) {
    json a = json::array();
    for (int x : xs) a.push_back(S.labels[x].name);
    return a;
}

json zmatrix_json(const Spec& S, const std::vector<std::vector<int>>& Z) {
    std::vector<int> all(S.rank());
    for (int k = 0; k < S.rank(); ++k) all[k] = k;
    json blocks = json::array();
    for (int g = 0; g < S.group.order(); ++g) {
        std::vector<int> xs;
        for (int k = 0; k < S.rank(); ++k)
            if (S.grade(k) == g) xs.push_back(k);
        if (!xs.empty()) blocks.push_back({{"grade", S.group.elements[g]}, {"labels", labels_json(S, xs)}});
    }
    return {{"rows", labels_json(S, all)}, {"cols", labels_json(S, all)}, {"entries", Z}, {"grade_blocks", blocks}};
}

json cplx_json(cplx z) {
    if (std::abs(z.imag()) < 1e-12) return z.real();
    return json::array({z.real(), z.imag()});
}

json carrier_json(const NeutralDouble& nd, const Obj& X) {
    json a = json::array();
    for (const auto& [lab, mult] : multiplicities(X)) {
        const auto& pr = nd.D->pair_of.at(lab);
        a.push_back({{"left", nd.C->labels[pr.first].name}, {"right", nd.rev->labels[pr.second].name}, {"mult", mult}});
    }
    return a;
}

json comparison_json(const Comparison& C) {
    return {{"multiplicities_equal", C.multiplicities_equal},
            {"iso_found", C.iso_found},
            {"iso_residual", std::isfinite(C.residual) ? json(C.residual) : json(nullptr)},
            {"attempts", C.attempts}};
}

// --------------------------------------------------------------------------- commands

struct Loaded {
    Spec S;
    std::unique_ptr<NeutralDouble> nd;
    Frobenius A;
};

// Loads and validates the category; false if validation failed (report already filled).
bool load_validated(const Config& cfg, Output& out, Spec& S) {
    try {
        S = load_spec(cfg.spec_path);
    } catch (const SpecError& e) {
        out.checks.flag("load_spec", false, e.what());
        return false;
    }
    Stopwatch sw(out, "validate");
    Report v = validate_spec(S);
    out.checks.merge(v, "validate/");
    return v.ok();
}

void load_algebra_into(const Config& cfg, Output& out, Loaded& L) {
    L.nd = std::make_unique<NeutralDouble>(neutral_double(L.S));
    L.A = stem(cfg.algebra_path) == "unit" ? unit_algebra(*L.nd->C) : load_algebra(*L.nd->C, cfg.algebra_path);
    Report f = check_frobenius(L.A, cfg.tol);
    out.checks.merge(f, "algebra/");
    out.checks.merge(check_equivariant(L.A, cfg.tol), "algebra/");
    if (!L.A.neutral()) out.checks.flag("algebra/neutral", false, "alpha-induction needs a neutral algebra");
}

void cmd_validate(const Config&, Output& out, Loaded& L) {
    const Spec& S = L.S;
    std::vector<int> all(S.rank());
    for (int k = 0; k < S.rank(); ++k) all[k] = k;
    out.outputs = {{"rank", S.rank()},
                   {"group_order", S.group.order()},
                   {"labels", labels_json(S, all)},
                   {"global_dim", S.global_dim()},
                   {"unitary", S.unitary},
                   {"braided", S.braided}};
}

void cmd_zmatrix(const Config& cfg, Output& out, Loaded& L) {
    load_algebra_into(cfg, out, L);
    Stopwatch sw(out, "zmatrix");
    auto Z = z_matrix(L.A, cfg.tol);
    out.checks.flag("unit_entry_is_one", Z[L.S.unit][L.S.unit] == 1, "Z(1,1) = " + std::to_string(Z[L.S.unit][L.S.unit]));
    out.outputs = zmatrix_json(*L.nd->C, Z);
}

void cmd_theta(const Config& cfg, Output& out, Loaded& L) {
    load_algebra_into(cfg, out, L);
    Theta T;
    {
        Stopwatch sw(out, "build_theta");
        T = build_theta(L.A, *L.nd, ThetaOptions{false, false, cfg.seed, cfg.tol});
    }
    out.checks.merge(T.checks, "theta/");
    out.checks.merge(check_theta(T, cfg.tol), "theta/");
    {
        Stopwatch sw(out, "gauge");
        Theta Tg = build_theta(L.A, *L.nd, ThetaOptions{true, false, cfg.seed + 1, cfg.tol});
        double r = std::max(dist(T.alg.m, Tg.alg.m), dist(T.alg.delta, Tg.alg.delta));
        for (const auto& [g, z] : T.alg.z) r = std::max(r, dist(z, Tg.alg.z.at(g)));
        out.checks.add("theta/gauge_independent", r, std::max(cfg.tol, 1e-8));
    }
    out.outputs = {{"dim_theta", cplx_json(T.dim_theta)}, {"carrier", carrier_json(*L.nd, T.alg.A)}, {"zmatrix", zmatrix_json(*L.nd->C, T.Z)}};
}

struct CenterRun {
    FullCenter F;
    Theta lr;
};

CenterRun run_center(const Config& cfg, const Loaded& L) {
    CenterRun r;
    r.lr = longo_rehren(*L.nd, cfg.tol);
    r.F = full_center(L.A, *L.nd, r.lr, cfg.tol);
    return r;
}

// Full center and Theta, concurrently when jobs > 1.
std::pair<CenterRun, Theta> center_and_theta(const Config& cfg, Output& out, const Loaded& L) {
    Stopwatch sw(out, "constructions");
    auto theta = [&] { return build_theta(L.A, *L.nd, ThetaOptions{false, false, cfg.seed, cfg.tol}); };
    if (cfg.jobs > 1) {
        auto fut = std::async(std::launch::async, theta);
        CenterRun c = run_center(cfg, L);
        return {std::move(c), fut.get()};
    }
    CenterRun c = run_center(cfg, L);
    return {std::move(c), theta()};
}

void cmd_center(const Config& cfg, Output& out, Loaded& L) {
    load_algebra_into(cfg, out, L);
    auto [c, T] = center_and_theta(cfg, out, L);
    out.checks.merge(c.F.checks, "center/");
    out.checks.add("center/P_two_ways", dist(idempotent_P(c.F.prod), c.F.P), cfg.tol);
    out.checks.merge(check_frobenius(c.F.Z, cfg.tol), "center/");
    out.checks.merge(check_equivariant(c.F.Z, cfg.tol), "center/");
    out.checks.merge(check_g_commutative(c.F.Z, cfg.tol), "center/");
    out.checks.merge(check_g_cocommutative(c.F.Z, cfg.tol), "center/");
    Comparison C;
    {
        Stopwatch sw(out, "compare");
        C = compare_center_theta(c.F.Z, T.alg, cfg.seed, std::max(cfg.tol, 1e-8));
    }
    out.checks.merge(C.checks, "compare/");
    out.outputs = {{"center_carrier", carrier_json(*L.nd, c.F.Z.A)}, {"zeta", cplx_json(L.A.dim())}, {"comparison", comparison_json(C)}};
}

void cmd_compare(const Config& cfg, Output& out, Loaded& L) {
    load_algebra_into(cfg, out, L);
    auto [c, T] = center_and_theta(cfg, out, L);
    out.checks.merge(T.checks, "theta/");
    out.checks.merge(c.F.checks, "center/");
    Comparison C;
    {
        Stopwatch sw(out, "compare");
        C = compare_center_theta(c.F.Z, T.alg, cfg.seed, std::max(cfg.tol, 1e-8));
    }
    out.checks.merge(C.checks, "compare/");
    if (C.iso_found) out.checks.merge(check_isomorphism(c.F.Z, T.alg, C.psi, std::max(cfg.tol, 1e-8)), "compare/");
    out.outputs = comparison_json(C);
}

void cmd_modularity(const Config& cfg, Output& out, Loaded& L) {
    load_algebra_into(cfg, out, L);
    Theta T;
    {
        Stopwatch sw(out, "build_theta");
        T = build_theta(L.A, *L.nd, ThetaOptions{false, false, cfg.seed, cfg.tol});
    }
    out.checks.merge(T.checks, "theta/");
    ModularityReport r = modularity_report(T, L.S, cfg.tol);
    out.checks.merge(r.checks, "modularity/");
    if (stem(cfg.algebra_path) == "unit")  // Longo-Rehren: always of maximal dimension
        out.checks.add("modularity/lr_dim_is_global_dim", std::abs(r.dim_theta - r.global_dim), cfg.tol);
    out.outputs = {{"dim_theta", cplx_json(r.dim_theta)},
                   {"global_dim", r.global_dim},
                   {"group_times_neutral_dim", r.g_times_neutral_dim},
                   {"maximal", r.maximal},
                   {"st_available", r.has_st}};
    if (r.has_st) {
        out.outputs["modular"] = r.modular;
        out.outputs["zs_residual"] = r.zs;
        out.outputs["zt_residual"] = r.zt;
    }
}

// --------------------------------------------------------------------------- output

json to_json(const Output& o, bool timings) {
    json checks = json::array();
    for (const auto& c : o.checks.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual", std::isfinite(c.residual) ? json(c.residual) : json(nullptr)}});
    json t = json::object();
    if (timings)
        for (const auto& [k, v] : o.timings) t[k] = v;
    json j = {{"command", o.command}, {"spec", o.spec}, {"checks", checks}, {"outputs", o.outputs}, {"timings", t}};
    if (!o.algebra.empty()) j["algebra"] = o.algebra;
    return j;
}

std::string to_text(const Output& o) {
    std::ostringstream s;
    s << o.command << "  " << o.spec;
    if (!o.algebra.empty()) s << "  algebra=" << o.algebra;
    s << "\n" << o.checks.to_text();
    if (!o.outputs.empty()) s << "outputs:\n" << o.outputs.dump(2) << "\n";
    s << "timings:";
    for (const auto& [k, v] : o.timings) s << "  " << k << "=" << std::fixed << std::setprecision(3) << v << "s";
    s << "\n" << (o.checks.ok() ? "PASS" : "FAIL") << "\n";
    return s.str();
}

int run(Config cfg) {
    Output out;
    out.command = cfg.command;
    if (cfg.command == "propsuite") {
        out.spec = "bundled";
        SuiteOptions so;
        so.seed = cfg.seed;
        so.jobs = cfg.jobs;
        so.instances = cfg.instances;
        if (cfg.tol_set) so.tol = so.lemma_tol = cfg.tol;
        {
            Stopwatch sw(out, "propsuite");
            out.checks = property_suite(so);
        }
        out.outputs = {{"checks", out.checks.checks.size()}, {"max_residual", out.checks.max_residual()}};
    } else {
        cfg.spec_path = resolve(cfg.spec_path, false);
        out.spec = stem(cfg.spec_path);
        if (cfg.command != "validate") {
            if (cfg.algebra_path != "unit") cfg.algebra_path = resolve(cfg.algebra_path, true);
            out.algebra = stem(cfg.algebra_path);
        }
        Loaded L;
        if (load_validated(cfg, out, L.S)) {
            if (cfg.command == "validate") cmd_validate(cfg, out, L);
            if (cfg.command == "zmatrix") cmd_zmatrix(cfg, out, L);
            if (cfg.command == "theta") cmd_theta(cfg, out, L);
            if (cfg.command == "center") cmd_center(cfg, out, L);
            if (cfg.command == "compare") cmd_compare(cfg, out, L);
            if (cfg.command == "modularity") cmd_modularity(cfg, out, L);
        }
    }
    if (cfg.format == "json")
        std::cout << to_json(out, cfg.timings).dump(2) << "\n";
    else
        std::cout << to_text(out);
    return out.checks.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"G-crossed alpha-induction toolkit"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Config cfg;
    app.add_option("--tol", cfg.tol, "numerical tolerance")->check(CLI::PositiveNumber)->each([&](const std::string&) { cfg.tol_set = true; });
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--timings", cfg.timings, "include wall-clock timings in JSON (makes it non-reproducible)");

    auto with_spec = [&](const char* name, const char* help, bool algebra) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("spec", cfg.spec_path, "category JSON (path or bundled name)")->required();
        if (algebra) sub->add_option("algebra", cfg.algebra_path, "algebra JSON (path or bundled name; default unit)");
        return sub;
    };
    with_spec("validate", "validate a category", false);
    with_spec("zmatrix", "Z matrix of an algebra", true);
    with_spec("theta", "build Theta and check it", true);
    with_spec("center", "full center and its comparison with Theta", true);
    with_spec("compare", "isomorphism search between full center and Theta", true);
    with_spec("modularity", "dimension and S/T commutation report", true);
    app.add_subcommand("propsuite", "full property battery over the bundled data")
        ->add_option("--instances", cfg.instances, "random instances per identity")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
