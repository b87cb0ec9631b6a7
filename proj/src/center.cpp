#include "gcross/center.hpp"

#include <random>

namespace gcross {

Theta longo_rehren(const NeutralDouble& nd, double tol) {
    ThetaOptions opt;
    opt.tol = tol;
    Frobenius one = unit_algebra(*nd.C);
    Theta T = build_theta(one, nd, opt);
    T.alg.name = "Theta_LR";
    return T;
}

Frobenius box_left_algebra(const Frobenius& A, const NeutralDouble& nd) {
    if (!A.neutral()) throw std::invalid_argument("box_left_algebra: algebra must be neutral");
    Frobenius B;
    B.cat = nd.D.get();
    B.name = A.name + "(x)1";
    B.A = nd.box_left(A.A);
    B.m = nd.box_left(A.m);
    B.eta = nd.box_left(A.eta);
    B.delta = nd.box_left(A.delta);
    B.eps = nd.box_left(A.eps);
    for (const auto& [g, z] : A.z) B.z.emplace(g, nd.box_left(z));
    return B;
}

FullCenter full_center(const Frobenius& A, const NeutralDouble& nd, const Theta& lr, double tol) {
    FullCenter F;
    Frobenius A1 = box_left_algebra(A, nd);
    F.prod = product_algebra(A1, lr.alg);
    F.P = idempotent_P(A1, lr.alg.A, lr.alg.z);
    F.checks.add("P_idempotent", dist(compose(F.P, F.P), F.P), tol);
    F.R = split(F.P, tol);
    F.checks.add("retract", dist(compose(F.R.r, F.R.s), identity(*nd.D, F.R.B)), tol);
    F.checks.add("retract_image", dist(compose(F.R.s, F.R.r), F.P), tol);
    F.Z = subalgebra(F.prod, F.R, A.dim());
    F.Z.name = "Z(" + A.name + ")";
    return F;
}

std::map<int, int> multiplicities(const Obj& X) {
    std::map<int, int> m;
    for (const auto& w : X.s) {
        if (w.size() != 1) throw std::invalid_argument("multiplicities: object is not a sum of simples");
        ++m[w[0]];
    }
    return m;
}

namespace {

// Residual vector of the isomorphism equations for psi: Z -> T.
struct IsoSystem {
    const Frobenius& Z;
    const Frobenius& T;
    // unknown k: (tgt summand, src summand) of psi
    std::vector<std::pair<int, int>> slots;

    Morphism build(const Eigen::VectorXcd& x) const {
        Morphism psi(*Z.cat, Z.A, T.A);
        for (size_t k = 0; k < slots.size(); ++k)
            psi.set_block(slots[k].first, slots[k].second, Mat::Constant(1, 1, x(static_cast<long>(k))));
        return psi;
    }

    // Equations are polynomial (degree <= 2) in psi; returns residual and complex Jacobian.
    Eigen::VectorXcd residual(const Eigen::VectorXcd& x, Mat* J, bool linear_only = false) const {
        Morphism psi = build(x);
        std::vector<Mat> parts;
        std::vector<std::vector<Mat>> dparts(slots.size());
        auto push = [&](const Morphism& r, const std::function<Morphism(const Morphism&)>& d, bool linear) {
            if (linear_only && !linear) return;
            parts.push_back(r.M);
            if (J)
                for (size_t k = 0; k < slots.size(); ++k) {
                    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(static_cast<long>(slots.size()));
                    e(static_cast<long>(k)) = 1.0;
                    dparts[k].push_back(d(build(e)).M);
                }
        };
        push(compose(psi, Z.m) - compose(T.m, tensor(psi, psi)),
             [&](const Morphism& e) { return compose(e, Z.m) - compose(T.m, tensor(e, psi) + tensor(psi, e)); }, false);
        push(compose(psi, Z.eta) - T.eta, [&](const Morphism& e) { return compose(e, Z.eta); }, true);
        push(compose(tensor(psi, psi), Z.delta) - compose(T.delta, psi),
             [&](const Morphism& e) { return compose(tensor(e, psi) + tensor(psi, e), Z.delta) - compose(T.delta, e); }, false);
        push(compose(T.eps, psi) - Z.eps, [&](const Morphism& e) { return compose(T.eps, e); }, true);
        for (const auto& [g, zg] : Z.z) {
            auto it = T.z.find(g);
            if (it == T.z.end()) continue;
            const Morphism& tz = it->second;
            push(compose(psi, zg) - compose(tz, act(g, psi)),
                 [&, g = g](const Morphism& e) { return compose(e, zg) - compose(tz, act(g, e)); }, true);
        }
        long n = 0;
        for (const auto& p : parts) n += p.size();
        Eigen::VectorXcd r(n);
        long o = 0;
        for (const auto& p : parts) {
            r.segment(o, p.size()) = Eigen::Map<const Eigen::VectorXcd>(p.data(), p.size());
            o += p.size();
        }
        if (J) {
            J->resize(n, static_cast<long>(slots.size()));
            for (size_t k = 0; k < slots.size(); ++k) {
                long q = 0;
                for (const auto& p : dparts[k]) {
                    J->col(static_cast<long>(k)).segment(q, p.size()) = Eigen::Map<const Eigen::VectorXcd>(p.data(), p.size());
                    q += p.size();
                }
            }
        }
        return r;
    }
};

double maxabs(const Eigen::VectorXcd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

Comparison compare_center_theta(const Frobenius& Z, const Frobenius& Th, std::uint64_t seed, double tol, int max_restarts) {
    Comparison C;
    auto mz = multiplicities(Z.A), mt = multiplicities(Th.A);
    C.multiplicities_equal = mz == mt;
    C.checks.flag("multiplicities_equal", C.multiplicities_equal);
    if (!C.multiplicities_equal || Z.cat != Th.cat) {
        C.checks.flag("iso_found", false, "objects differ");
        return C;
    }
    IsoSystem sys{Z, Th, {}};
    for (size_t j = 0; j < Th.A.size(); ++j)
        for (size_t i = 0; i < Z.A.size(); ++i)
            if (Th.A.s[j] == Z.A.s[i]) sys.slots.push_back({static_cast<int>(j), static_cast<int>(i)});
    const long n = static_cast<long>(sys.slots.size());
    // linear equations (unit, counit, equivariance) first: psi = x0 + N y
    Mat L;
    Eigen::VectorXcd b = -sys.residual(Eigen::VectorXcd::Zero(n), &L, true);
    Eigen::VectorXcd x0 = L.rows() ? Eigen::VectorXcd(L.completeOrthogonalDecomposition().solve(b)) : Eigen::VectorXcd::Zero(n);
    const double affine_res = L.rows() ? maxabs(L * x0 - b) : 0.0;
    Mat Nsp;
    {
        Eigen::JacobiSVD<Mat> svd(L.rows() ? L : Mat::Zero(1, n), Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        long r = 0;
        while (r < sv.size() && sv(r) > 1e-10 * std::max(1.0, sv(0))) ++r;
        Nsp = svd.matrixV().rightCols(n - r);
    }
    C.checks.add("affine_solve", affine_res, tol);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    double best = INFINITY;
    Eigen::VectorXcd bestx;
    const long m = Nsp.cols();
    for (int attempt = 0; attempt < max_restarts && best >= tol && affine_res < tol; ++attempt) {
        ++C.attempts;
        Eigen::VectorXcd y(m);
        for (long k = 0; k < m; ++k) y(k) = cplx(nd(rng), nd(rng));
        Eigen::VectorXcd x = x0 + Nsp * y;
        double lambda = 1e-3;
        Mat Jx;
        Eigen::VectorXcd r = sys.residual(x, &Jx);
        Mat J = Jx * Nsp;
        double cur = r.norm();
        for (int it = 0; it < 200 && m > 0 && maxabs(r) > 1e-14; ++it) {
            Mat JhJ = J.adjoint() * J;
            Eigen::VectorXcd g = J.adjoint() * r;
            bool improved = false;
            for (int tries = 0; tries < 20; ++tries) {
                Mat A = JhJ + lambda * Mat::Identity(m, m) * std::max(1.0, JhJ.diagonal().real().maxCoeff());
                Eigen::VectorXcd yn = y + A.ldlt().solve(-g);
                Eigen::VectorXcd xn = x0 + Nsp * yn;
                Mat Jn;
                Eigen::VectorXcd rn = sys.residual(xn, &Jn);
                if (rn.norm() < cur) {
                    y = yn;
                    x = xn;
                    r = rn;
                    J = Jn * Nsp;
                    cur = rn.norm();
                    lambda = std::max(lambda / 10.0, 1e-15);
                    improved = true;
                    break;
                }
                lambda *= 10.0;
            }
            if (!improved) break;
        }
        double res = maxabs(r);
        if (res < best) {
            best = res;
            bestx = x;
        }
    }
    C.residual = best;
    C.iso_found = best < tol;
    if (bestx.size()) {
        C.psi = sys.build(bestx);
        Eigen::JacobiSVD<Mat> svd(C.psi.M);
        const auto& sv = svd.singularValues();
        const bool invertible = sv.size() && sv(sv.size() - 1) > 1e-8 * sv(0);
        C.iso_found = C.iso_found && invertible;
        C.checks.flag("psi_invertible", invertible);
    }
    C.checks.add("iso_found", best, tol, std::to_string(C.attempts) + " attempt(s)");
    return C;
}

ModularCheck modular_invariance(const Spec& C, const std::vector<std::vector<int>>& Z) {
    ModularCheck mc;
    mc.md = modular_data(C);
    const int n = C.rank();
    Mat Zm(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) Zm(a, b) = Z[a][b];
    mc.zs = (Zm * mc.md.S - mc.md.S * Zm).cwiseAbs().maxCoeff();
    mc.zt = (Zm * mc.md.T - mc.md.T * Zm).cwiseAbs().maxCoeff();
    return mc;
}

ModularityReport modularity_report(const Theta& T, const Spec& C, double tol) {
    ModularityReport r;
    r.dim_theta = T.dim_theta;
    r.global_dim = C.global_dim();
    double neutral = 0.0;
    for (const auto& l : C.labels)
        if (l.grade == C.group.identity) neutral += l.qdim * l.qdim;
    r.g_times_neutral_dim = C.group.order() * neutral;
    r.maximal = std::abs(r.dim_theta - r.global_dim) < tol * std::max(1.0, r.global_dim);
    if (C.group.order() == 1) {
        ModularCheck mc = modular_invariance(C, T.Z);
        r.has_st = true;
        r.modular = mc.md.modular;
        r.zs = mc.zs;
        r.zt = mc.zt;
        r.checks.add("zs_commutes", mc.zs, tol);
        r.checks.add("zt_commutes", mc.zt, tol);
    }
    return r;
}

}  // namespace gcross
