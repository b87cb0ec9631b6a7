#include "gcross/alpha.hpp"

#include <cmath>
#include <random>

namespace gcross {

namespace {

Eigen::VectorXcd vec(const Morphism& f) { return Eigen::Map<const Eigen::VectorXcd>(f.M.data(), f.M.size()); }

Morphism from_vec(const Morphism& shape, const Eigen::VectorXcd& v) {
    Morphism r(*shape.cat, shape.src, shape.tgt);
    r.M = Eigen::Map<const Mat>(v.data(), shape.M.rows(), shape.M.cols());
    return r;
}

// Orthonormal basis of the column span, threshold relative to the largest singular value.
Mat column_span(const Mat& K, double tol) {
    if (K.cols() == 0 || K.rows() == 0) return Mat(K.rows(), 0);
    Eigen::JacobiSVD<Mat> svd(K, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    long r = 0;
    if (sv(0) > tol)
        while (r < sv.size() && sv(r) > tol * std::max(1.0, sv(0))) ++r;
    return svd.matrixU().leftCols(r);
}

Mat nullspace(const Mat& K, double tol) {
    const long n = K.cols();
    if (K.rows() == 0) return Mat::Identity(n, n);
    Eigen::JacobiSVD<Mat> svd(K, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = std::max(1.0, sv.size() ? sv(0) : 0.0);
    long r = 0;
    while (r < sv.size() && sv(r) > tol * scale) ++r;
    return svd.matrixV().rightCols(n - r);
}

Mat random_complex(std::mt19937_64& rng, long n) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat g(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g(i, j) = cplx(nd(rng), nd(rng));
    return g + Mat::Identity(n, n) * 2.0;  // keep the draw away from singular
}

}  // namespace

Bimodule alpha_bimodule(const Frobenius& A, const Obj& lam, int sign) {
    if (!A.neutral()) throw std::invalid_argument("alpha_bimodule: algebra must be neutral");
    const Spec& S = *A.cat;
    Bimodule B;
    B.A = &A;
    B.X = otimes(A.A, lam);
    Morphism iA = identity(S, A.A), iL = identity(S, lam);
    B.left = tensor(A.m, iL);
    Morphism cross;
    if (sign > 0) {
        cross = Morphism(S, otimes(lam, A.A), otimes(A.A, lam));
        for (int g = 0; g < S.group.order(); ++g) cross += compose(tensor(A.zg(g), iL), dashed(S, lam, A.A, g));
    } else {
        cross = braid_inv(S, A.A, lam);
    }
    B.right = compose(tensor(A.m, iL), tensor(iA, cross));
    return B;
}

Report check_bimodule(const Bimodule& M, double tol) {
    const Frobenius& A = *M.A;
    const Spec& S = *A.cat;
    Morphism iA = identity(S, A.A), iX = identity(S, M.X);
    Report rep;
    rep.add("left_assoc", dist(compose(M.left, tensor(A.m, iX)), compose(M.left, tensor(iA, M.left))), tol);
    rep.add("right_assoc", dist(compose(M.right, tensor(iX, A.m)), compose(M.right, tensor(M.right, iA))), tol);
    rep.add("bimodule", dist(compose(M.right, tensor(M.left, iA)), compose(M.left, tensor(iA, M.right))), tol);
    rep.add("unital", std::max(dist(compose(M.left, tensor(A.eta, iX)), iX), dist(compose(M.right, tensor(iX, A.eta)), iX)),
            tol);
    return rep;
}

TensorSplit alpha_tensor_split(const Frobenius& A, const Obj& lam, const Obj& mu, int sign) {
    const Spec& S = *A.cat;
    Bimodule X = alpha_bimodule(A, lam, sign);
    Morphism iM = identity(S, mu), iAM = identity(S, otimes(A.A, mu)), iX = identity(S, X.X);
    TensorSplit t;
    t.r = tensor(X.right, iM);
    t.s = compose(tensor(X.right, iAM), tensor({iX, compose(A.delta, A.eta), iM}));
    return t;
}

cplx bimodule_trace(const Frobenius& A, const Morphism& f) { return trace(f) / A.dim(); }

std::vector<Morphism> bimodule_homs(const Bimodule& X, const Bimodule& Y, double tol) {
    const Frobenius& A = *X.A;
    const Spec& S = *A.cat;
    auto basis = hom_basis(S, X.X, Y.X);
    if (basis.empty()) return {};
    Morphism iA = identity(S, A.A);
    std::vector<Eigen::VectorXcd> cols;
    long rows = 0;
    for (const auto& f : basis) {
        Morphism l = compose(f, X.left) - compose(Y.left, tensor(iA, f));
        Morphism r = compose(f, X.right) - compose(Y.right, tensor(f, iA));
        Eigen::VectorXcd v(l.M.size() + r.M.size());
        v << vec(l), vec(r);
        rows = v.size();
        cols.push_back(v);
    }
    Mat K(rows, static_cast<long>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) K.col(static_cast<long>(k)) = cols[k];
    Mat ns = nullspace(K, tol);
    std::vector<Morphism> out;
    for (long c = 0; c < ns.cols(); ++c) {
        Morphism f(S, X.X, Y.X);
        for (size_t k = 0; k < basis.size(); ++k) f.M += ns(static_cast<long>(k), c) * basis[k].M;
        out.push_back(f);
    }
    return out;
}

std::vector<Morphism> local_homs(const Frobenius& A, int lam, int mu, double tol) {
    const Spec& S = *A.cat;
    if (S.grade(lam) != S.grade(mu)) return {};
    if (lam == S.unit && mu == S.unit) return {tensor(A.eta, identity(S, Obj::simple(S.unit)))};
    Obj L = Obj::simple(lam), AM = otimes(A.A, Obj::simple(mu));
    auto basis = hom_basis(S, L, AM);
    if (basis.empty()) return {};
    Morphism P = idempotent_Ptilde(A, Obj::simple(mu));
    Mat K(basis[0].M.size(), static_cast<long>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) K.col(static_cast<long>(k)) = vec(compose(P, basis[k]));
    Mat span = column_span(K, tol);
    std::vector<Morphism> out;
    for (long c = 0; c < span.cols(); ++c) out.push_back(from_vec(basis[0], span.col(c)));
    return out;
}

Morphism J_map(const Frobenius& A, const Morphism& f) {
    const Spec& S = *A.cat;
    if (f.tgt.size() == 0 || f.src.size() != 1) throw std::invalid_argument("J_map: f must be lam -> A mu");
    // f.tgt = A mu; recover mu from the last letters of the words
    const size_t na = A.A.s[0].size();
    if (f.tgt.s[0].size() < na) throw std::invalid_argument("J_map: target is not A mu");
    Obj mu = Obj::word(Word(f.tgt.s[0].begin() + static_cast<long>(na), f.tgt.s[0].end()));
    if (otimes(A.A, mu) != f.tgt) throw std::invalid_argument("J_map: target is not A mu for a simple mu");
    return compose(tensor(A.m, identity(S, mu)), tensor(identity(S, A.A), f));
}

std::vector<std::vector<int>> z_matrix(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    const int n = S.rank();
    std::vector<std::vector<int>> Z(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) Z[a][b] = static_cast<int>(local_homs(A, a, b, tol).size());
    return Z;
}

// ---------------------------------------------------------------- Theta

namespace {

struct PairData {
    std::vector<Morphism> phi, phit;  // phi: alpha+(lam1) -> alpha-(lam2); phit the dual basis
    std::vector<int> index;           // summand indices in Theta
};

}  // namespace

Theta build_theta(const Frobenius& A, const NeutralDouble& nd, const ThetaOptions& opt) {
    const Spec& C = *A.cat;
    if (&C != nd.C.get() && C.name != nd.C->name) throw std::invalid_argument("build_theta: double built from another category");
    const Spec& D = *nd.D;
    const Spec& Rv = *nd.rev;
    const int n = C.rank();
    const double tol = opt.tol;
    std::mt19937_64 rng(opt.seed);
    Theta T;
    T.Z.assign(n, std::vector<int>(n, 0));
    std::map<std::pair<int, int>, PairData> pd;
    std::vector<int> dlabels;
    double jres = 0.0, dres = 0.0;
    for (int l1 = 0; l1 < n; ++l1)
        for (int l2 = 0; l2 < n; ++l2) {
            auto loc = local_homs(A, l1, l2, tol);
            if (loc.empty()) continue;
            const int k = static_cast<int>(loc.size());
            T.Z[l1][l2] = k;
            Mat G = Mat::Identity(k, k);
            if (opt.randomize_local_basis && !(l1 == C.unit && l2 == C.unit)) G = random_complex(rng, k);
            T.gauge[{l1, l2}] = G;
            PairData P;
            Bimodule Xp = alpha_bimodule(A, Obj::simple(l1), +1), Ym = alpha_bimodule(A, Obj::simple(l2), -1);
            for (int c = 0; c < k; ++c) {
                Morphism f(C, loc[0].src, loc[0].tgt);
                for (int r = 0; r < k; ++r) f.M += G(r, c) * loc[r].M;
                Morphism phi = J_map(A, f);
                Morphism iA = identity(C, A.A);
                jres = std::max({jres, dist(compose(phi, Xp.left), compose(Ym.left, tensor(iA, phi))),
                                 dist(compose(phi, Xp.right), compose(Ym.right, tensor(phi, iA)))});
                P.phi.push_back(phi);
            }
            auto psi = bimodule_homs(Ym, Xp, 1e-9);
            if (static_cast<int>(psi.size()) != k) {
                T.checks.flag("dual_space_dimension", false,
                              C.labels[l1].name + "," + C.labels[l2].name + ": " + std::to_string(psi.size()) + " vs " + std::to_string(k));
                continue;
            }
            Mat Gr(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) Gr(a, b) = bimodule_trace(A, compose(psi[a], P.phi[b])) / C.qdim(l1);
            Mat Gi = Gr.inverse();
            for (int a = 0; a < k; ++a) {
                Morphism t(C, psi[0].src, psi[0].tgt);
                for (int b = 0; b < k; ++b) t.M += Gi(a, b) * psi[b].M;
                P.phit.push_back(t);
            }
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    cplx pr = bimodule_trace(A, compose(P.phit[a], P.phi[b])) / C.qdim(l1);
                    dres = std::max(dres, std::abs(pr - (a == b ? 1.0 : 0.0)));
                }
            for (int c = 0; c < k; ++c) {
                P.index.push_back(static_cast<int>(T.summands.size()));
                ThetaSummand s{l1, l2, c, nd.pair(l1, C.dual(l2))};
                T.summands.push_back(s);
                dlabels.push_back(s.dlabel);
            }
            pd.emplace(std::make_pair(l1, l2), std::move(P));
        }
    T.checks.add("J_bimodular", jres, tol);
    T.checks.add("dual_basis", dres, tol);

    Frobenius& Th = T.alg;
    Th.cat = &D;
    Th.name = "Theta(" + A.name + ")";
    Th.A = Obj::of_labels(dlabels);
    const int ns = static_cast<int>(T.summands.size());
    Obj TT = otimes(Th.A, Th.A);
    Th.m = Morphism(D, TT, Th.A);
    Th.delta = Morphism(D, Th.A, TT);
    Morphism iA = identity(C, A.A);
    // fusion bases e_i (splittings) and their duals, optionally re-gauged
    std::mt19937_64 grng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::map<std::array<int, 3>, std::pair<Mat, Mat>> vgauge;
    auto vertex = [&](int a, int b, int c, int i, bool split) {
        const int k = C.Nabc(a, b, c);
        auto it = vgauge.find({a, b, c});
        if (it == vgauge.end()) {
            Mat G = opt.regauge_vertices ? random_complex(grng, k) : Mat::Identity(k, k);
            it = vgauge.emplace(std::array<int, 3>{a, b, c}, std::make_pair(G, Mat(G.inverse()))).first;
        }
        const auto& [G, Gi] = it->second;
        Morphism r = split ? splitting(C, a, b, c, 0) * G(0, i) : fusion(C, a, b, c, 0) * Gi(i, 0);
        for (int q = 1; q < k; ++q) r += split ? splitting(C, a, b, c, q) * G(q, i) : fusion(C, a, b, c, q) * Gi(i, q);
        return r;
    };
    std::map<std::pair<int, int>, cplx> ugauge;  // (g, lam) -> u_g^lam as a scalar
    auto uscalar = [&](int g, int lam) {
        auto it = ugauge.find({g, lam});
        if (it != ugauge.end()) return it->second;
        cplx u = 1.0;
        if (opt.regauge_vertices) {
            std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI), md(0.5, 2.0);
            u = std::polar(md(grng), ph(grng));
        }
        ugauge[{g, lam}] = u;
        return u;
    };
    auto rev_morphism = [&](const Morphism& cm, const Word& src, const Word& tgt) {
        return Morphism(Rv, Obj::word(src), Obj::word(tgt), cm.M);
    };

    for (const auto& [pl, PL] : pd)
        for (const auto& [pm, PM] : pd) {
            const int l1 = pl.first, l2 = pl.second, m1 = pm.first, m2 = pm.second;
            Obj L1 = Obj::simple(l1), L2 = Obj::simple(l2), M1 = Obj::simple(m1), M2 = Obj::simple(m2);
            TensorSplit sp = alpha_tensor_split(A, L1, M1, +1);
            TensorSplit sm = alpha_tensor_split(A, L2, M2, -1);
            for (const auto& [pn, PN] : pd) {
                const int n1 = pn.first, n2 = pn.second;
                const int k1 = C.Nabc(l1, m1, n1), k2 = C.Nabc(l2, m2, n2);
                if (!k1 || !k2) continue;
                const Word w2 = {C.dual(l2), C.dual(m2)}, wn2 = {C.dual(n2)};
                for (int i = 0; i < k1; ++i)
                    for (int j = 0; j < k2; ++j) {
                        Morphism e1 = vertex(l1, m1, n1, i, true), et1 = vertex(l1, m1, n1, i, false);
                        Morphism e2 = vertex(l2, m2, n2, j, true), et2 = vertex(l2, m2, n2, j, false);
                        Morphism mbox = nd.box(et1, rev_morphism(conjugate(e2), w2, wn2));
                        Morphism dbox = nd.box(e1, rev_morphism(conjugate(et2), wn2, w2));
                        for (size_t a = 0; a < PL.phi.size(); ++a)
                            for (size_t b = 0; b < PM.phi.size(); ++b) {
                                Morphism mid = compose({sm.r, tensor(PL.phi[a], PM.phi[b]), sp.s});
                                Morphism lhs = compose({tensor(iA, et2), mid, tensor(iA, e1)});  // A n1 -> A n2
                                Morphism mid2 = compose({sp.r, tensor(PL.phit[a], PM.phit[b]), sm.s});
                                for (size_t c = 0; c < PN.phi.size(); ++c) {
                                    cplx cm = bimodule_trace(A, compose(PN.phit[c], lhs)) / C.qdim(n1);
                                    cplx cd = bimodule_trace(A, compose({tensor(iA, et1), mid2, tensor(iA, e2), PN.phi[c]})) *
                                              (C.qdim(l2) * C.qdim(m2) / (C.qdim(n2) * C.qdim(n1)));
                                    const int src = PL.index[a] * ns + PM.index[b], tgt = PN.index[c];
                                    if (std::abs(cm) > 0) Th.m.set_block(tgt, src, Th.m.block(tgt, src) + cm * mbox.M);
                                    if (std::abs(cd) > 0) Th.delta.set_block(src, tgt, Th.delta.block(src, tgt) + cd * dbox.M);
                                }
                            }
                    }
            }
        }

    // unit summand and counit
    T.dim_theta = 0.0;
    for (const auto& s : T.summands) T.dim_theta += C.qdim(s.lam1) * C.qdim(s.lam2);
    Th.eta = Morphism(D, Obj::unit(), Th.A);
    Th.eps = Morphism(D, Th.A, Obj::unit());
    auto unit_pair = pd.find({C.unit, C.unit});
    if (unit_pair == pd.end() || unit_pair->second.index.size() != 1)
        throw std::invalid_argument("build_theta: hom(alpha+(1), alpha-(1)) is not one-dimensional (A not simple?)");
    const int u = unit_pair->second.index[0];
    Th.eta.set_block(u, 0, Mat::Identity(1, 1));
    // with m Delta = dim Theta the counit law pins eps to the bare projection
    Th.eps.set_block(0, u, Mat::Identity(1, 1));

    // equivariant structure
    for (int g = 0; g < C.group.order(); ++g) {
        Morphism zg(D, act(D, g, Th.A), Th.A);
        const Morphism& zA = A.zg(g);
        Morphism zAi = inverse(zA);
        for (const auto& [pl, PL] : pd) {
            const int gl1 = C.act(g, pl.first), gl2 = C.act(g, pl.second);
            auto it = pd.find({gl1, gl2});
            if (it == pd.end()) continue;
            const PairData& PG = it->second;
            for (size_t a = 0; a < PL.phi.size(); ++a) {
                Morphism conj_phi = compose({tensor(zA, identity(C, Obj::simple(gl2))), act(g, PL.phi[a]),
                                             tensor(zAi, identity(C, Obj::simple(gl1)))});
                // alpha+(u~^{lam1}) and alpha-(u^{lam2}) inside the trace, u^{lam1} (x) conj(u~^{lam2}) outside
                const cplx u1 = uscalar(g, pl.first), u2 = uscalar(g, pl.second);
                Obj G1 = Obj::simple(gl1), G2 = Obj::simple(gl2);
                Morphism ap = tensor(iA, identity(C, G1) * (1.0 / u1)), am = tensor(iA, identity(C, G2) * u2);
                Morphism outer = nd.box(identity(C, G1) * u1,
                                        rev_morphism(conjugate(identity(C, G2) * (1.0 / u2)), {C.dual(gl2)}, {C.dual(gl2)}));
                for (size_t b = 0; b < PG.phit.size(); ++b) {
                    cplx c = bimodule_trace(A, compose({PG.phit[b], am, conj_phi, ap})) / C.qdim(gl1);
                    if (std::abs(c) > 0) zg.set_block(PG.index[b], PL.index[a], c * outer.M);
                }
            }
        }
        Th.z.emplace(g, std::move(zg));
    }
    T.checks.merge(check_theta(T, tol));
    return T;
}

Report check_theta(const Theta& T, double tol) {
    const Frobenius& Th = T.alg;
    const Spec& D = *Th.cat;
    Report rep;
    rep.merge(check_frobenius(Th, tol));
    rep.add("m_delta_is_dim", dist(compose(Th.m, Th.delta), identity(D, Th.A) * T.dim_theta), tol);
    rep.add("eps_eta_is_one", std::abs(compose(Th.eps, Th.eta).M(0, 0) - 1.0), tol);
    rep.merge(check_equivariant(Th, tol));
    rep.merge(check_g_commutative(Th, tol));
    return rep;
}

Morphism multiplicity_map(const Theta& T, const Theta& Tp, const std::map<std::pair<int, int>, Mat>& blocks) {
    const Spec& D = *T.alg.cat;
    Morphism psi(D, T.alg.A, Tp.alg.A);
    for (size_t i = 0; i < Tp.summands.size(); ++i)
        for (size_t j = 0; j < T.summands.size(); ++j) {
            const auto& a = Tp.summands[i];
            const auto& b = T.summands[j];
            if (a.lam1 != b.lam1 || a.lam2 != b.lam2) continue;
            const Mat& B = blocks.at({a.lam1, a.lam2});
            psi.set_block(static_cast<int>(i), static_cast<int>(j), Mat::Constant(1, 1, B(a.l, b.l)));
        }
    return psi;
}

Report check_isomorphism(const Frobenius& A, const Frobenius& B, const Morphism& psi, double tol) {
    const Spec& S = *A.cat;
    Report rep;
    rep.add("iso_m", dist(compose(psi, A.m), compose(B.m, tensor(psi, psi))), tol);
    rep.add("iso_eta", dist(compose(psi, A.eta), B.eta), tol);
    rep.add("iso_delta", dist(compose(tensor(psi, psi), A.delta), compose(B.delta, psi)), tol);
    rep.add("iso_eps", dist(compose(B.eps, psi), A.eps), tol);
    double rz = 0.0;
    for (const auto& [g, z] : A.z) {
        auto it = B.z.find(g);
        if (it == B.z.end()) continue;
        rz = std::max(rz, dist(compose(psi, z), compose(it->second, act(g, psi))));
    }
    rep.add("iso_z", rz, tol);
    (void)S;
    return rep;
}

}  // namespace gcross
