#include "gcross/frobalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gcross {

namespace {

Morphism idm(const Spec& S, const Obj& X) { return identity(S, X); }

// Morphism sub -> X embedding the contiguous summand range [start, start + sub.size()).
Morphism range_inclusion(const Spec& S, const Obj& X, int start, const Obj& sub) {
    Morphism r(S, sub, X);
    for (size_t k = 0; k < sub.size(); ++k) {
        int n = trees(S, sub.s[k])->size();
        r.set_block(start + static_cast<int>(k), static_cast<int>(k), Mat::Identity(n, n));
    }
    return r;
}

Morphism sum_over_group(const Spec& S, const std::function<Morphism(int)>& term) {
    Morphism acc = term(0);
    for (int g = 1; g < S.group.order(); ++g) acc += term(g);
    return acc;
}

}  // namespace

cplx Frobenius::dim() const { return trace(identity(*cat, A)); }

bool Frobenius::neutral() const {
    for (const auto& w : A.s)
        if (cat->word_grade(w) != cat->group.identity) return false;
    return true;
}

const Morphism& Frobenius::zg(int g) const {
    auto it = z.find(g);
    if (it == z.end()) throw std::invalid_argument("missing equivariant structure z_" + cat->group.elements[g]);
    return it->second;
}

std::map<int, Morphism> trivial_equivariance(const Spec& S, const Obj& X) {
    std::map<int, Morphism> z;
    for (int g = 0; g < S.group.order(); ++g) {
        Obj gX = act(S, g, X);
        if (gX != X) throw std::invalid_argument("trivial_equivariance: object not fixed by the action");
        Morphism zg(S, gX, X);
        for (size_t i = 0; i < X.size(); ++i) {
            int n = trees(S, X.s[i])->size();
            zg.set_block(static_cast<int>(i), static_cast<int>(i), Mat::Identity(n, n));
        }
        z.emplace(g, std::move(zg));
    }
    return z;
}

Frobenius unit_algebra(const Spec& S) {
    Frobenius A;
    A.cat = &S;
    A.name = "1";
    A.A = Obj::unit();
    Obj AA = otimes(A.A, A.A);
    A.m = Morphism(S, AA, A.A, Mat::Identity(1, 1));
    A.eta = identity(S, A.A);
    A.delta = Morphism(S, A.A, AA, Mat::Identity(1, 1));
    A.eps = identity(S, A.A);
    A.z = trivial_equivariance(S, A.A);
    return A;
}

Frobenius group_algebra(const Spec& S, const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) {
        int x = labels[i];
        if (x < 0 || x >= S.rank()) throw std::invalid_argument("group_algebra: label out of range");
        if (std::abs(S.qdim(x) - 1.0) > 1e-12) throw std::invalid_argument("group_algebra: label is not invertible");
        if (!pos.emplace(x, i).second) throw std::invalid_argument("group_algebra: duplicate label");
    }
    if (!pos.count(S.unit)) throw std::invalid_argument("group_algebra: labels must contain the unit");
    Frobenius A;
    A.cat = &S;
    A.A = Obj::of_labels(labels);
    for (int x : labels) A.name += (A.name.empty() ? "" : "+") + S.labels[x].name;
    Obj AA = otimes(A.A, A.A);
    A.m = Morphism(S, AA, A.A);
    A.delta = Morphism(S, A.A, AA);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int a = labels[i], b = labels[j];
            int c = -1;
            for (int k = 0; k < S.rank(); ++k)
                if (S.Nabc(a, b, k)) c = k;
            if (c < 0 || !pos.count(c)) throw std::invalid_argument("group_algebra: labels not closed under fusion");
            auto T = trees(S, {a, b});
            int t = T->index.at({0, c, 0});
            Mat mb = Mat::Zero(1, T->size()), db = Mat::Zero(T->size(), 1);
            mb(0, t) = 1.0;
            db(t, 0) = 1.0 / n;
            A.m.set_block(pos[c], i * n + j, mb);
            A.delta.set_block(i * n + j, pos[c], db);
        }
    A.eta = Morphism(S, Obj::unit(), A.A);
    A.eta.set_block(pos[S.unit], 0, Mat::Identity(1, 1));
    A.eps = Morphism(S, A.A, Obj::unit());
    A.eps.set_block(0, pos[S.unit], Mat::Constant(1, 1, cplx(n)));
    A.z = trivial_equivariance(S, A.A);
    return A;
}

// ---------------------------------------------------------------- checks

int bimodule_endomorphism_rank(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    Morphism id = idm(S, A.A);
    Morphism pre = compose(tensor(A.delta, id), A.delta);
    Morphism post = compose(A.m, tensor(A.m, id));
    auto basis = hom_basis(S, A.A, A.A);
    if (basis.empty()) return 0;
    const long n = id.M.size();
    Mat cols(n, static_cast<long>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k) {
        Morphism e = compose({post, tensor({id, basis[k], id}), pre});
        cols.col(static_cast<long>(k)) = Eigen::Map<const Eigen::VectorXcd>(e.M.data(), n);
    }
    Eigen::JacobiSVD<Mat> svd(cols);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) < tol) return 0;
    int r = 0;
    for (long i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * std::max(1.0, sv(0))) ++r;
    return r;
}

Report check_frobenius(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    Report rep;
    Morphism id = idm(S, A.A);
    rep.add("associativity", dist(compose(A.m, tensor(A.m, id)), compose(A.m, tensor(id, A.m))), tol);
    rep.add("unit", std::max(dist(compose(A.m, tensor(A.eta, id)), id), dist(compose(A.m, tensor(id, A.eta)), id)), tol);
    rep.add("coassociativity", dist(compose(tensor(A.delta, id), A.delta), compose(tensor(id, A.delta), A.delta)), tol);
    rep.add("counit",
            std::max(dist(compose(tensor(A.eps, id), A.delta), id), dist(compose(tensor(id, A.eps), A.delta), id)), tol);
    Morphism dm = compose(A.delta, A.m);
    rep.add("frobenius_law",
            std::max(dist(compose(tensor(A.m, id), tensor(id, A.delta)), dm),
                     dist(compose(tensor(id, A.m), tensor(A.delta, id)), dm)),
            tol);
    // specialness up to normalization: m Delta = beta_A id, eps eta = beta_1
    Morphism md = compose(A.m, A.delta);
    cplx beta = md.M.size() ? md.M.trace() / static_cast<double>(md.M.rows()) : cplx(0.0);
    rep.add("special", std::abs(beta) > tol ? dist(md, id * beta) : INFINITY, tol,
            "m.Delta = " + std::to_string(beta.real()) + " id");
    cplx ee = compose(A.eps, A.eta).M(0, 0);
    rep.add("special_unit", std::abs(ee) > tol ? 0.0 : INFINITY, tol, "eps.eta = " + std::to_string(ee.real()));
    // symmetry: the two identifications A -> A^v through eps.m and the two dualities agree
    Obj Ad = dual(S, A.A);
    Morphism em = compose(A.eps, A.m);
    Morphism phi1 = compose(tensor(em, idm(S, Ad)), tensor(id, coev(S, A.A)));
    Morphism phi2 = compose(tensor(idm(S, Ad), em), tensor(coev_r(S, A.A), id));
    rep.add("symmetric", dist(phi1, phi2), tol);
    int r = bimodule_endomorphism_rank(A, 1e-8);
    rep.flag("simple", r == 1, "dim End_AA(A) = " + std::to_string(r));
    return rep;
}

Report check_equivariant(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    Report rep;
    double r_e = 0, r_co = 0, r_m = 0, r_u = 0, r_d = 0, r_c = 0;
    auto ie = A.z.find(S.group.identity);
    if (ie != A.z.end()) r_e = dist(ie->second, identity(S, A.A));
    for (const auto& [g, zg] : A.z) {
        Obj gA = act(S, g, A.A);
        if (zg.src != gA || zg.tgt != A.A) {
            rep.flag("z_shape", false, "z_" + S.group.elements[g] + " has the wrong shape");
            return rep;
        }
        for (const auto& [h, zh] : A.z) {
            auto igh = A.z.find(S.group(g, h));
            if (igh == A.z.end()) continue;
            r_co = std::max(r_co, dist(igh->second, compose(zg, act(g, zh))));
        }
        r_m = std::max(r_m, dist(compose(zg, act(g, A.m)), compose(A.m, tensor(zg, zg))));
        r_u = std::max(r_u, dist(compose(zg, act(g, A.eta)), A.eta));
        r_d = std::max(r_d, dist(compose(A.delta, zg), compose(tensor(zg, zg), act(g, A.delta))));
        r_c = std::max(r_c, dist(compose(A.eps, zg), act(g, A.eps)));
    }
    rep.add("z_identity", r_e, tol);
    rep.add("z_cocycle", r_co, tol);
    rep.add("z_multiplicative", r_m, tol);
    rep.add("z_unital", r_u, tol);
    rep.add("z_comultiplicative", r_d, tol);
    rep.add("z_counital", r_c, tol);
    return rep;
}

Report check_g_commutative(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    Morphism id = idm(S, A.A);
    Morphism lhs = sum_over_group(S, [&](int g) {
        return compose({A.m, tensor(A.zg(g), id), dashed(S, A.A, A.A, g)});
    });
    Report rep;
    rep.add("g_commutative", dist(lhs, A.m), tol);
    return rep;
}

Report check_g_cocommutative(const Frobenius& A, double tol) {
    const Spec& S = *A.cat;
    Morphism id = idm(S, A.A);
    Morphism lhs = sum_over_group(S, [&](int g) {
        return compose({tensor(A.zg(g), id), dashed(S, A.A, A.A, g), A.delta});
    });
    Report rep;
    rep.add("g_cocommutative", dist(lhs, A.delta), tol);
    return rep;
}

// ---------------------------------------------------------------- products and idempotents

Frobenius product_algebra(const Frobenius& A, const Frobenius& B) {
    if (A.cat != B.cat) throw std::invalid_argument("product_algebra: algebras live in different categories");
    const Spec& S = *A.cat;
    Morphism iA = idm(S, A.A), iB = idm(S, B.A);
    Frobenius P;
    P.cat = &S;
    P.name = A.name + "*" + B.name;
    P.A = otimes(A.A, B.A);
    Morphism mm = tensor(A.m, B.m);
    Morphism dd = tensor(A.delta, B.delta);
    P.m = sum_over_group(S, [&](int g) {
        return compose({mm, tensor({iA, dashed_inv(S, A.A, B.A, g), iB}),
                        tensor({iA, inverse(B.zg(g)), iA, iB})});
    });
    P.delta = sum_over_group(S, [&](int g) {
        return compose({tensor({iA, B.zg(g), iA, iB}), tensor({iA, dashed(S, A.A, B.A, g), iB}), dd});
    });
    P.eta = tensor(A.eta, B.eta);
    P.eps = tensor(A.eps, B.eps);
    for (const auto& [g, za] : A.z) {
        auto it = B.z.find(g);
        if (it != B.z.end()) P.z.emplace(g, tensor(za, it->second));
    }
    return P;
}

cplx special_scalar(const Frobenius& A) {
    Morphism md = compose(A.m, A.delta);
    return md.M.trace() / static_cast<double>(md.M.rows());
}

Morphism idempotent_P(const Frobenius& A, const Obj& lam, const std::map<int, Morphism>& zlam) {
    const Spec& S = *A.cat;
    Morphism iA = idm(S, A.A), iL = idm(S, lam);
    auto zl = [&](int g) -> const Morphism& {
        auto it = zlam.find(g);
        if (it == zlam.end()) throw std::invalid_argument("idempotent_P: missing z for the object");
        return it->second;
    };
    Morphism d3 = tensor(compose(tensor(A.delta, iA), A.delta), iL);
    Morphism s1 = sum_over_group(S, [&](int g) { return compose(tensor(zl(g), iA), dashed(S, A.A, lam, g)); });
    Morphism s2 = sum_over_group(S, [&](int h) { return compose(tensor(A.zg(h), iL), dashed(S, lam, A.A, h)); });
    Morphism s3 = sum_over_group(S, [&](int k) { return compose(tensor(A.zg(k), iA), dashed(S, A.A, A.A, k)); });
    Morphism em = compose(A.eps, A.m);
    return compose({tensor({em, iA, iL}), tensor({iA, s3, iL}), tensor({iA, iA, s2}), tensor({iA, iA, s1}), d3}) *
           (1.0 / special_scalar(A));
}

Morphism idempotent_P(const Frobenius& A) {
    return idempotent_P(A, Obj::unit(), trivial_equivariance(*A.cat, Obj::unit()));
}

Morphism idempotent_Ptilde(const Frobenius& A, const Obj& lam) {
    if (!A.neutral()) throw std::invalid_argument("idempotent_Ptilde: algebra is not neutral");
    const Spec& S = *A.cat;
    Morphism iA = idm(S, A.A), iL = idm(S, lam);
    Morphism d3 = tensor(compose(tensor(A.delta, iA), A.delta), iL);
    Morphism s1 = braid(S, A.A, lam);
    Morphism s2 = sum_over_group(S, [&](int g) { return compose(tensor(A.zg(g), iL), dashed(S, lam, A.A, g)); });
    Morphism s3 = braid(S, A.A, A.A);
    Morphism em = compose(A.eps, A.m);
    return compose({tensor({em, iA, iL}), tensor({iA, s3, iL}), tensor({iA, iA, s2}), tensor({iA, iA, s1}), d3}) *
           (1.0 / special_scalar(A));
}

// ---------------------------------------------------------------- splitting

Retract split(const Morphism& p, double tol) {
    const Spec& S = *p.cat;
    const Obj& X = p.src;
    if (p.tgt != X) throw std::invalid_argument("split: not an endomorphism");
    auto rt = roots(S, X);
    std::map<int, std::vector<int>> by_root;
    for (int k = 0; k < static_cast<int>(rt.size()); ++k) by_root[rt[k]].push_back(k);
    const int n = static_cast<int>(rt.size());
    std::vector<int> labels;
    std::vector<Mat> Sc, Rc;
    std::vector<std::vector<int>> idxs;
    for (const auto& [c, idx] : by_root) {
        const int nc = static_cast<int>(idx.size());
        Mat Pc(nc, nc);
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) Pc(i, j) = p.M(idx[i], idx[j]);
        Eigen::JacobiSVD<Mat> svd(Pc, Eigen::ComputeFullU);
        const auto& sv = svd.singularValues();
        int k = 0;
        if (sv.size() && sv(0) > tol)
            while (k < sv.size() && sv(k) > tol * sv(0)) ++k;
        if (!k) continue;
        Mat U = svd.matrixU().leftCols(k);
        for (int i = 0; i < k; ++i) labels.push_back(c);
        Sc.push_back(U);
        Rc.push_back(U.adjoint() * Pc);
        idxs.push_back(idx);
    }
    Retract R;
    R.B = Obj::of_labels(labels);
    const int m = static_cast<int>(labels.size());
    Mat s = Mat::Zero(n, m), r = Mat::Zero(m, n);
    int col = 0;
    for (size_t b = 0; b < Sc.size(); ++b) {
        for (long i = 0; i < Sc[b].cols(); ++i, ++col)
            for (size_t t = 0; t < idxs[b].size(); ++t) {
                s(idxs[b][t], col) = Sc[b](static_cast<long>(t), i);
                r(col, idxs[b][t]) = Rc[b](i, static_cast<long>(t));
            }
    }
    R.s = Morphism(S, R.B, X, s);
    R.r = Morphism(S, X, R.B, r);
    return R;
}

Frobenius subalgebra(const Frobenius& A, const Retract& R, cplx zeta) {
    const Spec& S = *A.cat;
    Frobenius B;
    B.cat = &S;
    B.name = A.name + "|split";
    B.A = R.B;
    B.m = compose({R.r, A.m, tensor(R.s, R.s)});
    B.eta = compose(R.r, A.eta);
    B.delta = compose({tensor(R.r, R.r), A.delta, R.s}) * zeta;
    B.eps = compose(A.eps, R.s) * (1.0 / zeta);
    for (const auto& [g, zg] : A.z) B.z.emplace(g, compose({R.r, zg, act(g, R.s)}));
    return B;
}

Frobenius split_idempotent(const Frobenius& A, const Morphism& p, cplx zeta, double tol) {
    if (!(dist(compose(p, p), p) < tol)) throw std::invalid_argument("split_idempotent: p is not idempotent");
    return subalgebra(A, split(p, tol), zeta);
}

// ---------------------------------------------------------------- induction

Frobenius induce_algebra(const Frobenius& A, const std::vector<int>& H) {
    const Spec& S = *A.cat;
    const GroupTable& G = S.group;
    if (!G.is_subgroup(H)) throw std::invalid_argument("induce_algebra: not a subgroup");
    std::vector<char> inH(G.order(), 0);
    for (int h : H) inH[h] = 1;
    // rep[g] = smallest element of gH
    std::vector<int> rep(G.order(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.order(); ++g) {
        if (rep[g] >= 0) continue;
        reps.push_back(g);
        for (int h : H) rep[G(g, h)] = g;
    }
    std::map<int, int> block_of;
    std::vector<int> start;
    Frobenius I;
    I.cat = &S;
    I.name = "ind(" + A.name + ")";
    std::vector<Obj> parts;
    for (int r : reps) {
        block_of[r] = static_cast<int>(parts.size());
        start.push_back(static_cast<int>(I.A.size()));
        parts.push_back(act(S, r, A.A));
        I.A = oplus(I.A, parts.back());
    }
    std::vector<Morphism> inc, proj;
    for (size_t b = 0; b < reps.size(); ++b) {
        inc.push_back(range_inclusion(S, I.A, start[b], parts[b]));
        proj.push_back(adjoint(inc.back()));
    }
    Obj II = otimes(I.A, I.A);
    I.m = Morphism(S, II, I.A);
    I.delta = Morphism(S, I.A, II);
    I.eta = Morphism(S, Obj::unit(), I.A);
    I.eps = Morphism(S, I.A, Obj::unit());
    for (size_t b = 0; b < reps.size(); ++b) {
        int r = reps[b];
        I.m += compose({inc[b], act(r, A.m), tensor(proj[b], proj[b])});
        I.delta += compose({tensor(inc[b], inc[b]), act(r, A.delta), proj[b]});
        I.eta += compose(inc[b], act(r, A.eta));
        I.eps += compose(act(r, A.eps), proj[b]);
    }
    for (int g = 0; g < G.order(); ++g) {
        Morphism zg(S, act(S, g, I.A), I.A);
        for (size_t b = 0; b < reps.size(); ++b) {
            int gr = G(g, reps[b]);
            int rt = rep[gr];
            int h = G(G.inv[rt], gr);
            if (!inH[h]) throw std::logic_error("induce_algebra: coset bookkeeping");
            size_t bt = static_cast<size_t>(block_of[rt]);
            zg += compose({inc[bt], act(rt, A.zg(h)), act(g, proj[b])});
        }
        I.z.emplace(g, std::move(zg));
    }
    return I;
}

}  // namespace gcross

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gcross {

namespace {

int group_element(const Spec& S, const nlohmann::json& j) {
    if (j.is_number_integer()) return j.get<int>();
    const auto nm = j.get<std::string>();
    for (int g = 0; g < S.group.order(); ++g)
        if (S.group.elements[g] == nm) return g;
    throw std::invalid_argument("unknown group element '" + nm + "'");
}

Frobenius algebra_from(const Spec& S, const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "unit") return unit_algebra(S);
    if (kind == "group_algebra") {
        std::vector<int> labels;
        for (const auto& l : j.at("labels")) {
            int x = l.is_number_integer() ? l.get<int>() : S.find_label(l.get<std::string>());
            if (x < 0) throw std::invalid_argument("unknown label " + l.dump());
            labels.push_back(x);
        }
        return group_algebra(S, labels);
    }
    if (kind == "induced") {
        std::vector<int> H;
        for (const auto& h : j.at("subgroup")) H.push_back(group_element(S, h));
        std::sort(H.begin(), H.end());
        Frobenius base = algebra_from(S, j.at("base"));
        for (auto it = base.z.begin(); it != base.z.end();)
            it = std::binary_search(H.begin(), H.end(), it->first) ? std::next(it) : base.z.erase(it);
        return induce_algebra(base, H);
    }
    if (kind == "product") {
        const auto& f = j.at("factors");
        if (f.size() != 2) throw std::invalid_argument("product algebra needs two factors");
        return product_algebra(algebra_from(S, f[0]), algebra_from(S, f[1]));
    }
    throw std::invalid_argument("unknown algebra kind '" + kind + "'");
}

}  // namespace

Frobenius parse_algebra(const Spec& S, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("algebra: ") + e.what());
    }
    return algebra_from(S, j);
}

Frobenius load_algebra(const Spec& S, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(S, ss.str());
}

}  // namespace gcross
