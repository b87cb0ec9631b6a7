#include "gcross/lemmas.hpp"

#include <algorithm>

namespace gcross {

namespace {

Morphism id(const Spec& S, const Obj& X) { return identity(S, X); }
Morphism id(const Spec& S, int x) { return identity(S, Obj::simple(x)); }

int grade_of(const Spec& S, const Obj& X) { return S.word_grade(X.s.at(0)); }

int uniform(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

Word random_word(const Spec& S, std::mt19937_64& rng, int max_len) {
    const int len = 1 + uniform(rng, max_len);
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(uniform(rng, S.rank()));
    return w;
}

// A word w' with hom(w, w') != 0 (falls back to w itself).
Word random_target(const Spec& S, const Word& w, std::mt19937_64& rng, int max_len) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Word t = random_word(S, rng, max_len);
        if (!hom_basis(S, Obj::word(w), Obj::word(t)).empty()) return t;
    }
    return w;
}

// Random nonzero morphism out of a random word.
Morphism random_nonzero(const Spec& S, std::mt19937_64& rng, const Word& src, int max_len) {
    Word t = random_target(S, src, rng, max_len);
    return random_morphism(S, Obj::word(src), Obj::word(t), rng);
}

Morphism delta_eta(const Frobenius& A) { return compose(A.delta, A.eta); }

Morphism pick(const std::vector<Morphism>& basis, std::mt19937_64& rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    Morphism f = basis.at(0) * cplx(nd(rng), nd(rng));
    for (size_t k = 1; k < basis.size(); ++k) f += basis[k] * cplx(nd(rng), nd(rng));
    return f;
}

// alpha^+(lam) (x)_A alpha^+(lam') -> alpha^+(lam lam') on A lam A lam'.
Morphism fuse_plus(const Frobenius& A, const Obj& l1, const Obj& l2) { return alpha_tensor_split(A, l1, l2, +1).r; }

// Bimodule-valued evaluation R^v R -> A of a right module.
Morphism ev_over(const Frobenius& A, const RightModule& R) {
    const Spec& S = *A.cat;
    Obj Rd = dual(S, R.X);
    Morphism iA = id(S, A.A);
    return compose({tensor(ev(S, R.X), iA), tensor({id(S, Rd), R.act, iA}), tensor(id(S, otimes(Rd, R.X)), delta_eta(A))});
}

}  // namespace

Morphism random_morphism(const Spec& S, const Obj& src, const Obj& tgt, std::mt19937_64& rng) {
    auto basis = hom_basis(S, src, tgt);
    if (basis.empty()) return Morphism(S, src, tgt);
    return pick(basis, rng);
}

// ---------------------------------------------------------------- conjugation, crossings

double conjugation_composition(const Spec& S, std::mt19937_64& rng) {
    Word w1 = random_word(S, rng, 2);
    Morphism f = random_nonzero(S, rng, w1, 2);
    Morphism fp = random_nonzero(S, rng, f.tgt.s[0], 2);
    return dist(conjugate(compose(fp, f)), compose(conjugate(f), conjugate(fp)));
}

double conjugation_monoidal(const Spec& S, std::mt19937_64& rng) {
    Morphism f = random_nonzero(S, rng, random_word(S, rng, 2), 2);
    Morphism fp = random_nonzero(S, rng, random_word(S, rng, 2), 2);
    const int g = S.group.inv[S.word_grade(fp.src.s[0])];
    return dist(conjugate(tensor(f, fp)), tensor(act(g, conjugate(f)), conjugate(fp)));
}

double conjugation_star(const Spec& S, std::mt19937_64& rng) {
    Morphism f = random_nonzero(S, rng, random_word(S, rng, 2), 2);
    return dist(conjugate(adjoint(f)), adjoint(conjugate(f)));
}

double conjugation_reverse_braiding(const Spec& S, std::mt19937_64& rng) {
    const int l = uniform(rng, S.rank()), m = uniform(rng, S.rank());
    // reverse crossing b^-_{mu,lam} = b_{lam,mu}^{-1}
    Morphism rev = braid_inv(S, Obj::simple(l), Obj::simple(m));
    Morphism dual_rev = braid_inv(S, Obj::simple(S.dual(m)), Obj::simple(S.dual(l)));
    return dist(conjugate(rev), dual_rev);
}

double crossing_rotation(const Spec& S, std::mt19937_64& rng) {
    const int l = uniform(rng, S.rank()), m = uniform(rng, S.rank());
    Obj L = Obj::simple(l), M = Obj::simple(m), Ld = Obj::simple(S.dual(l)), Md = Obj::simple(S.dual(m));
    const int g = S.grade(l);
    Obj gM = act(S, g, M);
    Morphism b = braid(S, L, M);
    Morphism left = compose({tensor({ev_r(S, L), id(S, gM), id(S, L)}), tensor({id(S, L), braid_inv(S, Ld, gM), id(S, L)}),
                             tensor({id(S, L), id(S, M), coev_r(S, L)})});
    Morphism right = compose({tensor({id(S, gM), id(S, L), ev(S, M)}), tensor({id(S, gM), braid_inv(S, L, Md), id(S, M)}),
                              tensor({coev(S, gM), id(S, L), id(S, M)})});
    return std::max(dist(left, b), dist(right, b));
}

double framed_reidemeister(const Spec& S, int lam) {
    Obj L = Obj::simple(lam), Ld = dual(S, L);
    const int g = S.grade(lam);
    Obj gL = act(S, g, L);
    Morphism k1 = compose({tensor(id(S, gL), ev_r(S, L)), tensor(braid(S, L, L), id(S, Ld)), tensor(id(S, L), coev(S, L))});
    Morphism k2 = compose({tensor(id(S, L), ev_r(S, L)), tensor(braid_inv(S, L, L), id(S, Ld)), tensor(id(S, gL), coev(S, L))});
    // the same move with the loops on ^{g^-1} lam
    Obj X = act(S, S.group.inv[g], L), Xd = dual(S, X);
    Morphism k3 = compose({tensor(id(S, X), ev_r(S, X)), tensor(braid_inv(S, X, X), id(S, Xd)), tensor(id(S, L), coev(S, X))});
    Morphism k4 = compose({tensor(id(S, L), ev_r(S, X)), tensor(braid(S, X, X), id(S, Xd)), tensor(id(S, X), coev(S, X))});
    return std::max(dist(compose(k2, k1), id(S, L)), dist(compose(k4, k3), id(S, L)));
}

// ---------------------------------------------------------------- modules

LeftModule free_left(const Frobenius& A, const Obj& nu) {
    return {otimes(A.A, nu), tensor(A.m, identity(*A.cat, nu))};
}

RightModule free_right(const Frobenius& A, const Obj& nu) {
    return {otimes(nu, A.A), tensor(identity(*A.cat, nu), A.m)};
}

LeftModule act_module(const Frobenius& A, int g, const LeftModule& M) {
    const Spec& S = *A.cat;
    Obj gX = act(S, g, M.X);
    return {gX, compose(act(g, M.act), tensor(inverse(A.zg(g)), id(S, gX)))};
}

RightModule act_module(const Frobenius& A, int g, const RightModule& M) {
    const Spec& S = *A.cat;
    Obj gX = act(S, g, M.X);
    return {gX, compose(act(g, M.act), tensor(id(S, gX), inverse(A.zg(g))))};
}

RightModule dual_module(const LeftModule& M, const Frobenius& A) {
    const Spec& S = *A.cat;
    Obj Xd = dual(S, M.X);
    Morphism r = compose({tensor(ev(S, M.X), id(S, Xd)), tensor({id(S, Xd), M.act, id(S, Xd)}),
                          tensor({id(S, Xd), id(S, A.A), coev(S, M.X)})});
    return {Xd, r};
}

LeftModule dual_module(const RightModule& M, const Frobenius& A) {
    const Spec& S = *A.cat;
    Obj Xd = dual(S, M.X);
    Morphism l = compose({tensor(id(S, Xd), ev_r(S, M.X)), tensor({id(S, Xd), M.act, id(S, Xd)}),
                          tensor({coev_r(S, M.X), id(S, A.A), id(S, Xd)})});
    return {Xd, l};
}

Morphism balance(const Frobenius& A, const Morphism& right_act, const Morphism& left_act) {
    const Spec& S = *A.cat;
    Morphism e = compose(tensor(right_act, left_act), tensor({id(S, right_act.tgt), delta_eta(A), id(S, left_act.tgt)}));
    return e * (1.0 / special_scalar(A));
}

Morphism thick_plus(const Frobenius& A, const Obj& lam, const LeftModule& mu) {
    const Spec& S = *A.cat;
    LeftModule gmu = act_module(A, grade_of(S, lam), mu);
    Bimodule X = alpha_bimodule(A, lam, +1);
    return compose({tensor(gmu.act, id(S, lam)), tensor(id(S, A.A), braid(S, lam, mu.X)), balance(A, X.right, mu.act)});
}

Morphism thick_minus(const Frobenius& A, const Obj& lam, const LeftModule& mu) {
    const Spec& S = *A.cat;
    Obj hl = act(S, grade_of(S, mu.X), lam);
    Bimodule X = alpha_bimodule(A, hl, -1);
    return compose({tensor(mu.act, id(S, lam)), tensor(id(S, A.A), braid_inv(S, mu.X, lam)), balance(A, X.right, mu.act)});
}

Morphism thick_plus(const Frobenius& A, const RightModule& rho, const Obj& lam) {
    const Spec& S = *A.cat;
    RightModule grho = act_module(A, grade_of(S, lam), rho);
    Bimodule X = alpha_bimodule(A, lam, +1);
    return compose({braid_inv(S, lam, rho.X), tensor(grho.act, id(S, lam)), balance(A, grho.act, X.left)});
}

Morphism thick_minus(const Frobenius& A, const RightModule& rho, const Obj& lam) {
    const Spec& S = *A.cat;
    Bimodule X = alpha_bimodule(A, lam, -1);
    return compose({braid(S, rho.X, lam), tensor(rho.act, id(S, lam)), balance(A, rho.act, X.left)});
}

Morphism balanced_inverse(const Morphism& B, const Morphism& e, double tol) {
    Retract R = split(e, tol);
    return compose(R.s, inverse(compose(B, R.s)));
}

// ---------------------------------------------------------------- identities over an algebra

double alpha_braiding_compat(const Frobenius& A, std::mt19937_64& rng) {
    const Spec& S = *A.cat;
    const int n = S.rank();
    // pairs (lam, lam') with hom(alpha+(lam), alpha-(lam')) != 0
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (S.grade(a) == S.grade(b) && !local_homs(A, a, b).empty()) pairs.push_back({a, b});
    auto hom_pm = [&](int a, int b) {
        return pick(bimodule_homs(alpha_bimodule(A, Obj::simple(a), +1), alpha_bimodule(A, Obj::simple(b), -1)), rng);
    };
    auto [l, lp] = pairs[static_cast<size_t>(uniform(rng, static_cast<int>(pairs.size())))];
    auto [m, mp] = pairs[static_cast<size_t>(uniform(rng, static_cast<int>(pairs.size())))];
    Morphism f = hom_pm(l, lp), fp = hom_pm(m, mp);
    const int g = S.grade(l);
    Obj L = Obj::simple(l), Lp = Obj::simple(lp), M = Obj::simple(m), Mp = Obj::simple(mp);
    Obj gM = act(S, g, M), gMp = act(S, g, Mp);
    Morphism iA = id(S, A.A);
    auto over = [&](const Morphism& x, const Obj& xs, const Obj& xt, const Morphism& y, const Obj& ys, const Obj& yt) {
        return compose({alpha_tensor_split(A, xt, yt, -1).r, tensor(x, y), alpha_tensor_split(A, xs, ys, +1).s});
    };
    Morphism ffp = over(f, L, Lp, fp, M, Mp);
    Morphism zg = A.zg(g), zgi = inverse(zg);
    Morphism Fp = compose({tensor(zg, id(S, gMp)), act(g, fp), tensor(zgi, id(S, gM))});
    Morphism Fpf = over(Fp, gM, gMp, f, L, Lp);
    double r1 = dist(compose(tensor(iA, braid(S, Lp, Mp)), ffp), compose(Fpf, tensor(iA, braid(S, L, M))));
    double r2 = dist(compose(ffp, tensor(iA, braid_inv(S, L, M))), compose(tensor(iA, braid_inv(S, Lp, Mp)), Fpf));
    return std::max(r1, r2);
}

double thick_ordinary_crossing(const Frobenius& A, std::mt19937_64& rng) {
    const Spec& S = *A.cat;
    Obj L = Obj::simple(uniform(rng, S.rank()));
    LeftModule mu = free_left(A, Obj::simple(uniform(rng, S.rank())));
    RightModule rho = free_right(A, Obj::simple(uniform(rng, S.rank())));
    const int g = grade_of(S, L), h = grade_of(S, mu.X);
    Morphism e_rm = balance(A, rho.act, mu.act);
    Obj RM = otimes(rho.X, mu.X);
    // alpha^- version: lam passes under mu, then under rho
    Obj hL = act(S, h, L);
    Morphism Bm = thick_minus(A, L, mu);
    Morphism Bm_inv = balanced_inverse(Bm, balance(A, alpha_bimodule(A, hL, -1).right, mu.act));
    Morphism lhs1 = compose({tensor(thick_minus(A, rho, hL), id(S, mu.X)), tensor(id(S, rho.X), Bm_inv), tensor(e_rm, id(S, L))});
    Morphism rhs1 = compose(braid(S, RM, L), tensor(e_rm, id(S, L)));
    // alpha^+ version: lam passes over rho, then over mu
    RightModule grho = act_module(A, g, rho);
    Morphism Bp = thick_plus(A, rho, L);
    Morphism Bp_inv = balanced_inverse(Bp, balance(A, grho.act, alpha_bimodule(A, L, +1).left));
    Morphism lhs2 = compose({tensor(id(S, grho.X), thick_plus(A, L, mu)), tensor(Bp_inv, id(S, mu.X)), tensor(id(S, L), e_rm)});
    Morphism rhs2 = compose(braid(S, L, RM), tensor(id(S, L), e_rm));
    return std::max(dist(lhs1, rhs1), dist(lhs2, rhs2));
}

double thick_arc(const Frobenius& A, std::mt19937_64& rng) {
    const Spec& S = *A.cat;
    Obj L = Obj::simple(uniform(rng, S.rank()));
    const int g = grade_of(S, L);
    Bimodule al = alpha_bimodule(A, L, +1);
    Obj AL = al.X;
    // left module mu and its dual
    LeftModule mu = free_left(A, Obj::simple(uniform(rng, S.rank())));
    LeftModule gmu = act_module(A, g, mu);
    RightModule mud = dual_module(mu, A);
    RightModule gmud = act_module(A, g, mud);
    Morphism e_am = balance(A, al.right, mu.act);
    Morphism Bl = thick_plus(A, L, mu);
    Morphism Bl_inv = balanced_inverse(Bl, e_am);
    Morphism Br = thick_plus(A, mud, L);
    Morphism Br_inv = balanced_inverse(Br, balance(A, gmud.act, al.left));
    Morphism cap_in = compose(tensor(e_am, id(S, mud.X)), tensor(id(S, AL), coev(S, mu.X)));  // alpha -> alpha (x)_A mu  mu^v
    Morphism cap_out = compose(tensor(id(S, gmu.X), balance(A, gmud.act, al.left)), tensor(coev(S, gmu.X), id(S, AL)));
    Morphism lhs1 = compose({tensor(id(S, gmu.X), Br_inv), tensor(Bl, id(S, mud.X)), cap_in});
    Morphism lhs2 = compose({tensor(Bl_inv, id(S, mud.X)), tensor(id(S, gmu.X), Br), tensor(coev(S, gmu.X), id(S, AL))});
    double r = std::max(dist(lhs1, cap_out), dist(lhs2, cap_in));
    // right module rho and its dual
    RightModule rho = free_right(A, Obj::simple(uniform(rng, S.rank())));
    RightModule grho = act_module(A, g, rho);
    LeftModule rhod = dual_module(rho, A);
    Obj gRd = dual(S, grho.X);
    Morphism Cr = thick_plus(A, rho, L);
    Morphism Cr_inv = balanced_inverse(Cr, balance(A, grho.act, al.left));
    Morphism Cl = thick_plus(A, L, rhod);
    Morphism Cl_inv = balanced_inverse(Cl, balance(A, al.right, rhod.act));
    Morphism cup_in = compose({al.left, tensor(ev_over(A, grho), id(S, AL)), tensor(id(S, gRd), balance(A, grho.act, al.left))});
    Morphism cup_out = compose({al.right, tensor(id(S, AL), ev_over(A, rho)), tensor(balance(A, al.right, rhod.act), id(S, rho.X))});
    Morphism lhs3 = compose({al.right, tensor(id(S, AL), ev_over(A, rho)), tensor(Cl_inv, id(S, rho.X)), tensor(id(S, gRd), Cr)});
    Morphism lhs4 = compose({al.left, tensor(ev_over(A, grho), id(S, AL)), tensor(id(S, gRd), Cr_inv), tensor(Cl, id(S, rho.X))});
    return std::max({r, dist(lhs3, cup_in), dist(lhs4, cup_out)});
}

double thick_product(const Frobenius& A, std::mt19937_64& rng) {
    const Spec& S = *A.cat;
    Obj L1 = Obj::simple(uniform(rng, S.rank())), L2 = Obj::simple(uniform(rng, S.rank()));
    const int g1 = grade_of(S, L1), g2 = grade_of(S, L2);
    Bimodule a1 = alpha_bimodule(A, L1, +1), a2 = alpha_bimodule(A, L2, +1);
    Morphism e12 = balance(A, a1.right, a2.left);
    // left module
    LeftModule mu = free_left(A, Obj::simple(uniform(rng, S.rank())));
    Morphism e3 = compose(tensor(e12, id(S, mu.X)), tensor(id(S, a1.X), balance(A, a2.right, mu.act)));
    Morphism lhs1 = compose({tensor(thick_plus(A, L1, act_module(A, g2, mu)), id(S, L2)), tensor(id(S, a1.X), thick_plus(A, L2, mu)), e3});
    Morphism rhs1 = compose({thick_plus(A, otimes(L1, L2), mu), tensor(fuse_plus(A, L1, L2), id(S, mu.X)), e3});
    // right module
    RightModule rho = free_right(A, Obj::simple(uniform(rng, S.rank())));
    RightModule g2rho = act_module(A, g2, rho);
    RightModule ggrho = act_module(A, g1, g2rho);
    Morphism e3r = compose(tensor(balance(A, ggrho.act, a1.left), id(S, a2.X)), tensor(id(S, ggrho.X), e12));
    Morphism lhs2 = compose({tensor(id(S, L1), thick_plus(A, rho, L2)), tensor(thick_plus(A, g2rho, L1), id(S, a2.X)), e3r});
    Morphism rhs2 = compose({thick_plus(A, rho, otimes(L1, L2)), tensor(id(S, ggrho.X), fuse_plus(A, L1, L2)), e3r});
    return std::max(dist(lhs1, rhs1), dist(lhs2, rhs2));
}

double thick_rotation(const Frobenius& A, std::mt19937_64& rng) {
    const Spec& S = *A.cat;
    Obj L = Obj::simple(uniform(rng, S.rank()));
    Obj Ld = dual(S, L);
    const int g = grade_of(S, L);
    Bimodule al = alpha_bimodule(A, L, +1);
    Morphism iA = id(S, A.A), iL = id(S, L);
    // B^+_{lam,mu}
    LeftModule mu = free_left(A, Obj::simple(uniform(rng, S.rank())));
    LeftModule gmu = act_module(A, g, mu);
    RightModule mud = dual_module(mu, A);
    Morphism e = balance(A, al.right, mu.act);
    Morphism B = thick_plus(A, L, mu);
    Morphism Bd_inv = balanced_inverse(thick_plus(A, Ld, gmu), balance(A, alpha_bimodule(A, Ld, +1).right, gmu.act));
    Morphism cup_r = compose(tensor(iA, ev_r(S, L)), fuse_plus(A, L, Ld));  // alpha(lam) (x)_A alpha(lam^v) -> A
    Morphism left1 = compose({tensor(gmu.act, iL), tensor({cup_r, id(S, gmu.X), iL}), tensor({id(S, al.X), Bd_inv, iL}),
                              tensor({id(S, al.X), id(S, mu.X), coev_r(S, L)}), e});
    Morphism right1 = compose({tensor({id(S, gmu.X), iL, ev(S, mu.X)}), tensor({id(S, gmu.X), thick_plus(A, mud, L), id(S, mu.X)}),
                               tensor(coev(S, gmu.X), id(S, otimes(al.X, mu.X))), e});
    double r = std::max(dist(left1, B), dist(right1, B));
    // B^+_{rho,lam}
    RightModule rho = free_right(A, Obj::simple(uniform(rng, S.rank())));
    RightModule grho = act_module(A, g, rho);
    LeftModule rhod = dual_module(rho, A);
    Morphism er = balance(A, grho.act, al.left);
    Morphism C = thick_plus(A, rho, L);
    Morphism Cd_inv = balanced_inverse(thick_plus(A, grho, Ld), balance(A, act_module(A, S.group.inv[g], grho).act,
                                                                         alpha_bimodule(A, Ld, +1).left));
    Morphism cup_l = compose(tensor(iA, ev(S, L)), fuse_plus(A, Ld, L));  // alpha(lam^v) (x)_A alpha(lam) -> A
    Morphism left2 = compose({tensor({ev_r(S, grho.X), iL, id(S, rho.X)}), tensor({id(S, grho.X), thick_plus(A, L, rhod), id(S, rho.X)}),
                              tensor({id(S, grho.X), id(S, al.X), coev_r(S, rho.X)}), er});
    Morphism right2 = compose({tensor(iL, compose(rho.act, tensor(id(S, rho.X), cup_l))), tensor({iL, Cd_inv, id(S, al.X)}),
                               tensor({coev(S, L), id(S, grho.X), id(S, al.X)}), er});
    return std::max({r, dist(left2, C), dist(right2, C)});
}

// ---------------------------------------------------------------- suite

Report lemma_suite(const Spec& S, const std::vector<const Frobenius*>& algebras, const LemmaOptions& opt) {
    Report rep;
    std::mt19937_64 rng(opt.seed);
    const std::string inst = std::to_string(opt.instances) + " instances";
    auto run = [&](const std::string& name, const std::function<double()>& one) {
        double worst = 0.0;
        for (int k = 0; k < opt.instances; ++k) worst = std::max(worst, one());
        rep.add(name, worst, opt.tol, inst);
    };
    run("conjugation_contravariant", [&] { return conjugation_composition(S, rng); });
    run("conjugation_monoidal", [&] { return conjugation_monoidal(S, rng); });
    if (S.unitary) run("conjugation_star", [&] { return conjugation_star(S, rng); });
    run("conjugation_reverse_braiding", [&] { return conjugation_reverse_braiding(S, rng); });
    run("crossing_rotation", [&] { return crossing_rotation(S, rng); });
    {
        double worst = 0.0;
        for (int l = 0; l < S.rank(); ++l) worst = std::max(worst, framed_reidemeister(S, l));
        rep.add("framed_reidemeister", worst, opt.tol, "all simples");
    }
    if (algebras.empty()) return rep;
    size_t next = 0;
    auto cycle = [&]() -> const Frobenius& { return *algebras[next++ % algebras.size()]; };
    run("alpha_braiding_compat", [&] { return alpha_braiding_compat(cycle(), rng); });
    run("thick_ordinary_crossing", [&] { return thick_ordinary_crossing(cycle(), rng); });
    run("thick_arc", [&] { return thick_arc(cycle(), rng); });
    run("thick_product", [&] { return thick_product(cycle(), rng); });
    run("thick_rotation", [&] { return thick_rotation(cycle(), rng); });
    return rep;
}

}  // namespace gcross
