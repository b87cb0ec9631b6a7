#include "gcross/constructions.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace gcross {

namespace {

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

cplx fentry(const Spec& S, int a, int b, int c, int d, const std::array<int, 3>& row, const std::array<int, 3>& col) {
    const FBlock* fb = S.fblock(a, b, c, d);
    if (!fb) return 0.0;
    auto r = fb->row_ix.find(row);
    auto k = fb->col_ix.find(col);
    if (r == fb->row_ix.end() || k == fb->col_ix.end()) return 0.0;
    return fb->M(r->second, k->second);
}

// F entry of S for the left-combed word (a, b, c) whose first vertex hom(e, ab) is carried
// to hom(ge, (ga)(gb)) by the action of g before the move.
cplx twisted_F(const Spec& S, int g, int a, int b, int c, int d, int e, int al, int be, int f, int mu, int nu) {
    Mat Ug = S.Ublock(g, a, b, e);
    const int ga = S.act(g, a), gb = S.act(g, b), ge = S.act(g, e);
    cplx s = 0.0;
    for (long ap = 0; ap < Ug.cols(); ++ap) s += Ug(al, ap) * fentry(S, ga, gb, c, d, {ge, static_cast<int>(ap), be}, {f, mu, nu});
    return s;
}

void derive_pivotal(Spec& S) {
    for (int x = 0; x < S.rank(); ++x) {
        cplx f11 = fentry(S, x, S.dual(x), x, x, {S.unit, 0, 0}, {S.unit, 0, 0});
        S.labels[x].pivotal = 1.0 / (S.qdim(x) * f11);
    }
}

void copy_group_action_basics(Spec& out, const Spec& C) {
    out.group = C.group;
    out.unitary = C.unitary;
    out.tol = C.tol;
}

}  // namespace

Spec reverse_category(const Spec& C) {
    if (!C.braided) throw std::invalid_argument("reverse_category: category is not braided");
    const GroupTable& G = C.group;
    const int n = C.rank();
    Spec R;
    copy_group_action_basics(R, C);
    R.name = C.name + " rev";
    R.provenance = "reverse";
    R.braided = true;
    R.unit = C.unit;
    R.perm = C.perm;
    R.labels = C.labels;
    for (int x = 0; x < n; ++x) {
        R.labels[x].grade = G.inv[C.grade(x)];
        R.labels[x].dual = C.act(G.inv[C.grade(x)], C.dual(x));
    }
    R.N.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) R.N[x][y][z] = C.N[C.act(C.grade(y), x)][y][z];
    R.allocate_blocks();
    for (auto& [k, fb] : R.F) {
        const auto [x, y, z, d] = k;
        const int gz = C.grade(z);
        const int a = C.act(C.grade(y), x);
        for (size_t i = 0; i < fb.rows.size(); ++i)
            for (size_t j = 0; j < fb.cols.size(); ++j) {
                const auto& r = fb.rows[i];
                const auto& c = fb.cols[j];
                fb.M(i, j) = twisted_F(C, gz, a, y, z, d, r[0], r[1], r[2], c[0], c[1], c[2]);
            }
    }
    for (auto& [k, m] : R.R) m = C.Rblock(k[1], k[0], k[2]).inverse();
    for (auto& [k, m] : R.U) m = C.Ublock(k[0], C.act(C.grade(k[2]), k[1]), k[2], k[3]);
    R.finalize_blocks();
    derive_pivotal(R);
    return R;
}

// ---------------------------------------------------------------- neutral double

NeutralDouble neutral_double(const Spec& C) {
    NeutralDouble ND;
    ND.C = std::make_shared<const Spec>(C);
    ND.rev = std::make_shared<const Spec>(reverse_category(C));
    const Spec& Rv = *ND.rev;
    const int n = C.rank();
    Spec D;
    copy_group_action_basics(D, C);
    D.name = C.name + " double";
    D.provenance = "double";
    D.braided = true;
    ND.label.assign(n, std::vector<int>(n, -1));
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            if (C.grade(c) != Rv.grade(d)) continue;
            ND.label[c][d] = static_cast<int>(D.labels.size());
            D.pair_of.push_back({c, d});
            SimpleLabel L;
            L.name = C.labels[c].name + "|" + Rv.labels[d].name;
            L.grade = C.grade(c);
            L.qdim = C.qdim(c) * Rv.qdim(d);
            L.pivotal = C.pivotal(c) * Rv.pivotal(d);
            D.labels.push_back(L);
        }
    const int m = static_cast<int>(D.labels.size());
    for (int i = 0; i < m; ++i) {
        auto [c, d] = D.pair_of[i];
        D.labels[i].dual = ND.label[C.dual(c)][Rv.dual(d)];
    }
    D.unit = ND.label[C.unit][Rv.unit];
    D.perm.assign(C.group.order(), std::vector<int>(m));
    for (int g = 0; g < C.group.order(); ++g)
        for (int i = 0; i < m; ++i) {
            auto [c, d] = D.pair_of[i];
            D.perm[g][i] = ND.label[C.act(g, c)][Rv.act(g, d)];
        }
    D.N.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                auto [a, a2] = D.pair_of[i];
                auto [b, b2] = D.pair_of[j];
                auto [c, c2] = D.pair_of[k];
                D.N[i][j][k] = C.N[a][b][c] * Rv.N[a2][b2][c2];
            }
    D.allocate_blocks();
    for (auto& [k, fb] : D.F) {
        auto [x, x2] = D.pair_of[k[0]];
        auto [y, y2] = D.pair_of[k[1]];
        auto [z, z2] = D.pair_of[k[2]];
        auto [d, d2] = D.pair_of[k[3]];
        for (size_t i = 0; i < fb.rows.size(); ++i)
            for (size_t j = 0; j < fb.cols.size(); ++j) {
                const auto& r = fb.rows[i];
                const auto& c = fb.cols[j];
                auto [e, e2] = D.pair_of[r[0]];
                auto [f, f2] = D.pair_of[c[0]];
                const int na = Rv.N[x2][y2][e2], nb = Rv.N[e2][z2][d2];
                const int nm = Rv.N[y2][z2][f2], nn = Rv.N[x2][f2][d2];
                fb.M(i, j) = fentry(C, x, y, z, d, {e, r[1] / na, r[2] / nb}, {f, c[1] / nm, c[2] / nn}) *
                             fentry(Rv, x2, y2, z2, d2, {e2, r[1] % na, r[2] % nb}, {f2, c[1] % nm, c[2] % nn});
            }
    }
    for (auto& [k, mat] : D.R) {
        auto [a, a2] = D.pair_of[k[0]];
        auto [b, b2] = D.pair_of[k[1]];
        auto [c, c2] = D.pair_of[k[2]];
        mat = kron(C.Rblock(a, b, c), Rv.Rblock(a2, b2, c2));
    }
    for (auto& [k, mat] : D.U) {
        auto [a, a2] = D.pair_of[k[1]];
        auto [b, b2] = D.pair_of[k[2]];
        auto [c, c2] = D.pair_of[k[3]];
        mat = kron(C.Ublock(k[0], a, b, c), Rv.Ublock(k[0], a2, b2, c2));
    }
    D.finalize_blocks();
    ND.D = std::make_shared<const Spec>(std::move(D));
    return ND;
}

Morphism NeutralDouble::box(const Morphism& f, const Morphism& g) const {
    if (f.src.size() != 1 || f.tgt.size() != 1 || g.src.size() != 1 || g.tgt.size() != 1)
        throw std::invalid_argument("box: single-word morphisms expected");
    auto pair_word = [&](const Word& a, const Word& b) {
        if (a.size() != b.size()) throw std::invalid_argument("box: words of different length");
        Word w(a.size());
        for (size_t i = 0; i < a.size(); ++i) {
            w[i] = label[a[i]][b[i]];
            if (w[i] < 0) throw std::invalid_argument("box: letters of different grade");
        }
        return w;
    };
    const Spec& Ds = *D;
    const Word ws = pair_word(f.src.s[0], g.src.s[0]), wt = pair_word(f.tgt.s[0], g.tgt.s[0]);
    // D-tree index -> (C-tree index, rev-tree index), following prefixes recursively
    auto split_trees = [&](const Word& w, const Word& wc, const Word& wr) {
        std::vector<std::pair<int, int>> out;
        std::function<void(const TreeBasis&, const TreeBasis&, const TreeBasis&, std::vector<std::pair<int, int>>&)> rec;
        rec = [&](const TreeBasis& Td, const TreeBasis& Tc, const TreeBasis& Tr, std::vector<std::pair<int, int>>& o) {
            o.assign(Td.size(), {0, 0});
            if (Td.word.size() <= 1) {
                for (int k = 0; k < Td.size(); ++k) {
                    auto [c, r] = Ds.pair_of[Td.root[k]];
                    o[k] = {Tc.index.at({0, c, 0}), Tr.index.at({0, r, 0})};
                }
                return;
            }
            std::vector<std::pair<int, int>> po;
            rec(*Td.prefix, *Tc.prefix, *Tr.prefix, po);
            for (int k = 0; k < Td.size(); ++k) {
                auto [pc, pr] = po[Td.pre[k]];
                auto [c, r] = Ds.pair_of[Td.root[k]];
                int last = Td.word.back();
                auto [lc, lr] = Ds.pair_of[last];
                int prd = Td.prefix->root[Td.pre[k]];
                auto [ec, er] = Ds.pair_of[prd];
                (void)lc;
                const int nr = rev->N[er][lr][r];
                o[k] = {Tc.index.at({pc, c, Td.vtx[k] / nr}), Tr.index.at({pr, r, Td.vtx[k] % nr})};
            }
        };
        if (w.empty()) {
            out.push_back({0, 0});
            return out;
        }
        rec(*trees(Ds, w), *trees(*C, wc), *trees(*rev, wr), out);
        return out;
    };
    auto ss = split_trees(ws, f.src.s[0], g.src.s[0]);
    auto tt = split_trees(wt, f.tgt.s[0], g.tgt.s[0]);
    Mat M(tt.size(), ss.size());
    for (size_t i = 0; i < tt.size(); ++i)
        for (size_t j = 0; j < ss.size(); ++j)
            M(i, j) = f.M(tt[i].first, ss[j].first) * g.M(tt[i].second, ss[j].second);
    return Morphism(Ds, Obj::word(ws), Obj::word(wt), M);
}

Obj NeutralDouble::box_left(const Obj& X) const {
    Obj out;
    for (const auto& w : X.s) {
        Word v(w.size());
        for (size_t i = 0; i < w.size(); ++i) {
            v[i] = label[w[i]][rev->unit];
            if (v[i] < 0) throw std::invalid_argument("box_left: letter is not neutral");
        }
        out.s.push_back(v);
    }
    return out;
}

Morphism NeutralDouble::box_left(const Morphism& f) const {
    // With the rev side trivial, D-trees of (x_i, 1) coincide with C-trees of (x_i).
    Obj s = box_left(f.src), t = box_left(f.tgt);
    Morphism r(*D, s, t);
    auto os = offsets(*C, f.src), ot = offsets(*C, f.tgt);
    auto ds = offsets(*D, s), dt = offsets(*D, t);
    for (size_t j = 0; j < t.size(); ++j)
        for (size_t i = 0; i < s.size(); ++i) {
            auto Tc_s = trees(*C, f.src.s[i]), Td_s = trees(*D, s.s[i]);
            auto Tc_t = trees(*C, f.tgt.s[j]), Td_t = trees(*D, t.s[j]);
            if (Tc_s->size() != Td_s->size() || Tc_t->size() != Td_t->size())
                throw std::logic_error("box_left: tree count mismatch");
            r.M.block(dt[j], ds[i], Td_t->size(), Td_s->size()) = f.M.block(ot[j], os[i], Tc_t->size(), Tc_s->size());
        }
    return r;
}

// ---------------------------------------------------------------- crossed product

Spec crossed_product(const Spec& C, const Spec& Dd) {
    if (C.group.mul != Dd.group.mul) throw std::invalid_argument("crossed_product: different groups");
    const GroupTable& G = C.group;
    const int nc = C.rank(), nd = Dd.rank();
    Spec P;
    copy_group_action_basics(P, C);
    P.unitary = C.unitary && Dd.unitary;
    P.tol = std::max(C.tol, Dd.tol);
    P.name = C.name + " x| " + Dd.name;
    P.provenance = "crossed_product";
    P.braided = false;
    auto id = [&](int c, int d) { return c * nd + d; };
    for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nd; ++d) {
            P.pair_of.push_back({c, d});
            SimpleLabel L;
            L.name = C.labels[c].name + "|" + Dd.labels[d].name;
            L.grade = G(C.grade(c), Dd.grade(d));
            L.qdim = C.qdim(c) * Dd.qdim(d);
            L.dual = id(C.dual(c), Dd.act(C.grade(c), Dd.dual(d)));
            P.labels.push_back(L);
        }
    const int m = nc * nd;
    P.unit = id(C.unit, Dd.unit);
    P.perm.assign(G.order(), std::vector<int>(m));
    for (int g = 0; g < G.order(); ++g)
        for (int i = 0; i < m; ++i) P.perm[g][i] = id(C.act(g, P.pair_of[i].first), Dd.act(g, P.pair_of[i].second));
    // first D letter twisted by the inverse grade of the second C letter
    auto tw = [&](int b) { return G.inv[C.grade(b)]; };
    P.N.assign(m, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                auto [a, a2] = P.pair_of[i];
                auto [b, b2] = P.pair_of[j];
                auto [c, c2] = P.pair_of[k];
                P.N[i][j][k] = C.N[a][b][c] * Dd.N[Dd.act(tw(b), a2)][b2][c2];
            }
    P.allocate_blocks();
    for (auto& [k, fb] : P.F) {
        auto [x, x2] = P.pair_of[k[0]];
        auto [y, y2] = P.pair_of[k[1]];
        auto [z, z2] = P.pair_of[k[2]];
        auto [d, d2] = P.pair_of[k[3]];
        const int g = tw(z);
        const int a2 = Dd.act(tw(y), x2);
        for (size_t i = 0; i < fb.rows.size(); ++i)
            for (size_t j = 0; j < fb.cols.size(); ++j) {
                const auto& r = fb.rows[i];
                const auto& c = fb.cols[j];
                auto [e, e2] = P.pair_of[r[0]];
                auto [f, f2] = P.pair_of[c[0]];
                const int na = Dd.N[a2][y2][e2], nb = Dd.N[Dd.act(tw(z), e2)][z2][d2];
                const int nm = Dd.N[Dd.act(tw(z), y2)][z2][f2], nn = Dd.N[Dd.act(tw(f), x2)][f2][d2];
                cplx fc = fentry(C, x, y, z, d, {e, r[1] / na, r[2] / nb}, {f, c[1] / nm, c[2] / nn});
                if (fc == cplx(0.0)) {
                    fb.M(i, j) = 0.0;
                    continue;
                }
                fb.M(i, j) = fc * twisted_F(Dd, g, a2, y2, z2, d2, e2, r[1] % na, r[2] % nb, f2, c[1] % nm, c[2] % nn);
            }
    }
    for (auto& [k, mat] : P.U) {
        auto [a, a2] = P.pair_of[k[1]];
        auto [b, b2] = P.pair_of[k[2]];
        auto [c, c2] = P.pair_of[k[3]];
        mat = kron(C.Ublock(k[0], a, b, c), Dd.Ublock(k[0], Dd.act(tw(b), a2), b2, c2));
    }
    P.finalize_blocks();
    derive_pivotal(P);
    return P;
}

// ---------------------------------------------------------------- dimensions, modular data

std::vector<double> fpdims(const Spec& S) {
    const int n = S.rank();
    std::vector<double> out(n);
    for (int x = 0; x < n; ++x) {
        Eigen::MatrixXd Nx(n, n);
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) Nx(z, y) = S.N[x][y][z];
        Eigen::EigenSolver<Eigen::MatrixXd> es(Nx, false);
        double best = 0.0;
        for (long i = 0; i < es.eigenvalues().size(); ++i) best = std::max(best, std::abs(es.eigenvalues()(i)));
        out[x] = best;
    }
    return out;
}

double fpdim_object(const Spec& S, const Obj& X) {
    auto d = fpdims(S);
    double s = 0.0;
    for (const auto& w : X.s) {
        double p = 1.0;
        for (int x : w) p *= d[x];
        s += p;
    }
    return s;
}

ModularData modular_data(const Spec& C, double tol) {
    if (C.group.order() != 1) throw std::invalid_argument("modular_data: needs trivial grading group");
    if (!C.braided) throw std::invalid_argument("modular_data: category is not braided");
    const int n = C.rank();
    ModularData md;
    md.S = Mat::Zero(n, n);
    md.T = Mat::Zero(n, n);
    const double sq = std::sqrt(C.global_dim());
    for (int a = 0; a < n; ++a) {
        md.T(a, a) = twist(C, a).M(0, 0);
        for (int b = 0; b < n; ++b) {
            Obj A = Obj::simple(a), B = Obj::simple(b);
            md.S(a, b) = trace(compose(braid(C, B, A), braid(C, A, B))) / sq;
        }
    }
    md.unitarity_residual = (md.S * md.S.adjoint() - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
    Eigen::JacobiSVD<Mat> svd(md.S);
    const auto& sv = svd.singularValues();
    md.modular = sv.size() && sv(sv.size() - 1) > tol * std::max(1.0, sv(0));
    return md;
}

}  // namespace gcross
