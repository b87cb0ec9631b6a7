#include <cmath>
#include <limits>
#include <sstream>

#include "gcross/morphism.hpp"

namespace gcross {

namespace {

// Basis change for the product basis P = (t1 (x) t2) o |c -> r1 r2, nu> of word w1 w2
// into the left-combed basis L of the concatenated word: P = sum_L C(P, L) L.
struct Conv {
    std::vector<std::array<int, 4>> P;  // (t1, t2, c, nu)
    std::map<std::array<int, 4>, int> Pix;
    std::vector<std::vector<std::pair<int, cplx>>> rows;  // sparse C
    Mat C, B;                                              // B = C^{-1}
};

struct ActV {
    Mat V, Vinv;  // g|T> = sum_T' V(T, T') |T'>
};

}  // namespace

struct EngineCache {
    std::mutex mu;
    std::map<Word, std::shared_ptr<const TreeBasis>> trees;
    std::map<std::pair<Word, Word>, std::shared_ptr<const Conv>> conv;
    std::map<std::pair<int, Word>, std::shared_ptr<const ActV>> actv;
    std::map<std::pair<Word, Word>, std::shared_ptr<const Mat>> braid;
};

CacheHandle::CacheHandle() : p(std::make_shared<EngineCache>()) {}
CacheHandle::CacheHandle(const CacheHandle&) : p(std::make_shared<EngineCache>()) {}
CacheHandle& CacheHandle::operator=(const CacheHandle&) {
    p = std::make_shared<EngineCache>();
    return *this;
}
CacheHandle::~CacheHandle() = default;

// ---------------------------------------------------------------- objects

Obj Obj::of_labels(const std::vector<int>& xs) {
    Obj o;
    for (int x : xs) o.s.push_back(Word{x});
    return o;
}

Obj otimes(const Obj& a, const Obj& b) {
    Obj o;
    o.s.reserve(a.size() * b.size());
    for (const auto& u : a.s)
        for (const auto& v : b.s) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            o.s.push_back(std::move(w));
        }
    return o;
}

Obj oplus(const Obj& a, const Obj& b) {
    Obj o = a;
    o.s.insert(o.s.end(), b.s.begin(), b.s.end());
    return o;
}

Obj act(const Spec& S, int g, const Obj& a) {
    Obj o;
    for (const auto& w : a.s) o.s.push_back(S.act_word(g, w));
    return o;
}

Obj dual(const Spec& S, const Obj& a) {
    Obj o;
    for (const auto& w : a.s) o.s.push_back(S.dual_word(w));
    return o;
}

std::string to_string(const Spec& S, const Obj& a) {
    std::ostringstream os;
    for (size_t i = 0; i < a.s.size(); ++i) {
        if (i) os << " + ";
        if (a.s[i].empty()) os << "1";
        for (size_t k = 0; k < a.s[i].size(); ++k) os << (k ? "." : "") << S.labels[a.s[i][k]].name;
    }
    return os.str();
}

// ---------------------------------------------------------------- trees

std::shared_ptr<const TreeBasis> trees(const Spec& S, const Word& w) {
    EngineCache& C = *S.cache.p;
    {
        std::lock_guard<std::mutex> lk(C.mu);
        auto it = C.trees.find(w);
        if (it != C.trees.end()) return it->second;
    }
    auto tb = std::make_shared<TreeBasis>();
    tb->word = w;
    if (w.empty()) {
        tb->root.push_back(S.unit);
        tb->pre.push_back(-1);
        tb->vtx.push_back(0);
        tb->index[{-1, S.unit, 0}] = 0;
    } else {
        Word p(w.begin(), w.end() - 1);
        int x = w.back();
        tb->prefix = trees(S, p);
        for (int k = 0; k < tb->prefix->size(); ++k) {
            int y = tb->prefix->root[k];
            for (int c = 0; c < S.rank(); ++c)
                for (int m = 0; m < S.Nabc(y, x, c); ++m) {
                    tb->index[{k, c, m}] = tb->size();
                    tb->root.push_back(c);
                    tb->pre.push_back(k);
                    tb->vtx.push_back(m);
                }
        }
    }
    std::lock_guard<std::mutex> lk(C.mu);
    return C.trees.emplace(w, tb).first->second;
}

int basis_dim(const Spec& S, const Obj& X) {
    int n = 0;
    for (const auto& w : X.s) n += trees(S, w)->size();
    return n;
}

std::vector<int> offsets(const Spec& S, const Obj& X) {
    std::vector<int> off(X.size() + 1, 0);
    for (size_t i = 0; i < X.size(); ++i) off[i + 1] = off[i] + trees(S, X.s[i])->size();
    return off;
}

std::vector<int> roots(const Spec& S, const Obj& X) {
    std::vector<int> r;
    for (const auto& w : X.s) {
        auto t = trees(S, w);
        r.insert(r.end(), t->root.begin(), t->root.end());
    }
    return r;
}

namespace {

std::shared_ptr<const Conv> conversion(const Spec& S, const Word& w1, const Word& w2) {
    EngineCache& EC = *S.cache.p;
    auto key = std::make_pair(w1, w2);
    {
        std::lock_guard<std::mutex> lk(EC.mu);
        auto it = EC.conv.find(key);
        if (it != EC.conv.end()) return it->second;
    }
    auto cv = std::make_shared<Conv>();
    auto T1 = trees(S, w1), T2 = trees(S, w2);
    Word w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    auto TL = trees(S, w);
    for (int t1 = 0; t1 < T1->size(); ++t1)
        for (int t2 = 0; t2 < T2->size(); ++t2) {
            int r1 = T1->root[t1], r2 = T2->root[t2];
            for (int c = 0; c < S.rank(); ++c)
                for (int nu = 0; nu < S.Nabc(r1, r2, c); ++nu) {
                    cv->Pix[{t1, t2, c, nu}] = static_cast<int>(cv->P.size());
                    cv->P.push_back({t1, t2, c, nu});
                }
        }
    const int n = static_cast<int>(cv->P.size());
    if (n != TL->size()) throw std::logic_error("tensor basis size mismatch: inconsistent fusion rules");
    cv->rows.resize(n);
    if (w2.empty()) {
        for (int p = 0; p < n; ++p) cv->rows[p].push_back({cv->P[p][0], cplx(1.0)});
    } else {
        Word w2p(w2.begin(), w2.end() - 1);
        int x = w2.back();
        auto inner = conversion(S, w1, w2p);
        auto T2p = trees(S, w2p);
        for (int p = 0; p < n; ++p) {
            auto [t1, t2, c, nu] = cv->P[p];
            int c1 = T1->root[t1];
            int t2p = T2->pre[t2], c2 = T2->root[t2], beta = T2->vtx[t2];
            int c2p = T2p->root[t2p];
            const FBlock* fb = S.fblock(c1, c2p, x, c);
            if (!fb) throw std::logic_error("missing F block");
            int col = fb->col_ix.at({c2, beta, nu});
            std::map<int, cplx> acc;
            for (size_t r = 0; r < fb->rows.size(); ++r) {
                cplx coef = fb->Minv(col, static_cast<long>(r));
                if (coef == cplx(0.0)) continue;
                auto [e, al, bp] = fb->rows[r];
                auto it = inner->Pix.find({t1, t2p, e, al});
                if (it == inner->Pix.end()) continue;
                for (const auto& [lp, v] : inner->rows[it->second]) {
                    int l = TL->index.at({lp, c, bp});
                    acc[l] += coef * v;
                }
            }
            for (const auto& [l, v] : acc)
                if (v != cplx(0.0)) cv->rows[p].push_back({l, v});
        }
    }
    cv->C = Mat::Zero(n, n);
    for (int p = 0; p < n; ++p)
        for (const auto& [l, v] : cv->rows[p]) cv->C(p, l) = v;
    cv->B = cv->C.partialPivLu().inverse();
    std::lock_guard<std::mutex> lk(EC.mu);
    return EC.conv.emplace(key, cv).first->second;
}

std::shared_ptr<const ActV> action_matrix(const Spec& S, int g, const Word& w) {
    EngineCache& EC = *S.cache.p;
    auto key = std::make_pair(g, w);
    {
        std::lock_guard<std::mutex> lk(EC.mu);
        auto it = EC.actv.find(key);
        if (it != EC.actv.end()) return it->second;
    }
    auto av = std::make_shared<ActV>();
    auto T = trees(S, w);
    Word gw = S.act_word(g, w);
    auto Tg = trees(S, gw);
    av->V = Mat::Zero(T->size(), Tg->size());
    if (w.empty()) {
        av->V(0, 0) = 1.0;
    } else {
        Word p(w.begin(), w.end() - 1);
        auto Vp = action_matrix(S, g, p);
        int x = w.back();
        for (int k = 0; k < T->size(); ++k) {
            int pk = T->pre[k], c = T->root[k], a = T->vtx[k];
            int y = T->prefix->root[pk];
            Mat Ub = S.Ublock(g, y, x, c);
            for (int pk2 = 0; pk2 < Vp->V.cols(); ++pk2) {
                cplx v = Vp->V(pk, pk2);
                if (v == cplx(0.0)) continue;
                for (int a2 = 0; a2 < Ub.cols(); ++a2) {
                    int k2 = Tg->index.at({pk2, S.act(g, c), a2});
                    av->V(k, k2) += v * Ub(a, a2);
                }
            }
        }
    }
    av->Vinv = av->V.partialPivLu().inverse();
    std::lock_guard<std::mutex> lk(EC.mu);
    return EC.actv.emplace(key, av).first->second;
}

}  // namespace

// ---------------------------------------------------------------- morphisms

Morphism::Morphism(const Spec& S, Obj s, Obj t) : cat(&S), src(std::move(s)), tgt(std::move(t)) {
    M = Mat::Zero(basis_dim(S, tgt), basis_dim(S, src));
}

Morphism::Morphism(const Spec& S, Obj s, Obj t, Mat m) : cat(&S), src(std::move(s)), tgt(std::move(t)), M(std::move(m)) {
    if (M.rows() != basis_dim(S, tgt) || M.cols() != basis_dim(S, src))
        throw std::invalid_argument("morphism block shape does not match hom-space dimensions");
}

static void same_shape(const Morphism& a, const Morphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) throw std::invalid_argument("morphism shape mismatch");
}

Morphism Morphism::operator+(const Morphism& o) const {
    same_shape(*this, o);
    Morphism r = *this;
    r.M += o.M;
    return r;
}
Morphism Morphism::operator-(const Morphism& o) const {
    same_shape(*this, o);
    Morphism r = *this;
    r.M -= o.M;
    return r;
}
Morphism Morphism::operator*(cplx c) const {
    Morphism r = *this;
    r.M *= c;
    return r;
}
Morphism& Morphism::operator+=(const Morphism& o) {
    same_shape(*this, o);
    M += o.M;
    return *this;
}

Mat Morphism::block(int j, int i) const {
    auto ot = offsets(*cat, tgt), os = offsets(*cat, src);
    return M.block(ot[j], os[i], ot[j + 1] - ot[j], os[i + 1] - os[i]);
}

void Morphism::set_block(int j, int i, const Mat& b) {
    auto ot = offsets(*cat, tgt), os = offsets(*cat, src);
    M.block(ot[j], os[i], ot[j + 1] - ot[j], os[i + 1] - os[i]) = b;
}

double dist(const Morphism& a, const Morphism& b) {
    if (a.src != b.src || a.tgt != b.tgt) return std::numeric_limits<double>::infinity();
    if (a.M.size() == 0) return 0.0;
    return (a.M - b.M).cwiseAbs().maxCoeff();
}

Morphism identity(const Spec& S, const Obj& X) {
    int n = basis_dim(S, X);
    return Morphism(S, X, X, Mat::Identity(n, n));
}

Morphism compose(const Morphism& f, const Morphism& h) {
    if (f.src != h.tgt) throw std::invalid_argument("compose: source/target mismatch");
    return Morphism(*f.cat, h.src, f.tgt, f.M * h.M);
}

Morphism compose(const std::vector<Morphism>& fs) {
    Morphism r = fs.back();
    for (int i = static_cast<int>(fs.size()) - 2; i >= 0; --i) r = compose(fs[i], r);
    return r;
}

Morphism tensor(const Morphism& f, const Morphism& h) {
    const Spec& S = *f.cat;
    Obj src = otimes(f.src, h.src), tgt = otimes(f.tgt, h.tgt);
    Morphism out(S, src, tgt);
    auto ofs = offsets(S, f.src), oft = offsets(S, f.tgt), ohs = offsets(S, h.src), oht = offsets(S, h.tgt);
    auto osrc = offsets(S, src), otgt = offsets(S, tgt);
    const int nhs = static_cast<int>(h.src.size()), nht = static_cast<int>(h.tgt.size());
    for (size_t i1 = 0; i1 < f.src.size(); ++i1)
        for (size_t j1 = 0; j1 < f.tgt.size(); ++j1) {
            auto Mf = f.M.block(oft[j1], ofs[i1], oft[j1 + 1] - oft[j1], ofs[i1 + 1] - ofs[i1]);
            if (Mf.size() == 0 || Mf.isZero(0.0)) continue;
            for (int i2 = 0; i2 < nhs; ++i2)
                for (int j2 = 0; j2 < nht; ++j2) {
                    auto Mh = h.M.block(oht[j2], ohs[i2], oht[j2 + 1] - oht[j2], ohs[i2 + 1] - ohs[i2]);
                    if (Mh.size() == 0 || Mh.isZero(0.0)) continue;
                    auto cs = conversion(S, f.src.s[i1], h.src.s[i2]);
                    auto ct = conversion(S, f.tgt.s[j1], h.tgt.s[j2]);
                    const int ns = static_cast<int>(cs->P.size()), nt = static_cast<int>(ct->P.size());
                    Mat MP = Mat::Zero(nt, ns);
                    for (int q = 0; q < nt; ++q) {
                        const auto& Q = ct->P[q];
                        for (int p = 0; p < ns; ++p) {
                            const auto& P = cs->P[p];
                            if (P[2] != Q[2] || P[3] != Q[3]) continue;
                            MP(q, p) = Mf(Q[0], P[0]) * Mh(Q[1], P[1]);
                        }
                    }
                    Mat ML = ct->C.transpose() * MP * cs->B.transpose();
                    int is = static_cast<int>(i1) * nhs + i2, jt = static_cast<int>(j1) * nht + j2;
                    out.M.block(otgt[jt], osrc[is], ML.rows(), ML.cols()) += ML;
                }
        }
    return out;
}

Morphism tensor(const std::vector<Morphism>& fs) {
    Morphism r = fs.front();
    for (size_t i = 1; i < fs.size(); ++i) r = tensor(r, fs[i]);
    return r;
}

Morphism adjoint(const Morphism& f) { return Morphism(*f.cat, f.tgt, f.src, f.M.adjoint()); }

Morphism inverse(const Morphism& f) {
    if (f.M.rows() != f.M.cols()) throw std::invalid_argument("inverse: morphism is not square");
    Eigen::FullPivLU<Mat> lu(f.M);
    if (!lu.isInvertible()) throw std::domain_error("inverse: singular morphism");
    return Morphism(*f.cat, f.tgt, f.src, lu.inverse());
}

Morphism direct_sum(const Morphism& f, const Morphism& h) {
    const Spec& S = *f.cat;
    Morphism r(S, oplus(f.src, h.src), oplus(f.tgt, h.tgt));
    r.M.topLeftCorner(f.M.rows(), f.M.cols()) = f.M;
    r.M.bottomRightCorner(h.M.rows(), h.M.cols()) = h.M;
    return r;
}

Morphism inclusion(const Spec& S, const Obj& X, int i) {
    Morphism r(S, Obj::word(X.s[i]), X);
    auto off = offsets(S, X);
    int n = off[i + 1] - off[i];
    r.M.block(off[i], 0, n, n).setIdentity();
    return r;
}

Morphism projection(const Spec& S, const Obj& X, int i) {
    Morphism r(S, X, Obj::word(X.s[i]));
    auto off = offsets(S, X);
    int n = off[i + 1] - off[i];
    r.M.block(0, off[i], n, n).setIdentity();
    return r;
}

Morphism restrict(const Morphism& f, const std::vector<int>& tgt_idx, const std::vector<int>& src_idx) {
    const Spec& S = *f.cat;
    Obj s, t;
    for (int i : src_idx) s.s.push_back(f.src.s[i]);
    for (int j : tgt_idx) t.s.push_back(f.tgt.s[j]);
    Morphism r(S, s, t);
    for (size_t a = 0; a < tgt_idx.size(); ++a)
        for (size_t b = 0; b < src_idx.size(); ++b)
            r.set_block(static_cast<int>(a), static_cast<int>(b), f.block(tgt_idx[a], src_idx[b]));
    return r;
}

Morphism summand_permutation(const Spec& S, const Obj& X, const std::vector<int>& perm) {
    Obj Y;
    for (int k : perm) Y.s.push_back(X.s[k]);
    Morphism r(S, X, Y);
    auto ox = offsets(S, X), oy = offsets(S, Y);
    for (size_t k = 0; k < perm.size(); ++k) {
        int n = oy[k + 1] - oy[k];
        r.M.block(oy[k], ox[perm[k]], n, n).setIdentity();
    }
    return r;
}

std::vector<Morphism> hom_basis(const Spec& S, const Obj& src, const Obj& tgt) {
    std::vector<Morphism> out;
    auto os = offsets(S, src), ot = offsets(S, tgt);
    for (size_t i = 0; i < src.size(); ++i) {
        auto Ts = trees(S, src.s[i]);
        for (size_t j = 0; j < tgt.size(); ++j) {
            auto Tt = trees(S, tgt.s[j]);
            for (int k = 0; k < Tt->size(); ++k)
                for (int l = 0; l < Ts->size(); ++l) {
                    if (Tt->root[k] != Ts->root[l]) continue;
                    Morphism m(S, src, tgt);
                    m.M(ot[j] + k, os[i] + l) = 1.0;
                    out.push_back(std::move(m));
                }
        }
    }
    return out;
}

Morphism splitting(const Spec& S, int a, int b, int c, int mu) {
    Morphism r(S, Obj::simple(c), Obj::word({a, b}));
    auto T = trees(S, {a, b});
    r.M(T->index.at({0, c, mu}), 0) = 1.0;
    return r;
}

Morphism fusion(const Spec& S, int a, int b, int c, int mu) {
    Morphism r(S, Obj::word({a, b}), Obj::simple(c));
    auto T = trees(S, {a, b});
    r.M(0, T->index.at({0, c, mu})) = 1.0;
    return r;
}

// ---------------------------------------------------------------- braiding

namespace {

Morphism braid_word(const Spec& S, const Word& lam, const Word& mu);

Morphism braid_elementary(const Spec& S, int a, int b) {
    int ab = S.act(S.grade(a), b);
    auto Ts = trees(S, {a, b}), Tt = trees(S, {ab, a});
    Morphism r(S, Obj::word({a, b}), Obj::word({ab, a}));
    for (int c = 0; c < S.rank(); ++c) {
        int n = S.Nabc(a, b, c);
        if (!n) continue;
        Mat R = S.Rblock(a, b, c);
        for (int al = 0; al < n; ++al)
            for (int be = 0; be < R.cols(); ++be) r.M(Tt->index.at({0, c, be}), Ts->index.at({0, c, al})) = R(al, be);
    }
    return r;
}

Morphism braid_word_uncached(const Spec& S, const Word& lam, const Word& mu) {
    if (lam.empty() || mu.empty()) {
        Word w = lam;
        w.insert(w.end(), mu.begin(), mu.end());
        return identity(S, Obj::word(w));
    }
    if (lam.size() == 1 && mu.size() == 1) return braid_elementary(S, lam[0], mu[0]);
    if (lam.size() == 1) {
        // b_{a, mu' x} = (id_{^a mu'} (x) b_{a,x}) o (b_{a,mu'} (x) id_x)
        Word mp(mu.begin(), mu.end() - 1);
        int x = mu.back();
        int g = S.grade(lam[0]);
        Morphism first = tensor(braid_word(S, lam, mp), identity(S, Obj::simple(x)));
        Morphism second = tensor(identity(S, Obj::word(S.act_word(g, mp))), braid_word(S, lam, {x}));
        return compose(second, first);
    }
    // b_{lam' y, mu} = (b_{lam', ^y mu} (x) id_y) o (id_{lam'} (x) b_{y, mu})
    Word lp(lam.begin(), lam.end() - 1);
    int y = lam.back();
    Word ymu = S.act_word(S.grade(y), mu);
    Morphism first = tensor(identity(S, Obj::word(lp)), braid_word(S, {y}, mu));
    Morphism second = tensor(braid_word(S, lp, ymu), identity(S, Obj::simple(y)));
    return compose(second, first);
}

Morphism braid_word(const Spec& S, const Word& lam, const Word& mu) {
    EngineCache& EC = *S.cache.p;
    auto key = std::make_pair(lam, mu);
    std::shared_ptr<const Mat> hit;
    {
        std::lock_guard<std::mutex> lk(EC.mu);
        auto it = EC.braid.find(key);
        if (it != EC.braid.end()) hit = it->second;
    }
    if (hit) {
        Word t = S.act_word(S.word_grade(lam), mu);
        t.insert(t.end(), lam.begin(), lam.end());
        Word s = lam;
        s.insert(s.end(), mu.begin(), mu.end());
        return Morphism(S, Obj::word(s), Obj::word(t), *hit);
    }
    Morphism b = braid_word_uncached(S, lam, mu);
    std::lock_guard<std::mutex> lk(EC.mu);
    EC.braid.emplace(key, std::make_shared<Mat>(b.M));
    return b;
}

int homogeneous_grade(const Spec& S, const Obj& lam) {
    if (lam.s.empty()) return S.group.identity;
    int g = S.word_grade(lam.s[0]);
    for (const auto& w : lam.s)
        if (S.word_grade(w) != g) throw std::invalid_argument("braid: first argument is not homogeneous");
    return g;
}

Morphism crossing(const Spec& S, const Obj& lam, const Obj& mu, int g, bool only_g) {
    Obj src = otimes(lam, mu), tgt = otimes(act(S, g, mu), lam);
    Morphism r(S, src, tgt);
    const int nl = static_cast<int>(lam.size()), nm = static_cast<int>(mu.size());
    for (int i = 0; i < nl; ++i) {
        if (only_g && S.word_grade(lam.s[i]) != g) continue;
        for (int j = 0; j < nm; ++j) r.set_block(j * nl + i, i * nm + j, braid_word(S, lam.s[i], mu.s[j]).M);
    }
    return r;
}

Morphism crossing_inv(const Spec& S, const Obj& lam, const Obj& mu, int g, bool only_g) {
    Obj tgt = otimes(lam, mu), src = otimes(act(S, g, mu), lam);
    Morphism r(S, src, tgt);
    const int nl = static_cast<int>(lam.size()), nm = static_cast<int>(mu.size());
    for (int i = 0; i < nl; ++i) {
        if (only_g && S.word_grade(lam.s[i]) != g) continue;
        for (int j = 0; j < nm; ++j) {
            Mat b = braid_word(S, lam.s[i], mu.s[j]).M;
            r.set_block(i * nm + j, j * nl + i, b.partialPivLu().inverse());
        }
    }
    return r;
}

}  // namespace

Morphism braid(const Spec& S, const Obj& lam, const Obj& mu) {
    return crossing(S, lam, mu, homogeneous_grade(S, lam), false);
}

Morphism braid_inv(const Spec& S, const Obj& lam, const Obj& mu) {
    return crossing_inv(S, lam, mu, homogeneous_grade(S, lam), false);
}

Morphism dashed(const Spec& S, const Obj& lam, const Obj& mu, int g) { return crossing(S, lam, mu, g, true); }

Morphism dashed_inv(const Spec& S, const Obj& lam, const Obj& mu, int g) { return crossing_inv(S, lam, mu, g, true); }

// ---------------------------------------------------------------- action

Morphism act(int g, const Morphism& f) {
    const Spec& S = *f.cat;
    Morphism r(S, act(S, g, f.src), act(S, g, f.tgt));
    for (size_t j = 0; j < f.tgt.size(); ++j) {
        auto Vt = action_matrix(S, g, f.tgt.s[j]);
        for (size_t i = 0; i < f.src.size(); ++i) {
            Mat b = f.block(static_cast<int>(j), static_cast<int>(i));
            if (b.size() == 0 || b.isZero(0.0)) continue;
            auto Vs = action_matrix(S, g, f.src.s[i]);
            r.set_block(static_cast<int>(j), static_cast<int>(i), Vt->V.transpose() * b * Vs->Vinv.transpose());
        }
    }
    return r;
}

Mat action_basis(const Spec& S, int g, const Word& w) { return action_matrix(S, g, w)->V; }

// ---------------------------------------------------------------- duality

namespace {

int unit_tree(const Spec& S, const Word& w) {
    auto T = trees(S, w);
    for (int k = 0; k < T->size(); ++k)
        if (T->root[k] == S.unit) return k;
    throw std::logic_error("no unit channel");
}

cplx ev_coeff(const Spec& S, int x) {
    int xb = S.dual(x);
    const FBlock* fb = S.fblock(x, xb, x, x);
    cplx f11 = fb->M(fb->row_ix.at({S.unit, 0, 0}), fb->col_ix.at({S.unit, 0, 0}));
    return 1.0 / (std::sqrt(S.qdim(x)) * f11);
}

Morphism coev_word(const Spec& S, const Word& w) {
    if (w.empty()) return identity(S, Obj::unit());
    Word wp(w.begin(), w.end() - 1);
    int x = w.back();
    Morphism cx(S, Obj::unit(), Obj::word({x, S.dual(x)}));
    cx.M(unit_tree(S, {x, S.dual(x)}), 0) = std::sqrt(S.qdim(x));
    if (wp.empty()) return cx;
    Morphism inner = coev_word(S, wp);
    Morphism mid = tensor({identity(S, Obj::word(wp)), cx, identity(S, Obj::word(S.dual_word(wp)))});
    return compose(mid, inner);
}

Morphism ev_word(const Spec& S, const Word& w) {
    if (w.empty()) return identity(S, Obj::unit());
    Word wp(w.begin(), w.end() - 1);
    int x = w.back();
    Morphism ex(S, Obj::word({S.dual(x), x}), Obj::unit());
    ex.M(0, unit_tree(S, {S.dual(x), x})) = ev_coeff(S, x);
    if (wp.empty()) return ex;
    Morphism inner = ev_word(S, wp);
    Morphism mid = tensor({identity(S, Obj::simple(S.dual(x))), inner, identity(S, Obj::simple(x))});
    return compose(ex, mid);
}

Morphism evr_word(const Spec& S, const Word& w) {
    if (w.empty()) return identity(S, Obj::unit());
    Word wp(w.begin(), w.end() - 1);
    int x = w.back();
    int xb = S.dual(x);
    Morphism ex(S, Obj::word({x, xb}), Obj::unit());
    ex.M(0, unit_tree(S, {x, xb})) = S.pivotal(x) * ev_coeff(S, xb);
    if (wp.empty()) return ex;
    Morphism inner = evr_word(S, wp);
    Morphism mid = tensor({identity(S, Obj::word(wp)), ex, identity(S, Obj::word(S.dual_word(wp)))});
    return compose(inner, mid);
}

Morphism coevr_word(const Spec& S, const Word& w) {
    if (w.empty()) return identity(S, Obj::unit());
    Word wp(w.begin(), w.end() - 1);
    int x = w.back();
    int xb = S.dual(x);
    Morphism cx(S, Obj::unit(), Obj::word({xb, x}));
    cx.M(unit_tree(S, {xb, x}), 0) = std::sqrt(S.qdim(xb)) / S.pivotal(x);
    if (wp.empty()) return cx;
    Morphism inner = coevr_word(S, wp);
    Morphism mid = tensor({identity(S, Obj::simple(xb)), inner, identity(S, Obj::simple(x))});
    return compose(mid, cx);
}

template <class WordFn>
Morphism diag_duality(const Spec& S, const Obj& X, bool dual_first, bool to_unit, WordFn fn) {
    Obj Xd = dual(S, X);
    Obj pair = dual_first ? otimes(Xd, X) : otimes(X, Xd);
    Morphism r = to_unit ? Morphism(S, pair, Obj::unit()) : Morphism(S, Obj::unit(), pair);
    const int n = static_cast<int>(X.size());
    for (int i = 0; i < n; ++i) {
        Morphism m = fn(S, X.s[i]);
        int idx = i * n + i;
        if (to_unit)
            r.set_block(0, idx, m.M);
        else
            r.set_block(idx, 0, m.M);
    }
    return r;
}

}  // namespace

Morphism ev(const Spec& S, const Obj& X) { return diag_duality(S, X, true, true, ev_word); }
Morphism coev(const Spec& S, const Obj& X) { return diag_duality(S, X, false, false, coev_word); }
Morphism ev_r(const Spec& S, const Obj& X) { return diag_duality(S, X, false, true, evr_word); }
Morphism coev_r(const Spec& S, const Obj& X) { return diag_duality(S, X, true, false, coevr_word); }

cplx trace(const Morphism& f) {
    if (f.src != f.tgt) throw std::invalid_argument("trace of a non-endomorphism");
    const Spec& S = *f.cat;
    auto r = roots(S, f.src);
    cplx t = 0.0;
    for (size_t k = 0; k < r.size(); ++k) t += S.qdim(r[k]) * f.M(static_cast<long>(k), static_cast<long>(k));
    return t;
}

cplx trace_left(const Morphism& f) {
    const Spec& S = *f.cat;
    Obj Xd = dual(S, f.src);
    Morphism m = compose({ev(S, f.src), tensor(identity(S, Xd), f), coev_r(S, f.src)});
    return m.M(0, 0);
}

cplx trace_right(const Morphism& f) {
    const Spec& S = *f.cat;
    Obj Xd = dual(S, f.src);
    Morphism m = compose({ev_r(S, f.src), tensor(f, identity(S, Xd)), coev(S, f.src)});
    return m.M(0, 0);
}

cplx pairing(const Morphism& fp, const Morphism& f) {
    const Spec& S = *f.cat;
    cplx d = trace(identity(S, f.src));
    if (std::abs(d) < 1e-300) throw std::domain_error("pairing on a zero-dimensional object");
    return trace(compose(fp, f)) / d;
}

std::vector<Morphism> dual_basis(const std::vector<Morphism>& basis) {
    if (basis.empty()) return {};
    const Spec& S = *basis[0].cat;
    auto hs = hom_basis(S, basis[0].tgt, basis[0].src);
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(hs.size()) != n) throw std::invalid_argument("dual_basis: input is not a basis");
    Mat G(n, n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) G(k, j) = pairing(hs[k], basis[j]);
    Eigen::JacobiSVD<Mat> svd(G);
    double smax = svd.singularValues()(0), smin = svd.singularValues()(n - 1);
    if (smin <= 0.0 || smax / smin > 1e12) throw std::domain_error("dual_basis: singular Gram matrix");
    Mat X = G.inverse();  // X G = I
    std::vector<Morphism> out;
    for (int i = 0; i < n; ++i) {
        Morphism m(S, basis[0].tgt, basis[0].src);
        for (int k = 0; k < n; ++k) m.M += X(i, k) * hs[k].M;
        out.push_back(std::move(m));
    }
    return out;
}

Morphism twist(const Spec& S, int x) {
    int xb = S.dual(x);
    Obj X = Obj::simple(x);
    Morphism a = tensor(identity(S, X), coev(S, X));
    Morphism b = tensor(braid(S, X, X), identity(S, Obj::simple(xb)));
    Morphism c = tensor(identity(S, Obj::simple(S.act(S.grade(x), x))), ev(S, Obj::simple(xb)));
    return compose({c, b, a}) * S.pivotal(x);
}

// ---------------------------------------------------------------- conjugation

Word conj_word(const Spec& S, const Word& w) {
    Word out(w.size());
    int g = S.group.identity;  // grade of the suffix w[k+1..]
    for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
        out[k] = S.act(S.group.inv[g], S.dual(w[k]));
        g = S.group(S.grade(w[k]), g);
    }
    return out;
}

namespace {

// X(l): 1 -> l conj(l)
Morphism conj_cup(const Spec& S, const Word& l) {
    if (l.empty()) return identity(S, Obj::unit());
    Word rest(l.begin() + 1, l.end());
    int l1 = l[0];
    int gr = S.word_grade(rest);
    int nu = S.act(S.group.inv[gr], S.dual(l1));
    Morphism inner = tensor(coev(S, Obj::simple(l1)), conj_cup(S, rest));
    Morphism bi = tensor({identity(S, Obj::simple(l1)), braid_inv(S, Obj::word(rest), Obj::simple(nu)),
                          identity(S, Obj::word(conj_word(S, rest)))});
    return compose(bi, inner);
}

// Y(m): conj(m) m -> 1
Morphism conj_cap(const Spec& S, const Word& m) {
    if (m.empty()) return identity(S, Obj::unit());
    Word rest(m.begin() + 1, m.end());
    int m1 = m[0];
    int gr = S.word_grade(rest);
    int nu1 = S.act(S.group.inv[gr], m1);
    Word D = conj_word(S, rest);
    Morphism first = tensor({identity(S, Obj::simple(S.dual(nu1))), braid(S, Obj::word(D), Obj::simple(m1)),
                             identity(S, Obj::word(rest))});
    Morphism second = tensor(ev(S, Obj::simple(nu1)), conj_cap(S, rest));
    return compose(second, first);
}

}  // namespace

Morphism conjugate(const Morphism& f) {
    const Spec& S = *f.cat;
    if (f.src.size() != 1 || f.tgt.size() != 1) throw std::invalid_argument("conjugate: arguments must be single words");
    const Word& l = f.src.s[0];
    const Word& m = f.tgt.s[0];
    Obj cl = Obj::word(conj_word(S, l)), cm = Obj::word(conj_word(S, m));
    Morphism a = tensor(identity(S, cm), conj_cup(S, l));
    Morphism b = tensor({identity(S, cm), f, identity(S, cl)});
    Morphism c = tensor(conj_cap(S, m), identity(S, cl));
    return compose({c, b, a});
}

}  // namespace gcross
