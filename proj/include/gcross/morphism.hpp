#pragma once

#include <vector>

#include "gcross/spec.hpp"

namespace gcross {

// Formal direct sum of tensor words. An empty word is the monoidal unit.
struct Obj {
    std::vector<Word> s;

    Obj() = default;
    explicit Obj(std::vector<Word> w) : s(std::move(w)) {}
    static Obj unit() { return Obj({Word{}}); }
    static Obj word(Word w) { return Obj({std::move(w)}); }
    static Obj simple(int x) { return Obj({Word{x}}); }
    // One single-letter summand per entry.
    static Obj of_labels(const std::vector<int>& xs);

    size_t size() const { return s.size(); }
    bool operator==(const Obj& o) const { return s == o.s; }
    bool operator!=(const Obj& o) const { return s != o.s; }
};

Obj otimes(const Obj& a, const Obj& b);
Obj oplus(const Obj& a, const Obj& b);
Obj act(const Spec& S, int g, const Obj& a);
Obj dual(const Spec& S, const Obj& a);
std::string to_string(const Spec& S, const Obj& a);

// Left-combed fusion trees of a word: tree k has prefix tree pre[k] of word[0..n-1),
// root[k], and multiplicity index vtx[k] of the last vertex.
struct TreeBasis {
    Word word;
    std::vector<int> root, pre, vtx;
    std::map<std::array<int, 3>, int> index;  // (pre, root, vtx) -> k
    std::shared_ptr<const TreeBasis> prefix;
    int size() const { return static_cast<int>(root.size()); }
};

std::shared_ptr<const TreeBasis> trees(const Spec& S, const Word& w);
int basis_dim(const Spec& S, const Obj& X);
// Offsets of each summand inside the concatenated basis; last entry is the total.
std::vector<int> offsets(const Spec& S, const Obj& X);
std::vector<int> roots(const Spec& S, const Obj& X);

// Morphism in the standard basis: rows are target trees, columns source trees.
// Entries between trees with different roots are zero.
struct Morphism {
    const Spec* cat = nullptr;
    Obj src, tgt;
    Mat M;

    Morphism() = default;
    Morphism(const Spec& S, Obj s, Obj t);  // zero morphism
    Morphism(const Spec& S, Obj s, Obj t, Mat m);

    Morphism operator+(const Morphism& o) const;
    Morphism operator-(const Morphism& o) const;
    Morphism operator*(cplx c) const;
    Morphism& operator+=(const Morphism& o);
    // Block between summand i of src and summand j of tgt.
    Mat block(int j_tgt, int i_src) const;
    void set_block(int j_tgt, int i_src, const Mat& b);
    double norm() const { return M.norm(); }
};

double dist(const Morphism& a, const Morphism& b);  // max-abs difference; inf on shape mismatch
Morphism identity(const Spec& S, const Obj& X);
Morphism compose(const Morphism& f, const Morphism& h);  // f after h
Morphism tensor(const Morphism& f, const Morphism& h);
Morphism tensor(const std::vector<Morphism>& fs);
Morphism compose(const std::vector<Morphism>& fs);  // fs[0] after fs[1] after ...
Morphism adjoint(const Morphism& f);                   // blockwise conjugate transpose
Morphism inverse(const Morphism& f);                   // throws if singular
Morphism direct_sum(const Morphism& f, const Morphism& h);
Morphism inclusion(const Spec& S, const Obj& X, int i);   // X.s[i] -> X
Morphism projection(const Spec& S, const Obj& X, int i);  // X -> X.s[i]
// Restrict/re-embed a morphism to a sub-selection of summands.
Morphism restrict(const Morphism& f, const std::vector<int>& tgt_idx, const std::vector<int>& src_idx);
// Reorders summands: result.src.s[k] = X.s[perm[k]].
Morphism summand_permutation(const Spec& S, const Obj& X, const std::vector<int>& perm);
// Basis of hom(src, tgt), deterministic order.
std::vector<Morphism> hom_basis(const Spec& S, const Obj& src, const Obj& tgt);
// Vertex morphism c -> ab (splitting) or ab -> c (fusion) with multiplicity index.
Morphism splitting(const Spec& S, int a, int b, int c, int mu);
Morphism fusion(const Spec& S, int a, int b, int c, int mu);

// G-braiding b_{lam,mu}: lam mu -> (^g mu) lam for homogeneous lam of grade g.
Morphism braid(const Spec& S, const Obj& lam, const Obj& mu);
// Inverse b_{lam,mu}^{-1}: (^g mu) lam -> lam mu.
Morphism braid_inv(const Spec& S, const Obj& lam, const Obj& mu);
// Braiding restricted to the grade-g summands of lam; zero elsewhere. lam mu -> (^g mu) lam.
Morphism dashed(const Spec& S, const Obj& lam, const Obj& mu, int g);
// Inverse crossing restricted to grade-g summands of lam: (^g mu) lam -> lam mu.
Morphism dashed_inv(const Spec& S, const Obj& lam, const Obj& mu, int g);

Morphism act(int g, const Morphism& f);
// g|T> = sum_T' V(T, T') |T'> for the trees of w and of g.w.
Mat action_basis(const Spec& S, int g, const Word& w);

// Duality. ev: X^v X -> 1, coev: 1 -> X X^v, ev_r: X X^v -> 1, coev_r: 1 -> X^v X.
Morphism ev(const Spec& S, const Obj& X);
Morphism coev(const Spec& S, const Obj& X);
Morphism ev_r(const Spec& S, const Obj& X);
Morphism coev_r(const Spec& S, const Obj& X);

cplx trace(const Morphism& f);             // sum_c d_c Tr(block_c)
cplx trace_left(const Morphism& f);        // evaluated as a diagram with ev, coev_r
cplx trace_right(const Morphism& f);       // evaluated as a diagram with ev_r, coev
cplx pairing(const Morphism& fp, const Morphism& f);  // d^{-1} tr(fp f) for simple source
std::vector<Morphism> dual_basis(const std::vector<Morphism>& basis);

Morphism twist(const Spec& S, int x);  // theta_x : x -> ^x x

// Conjugate of a morphism between single words (see conjugate_source/target for its shape).
Morphism conjugate(const Morphism& f);
// Word of the conjugate: (^{bar(l2..ln)} l1^v, ..., ln^v).
Word conj_word(const Spec& S, const Word& w);

}  // namespace gcross
