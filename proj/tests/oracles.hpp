#pragma once

// Brute-force reference computations shared by the unit tests and the acceptance runner.
// None of them go through local_homs / J_map / z_matrix.

#include <algorithm>

#include "support.hpp"

namespace testsupport {

inline gcross::Mat stack(const std::vector<gcross::Mat>& cols) {
    if (cols.empty()) return {};
    gcross::Mat K(cols[0].size(), static_cast<long>(cols.size()));
    for (size_t k = 0; k < cols.size(); ++k) K.col(static_cast<long>(k)) = cols[k].reshaped();
    return K;
}

inline long rank_of(const gcross::Mat& K, double tol = 1e-9) {
    if (K.size() == 0) return 0;
    return static_cast<long>(K.cols()) - nullity(K, static_cast<int>(K.cols()), tol);
}

// dim hom_{A-A}(alpha+(a), alpha-(b)) as the nullspace of the intertwining equations, with both
// bimodule structures written out directly from the braiding (trivial grading only).
inline int intertwiner_dim(const gcross::Frobenius& A, int a, int b) {
    using namespace gcross;
    const Spec& S = *A.cat;
    Obj La = Obj::simple(a), Lb = Obj::simple(b);
    Morphism iA = identity(S, A.A);
    auto left = [&](const Obj& L) { return tensor(A.m, identity(S, L)); };
    Morphism right_plus = compose(tensor(A.m, identity(S, La)), tensor(iA, braid(S, La, A.A)));
    Morphism right_minus = compose(tensor(A.m, identity(S, Lb)), tensor(iA, braid_inv(S, A.A, Lb)));
    auto basis = hom_basis(S, otimes(A.A, La), otimes(A.A, Lb));
    const int n = static_cast<int>(basis.size());
    if (!n) return 0;
    std::vector<Mat> cols;
    for (const auto& f : basis) {
        Mat l = (compose(f, left(La)) - compose(left(Lb), tensor(iA, f))).M;
        Mat r = (compose(f, right_plus) - compose(right_minus, tensor(f, iA))).M;
        Mat v(l.size() + r.size(), 1);
        v << l.reshaped(), r.reshaped();
        cols.push_back(v);
    }
    return nullity(stack(cols), n);
}

// rank of f -> Ptilde(b) f on hom(a, A b)
inline int ptilde_rank(const gcross::Frobenius& A, int a, int b) {
    using namespace gcross;
    const Spec& S = *A.cat;
    Morphism Pt = idempotent_Ptilde(A, Obj::simple(b));
    std::vector<Mat> cols;
    for (const auto& f : hom_basis(S, Obj::simple(a), otimes(A.A, Obj::simple(b)))) cols.push_back(compose(Pt, f).M);
    return static_cast<int>(rank_of(stack(cols)));
}

template <class F>
std::vector<std::vector<int>> table(int n, F&& entry) {
    std::vector<std::vector<int>> Z(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) Z[a][b] = entry(a, b);
    return Z;
}

inline std::vector<std::vector<int>> intertwiner_z(const gcross::Frobenius& A) {
    return table(A.cat->rank(), [&](int a, int b) { return intertwiner_dim(A, a, b); });
}
inline std::vector<std::vector<int>> ptilde_z(const gcross::Frobenius& A) {
    return table(A.cat->rank(), [&](int a, int b) { return ptilde_rank(A, a, b); });
}
inline std::vector<std::vector<int>> identity_z(int n) {
    return table(n, [](int a, int b) { return a == b ? 1 : 0; });
}

// Dimension of the left center, brute force: per simple summand x of A, the maps f: x -> A with
// m (f (x) 1) = m c_{A,A} (f (x) 1). Trivial grading only.
inline int left_center_dim(const gcross::Frobenius& A) {
    using namespace gcross;
    const Spec& S = *A.cat;
    Morphism c = braid(S, A.A, A.A);
    Morphism iA = identity(S, A.A);
    int total = 0;
    std::vector<Word> seen;
    for (const auto& w : A.A.s) {
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
        seen.push_back(w);
        auto basis = hom_basis(S, Obj::word(w), A.A);
        std::vector<Mat> cols;
        for (const auto& f : basis) {
            Morphism fx = tensor(f, iA);
            cols.push_back((compose(A.m, fx) - compose({A.m, c, fx})).M);
        }
        total += nullity(stack(cols), static_cast<int>(basis.size()));
    }
    return total;
}

}  // namespace testsupport
