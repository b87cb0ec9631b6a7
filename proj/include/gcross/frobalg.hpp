#pragma once

#include <map>

#include "gcross/morphism.hpp"

namespace gcross {

// (A, m, eta, Delta, eps, z). z[g]: ^g A -> A; an H-equivariant algebra lists only g in H.
struct Frobenius {
    const Spec* cat = nullptr;
    Obj A;
    Morphism m, eta, delta, eps;
    std::map<int, Morphism> z;
    std::string name;

    cplx dim() const;
    bool neutral() const;
    const Morphism& zg(int g) const;
};

Frobenius unit_algebra(const Spec& S);
// Group algebra on invertible labels closed under fusion; m = 1, Delta = |L|^{-1} sum, eps = |L| at 1.
// z_g is the identity for every g, which requires perm to fix the labels and U = 1 on their vertices.
Frobenius group_algebra(const Spec& S, const std::vector<int>& labels);

// Frobenius axioms, specialness up to scalars (noted in the report), symmetry, simplicity.
Report check_frobenius(const Frobenius& A, double tol);
Report check_equivariant(const Frobenius& A, double tol);
Report check_g_commutative(const Frobenius& A, double tol);
Report check_g_cocommutative(const Frobenius& A, double tol);
// Dimension of End_{A-A}(A): rank of the bimodule-averaging map on End_C(A).
int bimodule_endomorphism_rank(const Frobenius& A, double tol);

Frobenius product_algebra(const Frobenius& A, const Frobenius& B);

// beta with m Delta = beta id.
cplx special_scalar(const Frobenius& A);

// Equivariant left-central idempotent on A lam (normalized by 1/beta); zlam[g]: ^g lam -> lam.
Morphism idempotent_P(const Frobenius& A, const Obj& lam, const std::map<int, Morphism>& zlam);
Morphism idempotent_P(const Frobenius& A);  // lam = 1
// Requires A neutral. Defined for any lam.
Morphism idempotent_Ptilde(const Frobenius& A, const Obj& lam);

// Trivial equivariant structure on the unit / on any object whose words are fixed by the action
// with trivial U on their trees.
std::map<int, Morphism> trivial_equivariance(const Spec& S, const Obj& X);

struct Retract {
    Obj B;
    Morphism s, r;  // r s = id_B, s r = p
};
// Rank factorization per root channel via SVD; threshold tol * (largest singular value).
Retract split(const Morphism& p, double tol);

Frobenius subalgebra(const Frobenius& A, const Retract& R, cplx zeta);
Frobenius split_idempotent(const Frobenius& A, const Morphism& p, cplx zeta, double tol);

// ind_H^G(A) for an H-equivariant A; coset representatives are the smallest element id per coset.
Frobenius induce_algebra(const Frobenius& A, const std::vector<int>& H);

}  // namespace gcross

namespace gcross {

// Algebra descriptions: {"kind":"unit"}, {"kind":"group_algebra","labels":[...]},
// {"kind":"induced","subgroup":[...],"base":{...}}, {"kind":"product","factors":[{...},{...}]}.
Frobenius parse_algebra(const Spec& S, const std::string& text);
Frobenius load_algebra(const Spec& S, const std::string& path);

}  // namespace gcross
