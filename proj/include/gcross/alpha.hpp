#pragma once

#include <cstdint>

#include "gcross/constructions.hpp"
#include "gcross/frobalg.hpp"

namespace gcross {

// A-A bimodule structure on X: left A X -> X, right X A -> X.
struct Bimodule {
    const Frobenius* A = nullptr;
    Obj X;
    Morphism left, right;
};

// alpha^+(lam) uses the crossing of lam over A followed by z; alpha^-(lam) the inverse crossing.
// Both live on the object A lam. A must be neutral.
Bimodule alpha_bimodule(const Frobenius& A, const Obj& lam, int sign);
Report check_bimodule(const Bimodule& M, double tol);

// Retract of alpha(lam) (x) alpha(mu) onto A lam mu realizing the tensor product over A.
struct TensorSplit {
    Morphism s, r;  // r: A lam A mu -> A lam mu, s the section; s r is the balancing idempotent
};
TensorSplit alpha_tensor_split(const Frobenius& A, const Obj& lam, const Obj& mu, int sign);

cplx bimodule_trace(const Frobenius& A, const Morphism& f);  // tr / dim A

// Basis of hom_{A-A}(X, Y) as the nullspace of the intertwining constraints.
std::vector<Morphism> bimodule_homs(const Bimodule& X, const Bimodule& Y, double tol = 1e-9);

// hom_loc(lam, A mu) = image of Ptilde(mu) in hom(lam, A mu); orthonormal basis (eta for lam = mu = 1).
std::vector<Morphism> local_homs(const Frobenius& A, int lam, int mu, double tol = 1e-9);
// f: lam -> A mu  gives  (m (x) id)(id (x) f): A lam -> A mu.
Morphism J_map(const Frobenius& A, const Morphism& f);

// Z[lam1][lam2] = dim hom_loc(lam1, A lam2) (zero across grades).
std::vector<std::vector<int>> z_matrix(const Frobenius& A, double tol = 1e-9);

struct ThetaOptions {
    // Random invertible change of the fusion bases e_i and random scalars for u_g^lam;
    // the resulting algebra must not change.
    bool regauge_vertices = false;
    // Random change of the local-hom bases; yields an isomorphic algebra (see Theta::gauge).
    bool randomize_local_basis = false;
    std::uint64_t seed = 1;
    double tol = 1e-9;
};

struct ThetaSummand {
    int lam1 = 0, lam2 = 0, l = 0;
    int dlabel = 0;  // (lam1, lam2^v) in D(C)
};

struct Theta {
    Frobenius alg;  // lives in nd.D
    std::vector<ThetaSummand> summands;
    std::vector<std::vector<int>> Z;
    // gauge[(lam1, lam2)] = G: summand c is sum_r G(r, c) of the unrandomized basis, so the
    // isomorphism from the plain Theta is multiplicity_map with G^-1 (identity without randomization)
    std::map<std::pair<int, int>, Mat> gauge;
    cplx dim_theta;
    Report checks;
};

Theta build_theta(const Frobenius& A, const NeutralDouble& nd, const ThetaOptions& opt = {});

// Morphism Theta -> Theta' acting on multiplicity spaces of summands with the same (lam1, lam2).
Morphism multiplicity_map(const Theta& T, const Theta& Tp, const std::map<std::pair<int, int>, Mat>& blocks);

// Full report on Theta: Frobenius axioms, m Delta = dim Theta, eps eta = 1, equivariance, G-commutativity.
Report check_theta(const Theta& T, double tol);
// Invariance of the Frobenius structure under an explicit isomorphism psi: A -> B.
Report check_isomorphism(const Frobenius& A, const Frobenius& B, const Morphism& psi, double tol);

}  // namespace gcross
