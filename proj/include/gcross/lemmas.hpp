#pragma once

#include <cstdint>
#include <random>

#include "gcross/alpha.hpp"

namespace gcross {

// Complex normal combination of hom_basis(src, tgt); zero when the space is.
Morphism random_morphism(const Spec& S, const Obj& src, const Obj& tgt, std::mt19937_64& rng);

// Each returns the max-abs residual of one seeded random instance.
double conjugation_composition(const Spec& S, std::mt19937_64& rng);
double conjugation_monoidal(const Spec& S, std::mt19937_64& rng);
double conjugation_star(const Spec& S, std::mt19937_64& rng);  // meaningful for unitary data only
double conjugation_reverse_braiding(const Spec& S, std::mt19937_64& rng);
double crossing_rotation(const Spec& S, std::mt19937_64& rng);
// Both framed kink cancellations on the simple lam.
double framed_reidemeister(const Spec& S, int lam);

// One-sided modules over a neutral algebra: left A X -> X, right X A -> X.
struct LeftModule {
    Obj X;
    Morphism act;
};
struct RightModule {
    Obj X;
    Morphism act;
};
LeftModule free_left(const Frobenius& A, const Obj& nu);    // A nu
RightModule free_right(const Frobenius& A, const Obj& nu);  // nu A
// ^g M with the action transported through z_g^{-1}.
LeftModule act_module(const Frobenius& A, int g, const LeftModule& M);
RightModule act_module(const Frobenius& A, int g, const RightModule& M);
// mu^v as a right module (left duality), rho^v as a left module (right duality).
RightModule dual_module(const LeftModule& M, const Frobenius& A);
LeftModule dual_module(const RightModule& M, const Frobenius& A);

// Idempotent on X Y cutting out X (x)_A Y from a right action on X and a left action on Y.
Morphism balance(const Frobenius& A, const Morphism& right_act, const Morphism& left_act);

// Thick crossings. Maps between relative tensor products are represented on the plain
// products, precomposed with the balancing idempotent.
// lam is homogeneous of grade g; h is the grade of the module.
Morphism thick_plus(const Frobenius& A, const Obj& lam, const LeftModule& mu);    // A lam mu -> ^g mu lam
Morphism thick_minus(const Frobenius& A, const Obj& lam, const LeftModule& mu);   // A ^h lam mu -> mu lam
Morphism thick_plus(const Frobenius& A, const RightModule& rho, const Obj& lam);  // ^g rho A lam -> lam rho
Morphism thick_minus(const Frobenius& A, const RightModule& rho, const Obj& lam); // rho A lam -> ^h lam rho
// Inverse of B on the image of the idempotent e (B = B e): B^-1 B = e and B B^-1 = id.
Morphism balanced_inverse(const Morphism& B, const Morphism& e, double tol = 1e-10);

// Identities for crossings induced by a neutral symmetric special equivariant algebra.
double alpha_braiding_compat(const Frobenius& A, std::mt19937_64& rng);
double thick_ordinary_crossing(const Frobenius& A, std::mt19937_64& rng);
double thick_arc(const Frobenius& A, std::mt19937_64& rng);
double thick_product(const Frobenius& A, std::mt19937_64& rng);
double thick_rotation(const Frobenius& A, std::mt19937_64& rng);

struct LemmaOptions {
    int instances = 100;
    std::uint64_t seed = 1;
    double tol = 1e-8;
};
// One check per identity family (max residual over the instances). Algebra-dependent
// families cycle through `algebras`; conjugation_star is skipped for non-unitary data.
Report lemma_suite(const Spec& S, const std::vector<const Frobenius*>& algebras, const LemmaOptions& opt = {});

}  // namespace gcross
