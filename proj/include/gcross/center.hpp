#pragma once

#include "gcross/alpha.hpp"

namespace gcross {

// Theta for the unit algebra: sum over lam of (lam, lam^v).
Theta longo_rehren(const NeutralDouble& nd, double tol = 1e-9);

// A (x) 1 in D(C); A must be neutral and defined over nd.C (or an identical copy).
Frobenius box_left_algebra(const Frobenius& A, const NeutralDouble& nd);

struct FullCenter {
    Frobenius prod;  // (A (x) 1) Theta_LR
    Morphism P;      // P_{A (x) 1}(Theta_LR) on prod.A
    Retract R;
    Frobenius Z;  // image subalgebra with zeta = dim A
    Report checks;
};
FullCenter full_center(const Frobenius& A, const NeutralDouble& nd, const Theta& lr, double tol = 1e-9);

// label -> multiplicity for an object made of single letters
std::map<int, int> multiplicities(const Obj& X);

struct Comparison {
    bool multiplicities_equal = false;
    bool iso_found = false;
    double residual = INFINITY;
    int attempts = 0;
    Morphism psi;  // Z -> Theta
    Report checks;
};
// Searches an isomorphism of equivariant Frobenius algebras Z -> Theta: Gauss-Newton on the
// multiplicity blocks from seeded random starts (at most max_restarts).
Comparison compare_center_theta(const Frobenius& Z, const Frobenius& Th, std::uint64_t seed = 7, double tol = 1e-8,
                                int max_restarts = 16);

struct ModularCheck {
    ModularData md;
    double zs = 0.0, zt = 0.0;  // max |ZS - SZ|, max |ZT - TZ|
};
ModularCheck modular_invariance(const Spec& C, const std::vector<std::vector<int>>& Z);

struct ModularityReport {
    cplx dim_theta;
    double global_dim = 0.0;         // dim C, all grades
    double g_times_neutral_dim = 0.0;  // |G| dim C_e (equal to dim C for faithful gradings)
    bool maximal = false;            // dim Theta == dim C
    bool has_st = false;             // trivial G: S/T commutators below are filled
    bool modular = false;
    double zs = 0.0, zt = 0.0;
    Report checks;  // only the ZS/ZT commutators are gated
};
ModularityReport modularity_report(const Theta& T, const Spec& C, double tol = 1e-9);

}  // namespace gcross
