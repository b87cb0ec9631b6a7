#pragma once

#include <memory>

#include "gcross/morphism.hpp"

namespace gcross {

// C^rev: grades inverted, x (x) y := (^{dy} x) y, reverse braiding, same action.
// A rev vertex hom(z; x, y) is the C vertex hom(z, (^{dy} x) y).
Spec reverse_category(const Spec& C);

// C (x)_G C^rev restricted to pairs of equal grade; labels (c, d) enumerated c-major.
struct NeutralDouble {
    std::shared_ptr<const Spec> C, rev, D;
    std::vector<std::vector<int>> label;  // label[c][d] -> D label or -1

    int pair(int c, int d) const { return label[c][d]; }
    // f (x) g for single-word morphisms with words of equal length.
    Morphism box(const Morphism& f, const Morphism& g) const;
    // f (x) 1, i.e. the image of a C-morphism under c -> (c, 1).
    Morphism box_left(const Morphism& f) const;
    Obj box_left(const Obj& X) const;
};
NeutralDouble neutral_double(const Spec& C);

// C |x D: labels (c, d), (c1,d1)(c2,d2) = (c1 c2, ^{dc2^{-1}} d1 d2), diagonal action. Not braided.
Spec crossed_product(const Spec& C, const Spec& D);

// Frobenius-Perron dimensions of the simples.
std::vector<double> fpdims(const Spec& S);
double fpdim_object(const Spec& S, const Obj& X);

struct ModularData {
    Mat S, T;
    bool modular = false;
    double unitarity_residual = 0.0;  // |S S^+ - 1|
};
// Trivial grading only: S_ab = tr(c_{b,a} c_{a,b}) / sqrt(dim C), T = diag(theta).
ModularData modular_data(const Spec& C, double tol = 1e-9);

}  // namespace gcross
