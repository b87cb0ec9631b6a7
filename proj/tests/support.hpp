#pragma once

#include <string>
#include <vector>

#include "gcross/center.hpp"

namespace testsupport {

inline std::string data(const std::string& name) { return std::string(GCROSS_DATA_DIR) + "/" + name + ".json"; }
inline gcross::Spec spec(const std::string& name) { return gcross::load_spec(data(name)); }

inline const std::vector<std::string>& bundled_specs() {
    static const std::vector<std::string> v{"trivial", "vec_z2_symmetric", "vec_z2_semion", "vec_z4", "ising_trivialG", "ising_z2crossed"};
    return v;
}

struct Pair {
    std::string spec, algebra;
};
// The four (category, algebra) pairs used for Theta and the full-center comparison.
inline const std::vector<Pair>& theta_pairs() {
    static const std::vector<Pair> v{{"ising_trivialG", "algebra_unit"}, {"ising_trivialG", "algebra_1psi"},
                                     {"vec_z4", "algebra_z4_boson"}, {"ising_z2crossed", "algebra_unit"}};
    return v;
}

// max |nullspace| dimension of a stacked constraint matrix
inline int nullity(const gcross::Mat& K, int n, double tol = 1e-9) {
    if (n == 0) return 0;
    if (K.rows() == 0) return n;
    Eigen::JacobiSVD<gcross::Mat> svd(K);
    const auto& sv = svd.singularValues();
    int r = 0;
    for (long k = 0; k < sv.size(); ++k)
        if (sv(k) > tol * std::max(1.0, sv(0))) ++r;
    return n - r;
}

}  // namespace testsupport
