#pragma once

#include <cstdint>
#include <string>

#include "gcross/center.hpp"

namespace gcross {

struct SuiteOptions {
    std::string data_dir = GCROSS_DATA_DIR;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    double lemma_tol = 1e-8;
    int instances = 100;
    int jobs = 1;
};

// Bundled categories (*.json without the algebra_ prefix) and algebras, sorted by name.
std::vector<std::string> bundled_specs(const std::string& data_dir);
std::vector<std::string> bundled_algebras(const std::string& data_dir);

// Algebras from data_dir that load over S and pass the Frobenius (except non-equivariant
// simplicity) and equivariance checks, with the unit algebra first.
std::vector<std::pair<std::string, Frobenius>> usable_algebras(const Spec& S, const std::string& data_dir, double tol);

// Every property check over every bundled (category, algebra): validation, graphical identities,
// idempotents, Z matrices, Theta, gauge independence, full center, induction, dimensions.
// Categories run on up to `jobs` threads; the report order does not depend on it.
Report property_suite(const SuiteOptions& opt);

}  // namespace gcross
