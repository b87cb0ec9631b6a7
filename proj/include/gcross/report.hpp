#pragma once

#include <string>
#include <vector>

namespace gcross {

struct Check {
    std::string name;
    bool pass = true;
    double residual = 0.0;
    std::string note;
};

struct Report {
    std::vector<Check> checks;

    // Records a residual-gated check.
    void add(const std::string& name, double residual, double tol, const std::string& note = {});
    void flag(const std::string& name, bool pass, const std::string& note = {});
    void merge(const Report& other, const std::string& prefix = {});
    bool ok() const;
    double max_residual() const;
    const Check* find(const std::string& name) const;
    std::string to_text() const;
};

}  // namespace gcross
