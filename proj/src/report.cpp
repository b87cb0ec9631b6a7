#include "gcross/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace gcross {

void Report::add(const std::string& name, double residual, double tol, const std::string& note) {
    bool pass = std::isfinite(residual) && residual < tol;
    checks.push_back({name, pass, residual, note});
}

void Report::flag(const std::string& name, bool pass, const std::string& note) {
    checks.push_back({name, pass, pass ? 0.0 : 1.0, note});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks) {
        c.name = prefix + c.name;
        checks.push_back(std::move(c));
    }
}

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double Report::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, std::isfinite(c.residual) ? c.residual : INFINITY);
    return m;
}

const Check* Report::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "  ok    " : "  FAIL  ") << std::left << std::setw(34) << c.name << " residual "
           << std::scientific << std::setprecision(3) << c.residual;
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace gcross
