#include "fuzzylab/check_report.hpp"

#include <cstdio>
#include <stdexcept>

#include "fuzzylab/text_format.hpp"

namespace fuzzylab {

void CheckReport::add(std::string name, double residual, double tolerance) {
    checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

bool CheckReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double CheckReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

const CheckRecord& CheckReport::at(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("CheckReport: no check named " + name);
}

std::string CheckReport::to_json() const {
    std::string out = "[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i) out += ",";
        out += "{\"check_name\":\"" + c.name + "\",\"residual\":" + fmt17(c.residual) +
               ",\"tolerance\":" + fmt17(c.tolerance) + ",\"pass\":" + (c.pass ? "true" : "false") +
               "}";
    }
    out += "]";
    return out;
}

}  // namespace fuzzylab
