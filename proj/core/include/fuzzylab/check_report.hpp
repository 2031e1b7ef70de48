#pragma once

#include <string>
#include <vector>

namespace fuzzylab {

/// One verified identity: name carries the equation label the check implements
/// (e.g. "comrelD=2", "R^2D=3") so a failing row maps straight to the text.
struct CheckRecord {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    void add(std::string name, double residual, double tolerance);
    bool all_pass() const;
    double max_residual() const;
    const CheckRecord& at(const std::string& name) const;

    /// JSON array of {check_name, residual, tolerance, pass} records.
    std::string to_json() const;
};

}  // namespace fuzzylab
