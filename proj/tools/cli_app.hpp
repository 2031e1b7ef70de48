#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzylab::cli {

/// Batch entry point shared by the executable and the test harness.
/// Returns 0 when every check passed, 1 when a check failed, 2 on a
/// usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzylab::cli
