#pragma once

#include <string>
#include <vector>

namespace avgsearch::tools {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// Built-in invariant suite on small fixed cases; fully deterministic, so
// repeated runs print identical summaries.
std::vector<CheckResult> run_verify_checks();

} // namespace avgsearch::tools
