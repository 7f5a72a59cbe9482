#pragma once

#include <string>
#include <vector>

namespace rankmc {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // what was checked, or the first failure
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "duality", "census", "bounds", "constructions" or "all" at pinned
/// desk-scale parameters. Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace rankmc
