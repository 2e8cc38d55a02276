#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace iasl {

struct SuiteItem {
    int id = 0;
    std::string description;
    bool pass = false;
    std::string detail;  // first counterexample on failure, scope note on success
};

struct SuiteReport {
    int max_ground_size = 0;
    std::vector<SuiteItem> items;

    bool all_pass() const;
    nlohmann::ordered_json to_json() const;
};

/// Machine-checks the structural results about set-filtered labelings at
/// desk scale, for ground sets {0..n-1} with 2 <= n <= max_ground_size.
/// Exhaustive sub-enumerations are capped at |X| <= 4; for n = 5 the
/// maximal graph is still checked directly. max_ground_size must be in [2, 5].
SuiteReport run_theorem_suite(int max_ground_size);

}  // namespace iasl
