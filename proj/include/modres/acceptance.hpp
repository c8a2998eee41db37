#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modres/check.hpp"

namespace modres {

struct AcceptanceConfig {
    bool quick = false;       // reduced ranges for a fast smoke run
    std::uint64_t seed = 0;   // base seed for every randomized criterion
};

struct CriterionResult {
    int id = 0;
    std::string key;    // short stable identifier, e.g. "exactness"
    std::string title;
    std::vector<Check> checks;
    bool pass() const { return all_pass(checks); }
};

// Ids 1..12; determinism (13) needs two processes and lives with the driver.
std::vector<int> acceptance_ids();
std::string acceptance_key(int id);
CriterionResult run_criterion(int id, const AcceptanceConfig& cfg);

}  // namespace modres
