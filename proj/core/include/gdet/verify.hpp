#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gdet/det_factor.hpp"

namespace gdet {

struct PropertyResult {
    std::string name;
    bool pass = false;
    bool skipped = false;  // e.g. oracle comparisons above the bound
    std::string detail;
};

struct VerifyOptions {
    int oracle_bound = kDefaultOracleBound;
    std::uint64_t seed = 1;
    int inverse_trials = 25;
    int random_trials = 8;
};

/// Runs the whole property suite for one group: character machinery,
/// operator laws, factorization identities against the Leibniz oracle, and
/// inverse round trips, across every subgroup. Exact checks throughout;
/// the seed only drives the randomized instances.
std::vector<PropertyResult> verify_group(const Group& g, const VerifyOptions& opt = {});

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace gdet
