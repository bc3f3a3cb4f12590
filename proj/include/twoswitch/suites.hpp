#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twoswitch {

struct CheckResult {
    std::string id;
    bool pass = true;
    long long cases = 0;
    std::string detail; // counterexample graph6 / sequence on failure
};

struct SuiteOptions {
    int max_n = 6;
    std::uint64_t seed = 1;
    int samples = 2000; // random graphs for the larger-order identity pass
};

/// Closed-form identities against enumeration on every labeled graph up to
/// max_n plus seeded random graphs up to order 32.
std::vector<CheckResult> run_identity_suite(const SuiteOptions& opt);
/// Active/inactive vertex structure across all realizations per sequence.
std::vector<CheckResult> run_activity_suite(const SuiteOptions& opt);
/// Realization-space structure: connectivity, metagraph degrees, filtered
/// spaces, dual isomorphism, active spaces.
std::vector<CheckResult> run_space_suite(const SuiteOptions& opt);

} // namespace twoswitch
