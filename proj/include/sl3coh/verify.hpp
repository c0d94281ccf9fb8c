#pragma once

// Property suites run by `sl3coh verify`. Each suite scans a box of weights
// and stops at the first violated identity.

#include "sl3coh/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sl3coh {

struct SuiteResult {
    std::string suite;
    Int p = 0;
    bool ok = true;
    long checked = 0;
    std::string counterexample; // weight, prime and identity when !ok
};

struct SuiteInfo {
    std::string name;
    std::string identity;
    Int default_box;
    std::vector<Int> default_primes;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& name);

// box = nullopt uses the suite's default extent.
SuiteResult run_suite(const std::string& name, Int p, std::optional<Int> box);

} // namespace sl3coh
