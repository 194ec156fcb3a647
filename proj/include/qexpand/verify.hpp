#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qx {

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample description when failing
};

struct VerifyReport {
    std::string suite;
    unsigned max_n = 0;
    std::uint64_t seed = 0;
    std::vector<VerifyCase> cases;  // sorted by name
    unsigned failures = 0;
};

// Suites: stirling, q, bell, products, series, pi, all.
// Runs every identity check of the suite up to max_n; deterministic for a
// fixed seed. Throws UsageError for an unknown suite name.
VerifyReport verify_suite(const std::string& suite, unsigned max_n, std::uint64_t seed);

} // namespace qx
