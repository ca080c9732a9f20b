#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hnt {

inline constexpr std::uint64_t kDefaultClaimBudget = 10'000'000;

enum class ClaimStatus { Pass, Fail, Skipped };

struct ClaimResult {
    std::string id;
    std::string summary;
    int criterion;  // acceptance criterion the claim belongs to (1..10)
    ClaimStatus status;
    double elapsed_ms;
    std::string detail;  // failure explanation or skip reason
};

struct ClaimSuiteResult {
    std::vector<ClaimResult> results;

    bool all_passed() const;
    std::size_t count(ClaimStatus status) const;
};

// Ids of all registered claims, in execution order.
std::vector<std::string> claim_ids();

// Runs every registered claim whose id matches the filter ('*' wildcards;
// empty matches everything). Claims whose declared cost exceeds the budget
// are reported SKIPPED. Randomized claims draw from the given seed.
ClaimSuiteResult run_claims(const std::string& filter = "",
                            std::uint64_t budget = kDefaultClaimBudget,
                            std::uint64_t seed = 0);

const char* to_string(ClaimStatus status);

}  // namespace hnt
