#pragma once

#include <cstdint>
#include <string_view>

namespace perimod {

inline constexpr std::uint64_t kDefaultElementBudget = 100'000;
inline constexpr std::uint64_t kEnumerationBudget = 1'000'000;
inline constexpr std::string_view kBudgetEnvVar = "PERIMOD_BUDGET";

// Maximum ring cardinality a single brute-force map scan may touch.
// Reads PERIMOD_BUDGET on every call so a process can adjust it at runtime.
std::uint64_t element_budget();

// Throws ResourceError naming `what` when `size` exceeds `limit`.
void require_within_budget(std::uint64_t size, std::uint64_t limit, std::string_view what);

}  // namespace perimod
