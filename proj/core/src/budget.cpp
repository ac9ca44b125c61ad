#include "perimod/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "perimod/errors.hpp"

namespace perimod {

std::uint64_t element_budget() {
  const char* raw = std::getenv(std::string(kBudgetEnvVar).c_str());
  if (raw == nullptr || *raw == '\0') {
    return kDefaultElementBudget;
  }
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value == 0) {
    throw UsageError(std::string(kBudgetEnvVar) + " must be a positive integer, got '" +
                     std::string(text) + "'");
  }
  return value;
}

void require_within_budget(std::uint64_t size, std::uint64_t limit, std::string_view what) {
  if (size > limit) {
    throw ResourceError(std::string(what) + " needs " + std::to_string(size) +
                        " elements, budget is " + std::to_string(limit));
  }
}

}  // namespace perimod
