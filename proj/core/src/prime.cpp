#include "perimod/prime.hpp"

#include <string>

#include "perimod/budget.hpp"
#include "perimod/errors.hpp"

namespace perimod {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(0) {
  if (value < 3 || value >= (1ULL << 31)) {
    throw UsageError("prime must be an odd prime in [3, 2^31), got " + std::to_string(value));
  }
  if (!is_prime(value)) {
    throw UsageError(std::to_string(value) + " is not prime");
  }
  value_ = static_cast<std::uint32_t>(value);
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  // A sieve of 10^8 bytes is the most a desk-scale run should ask for.
  require_within_budget(n, 100'000'000, "prime sieve");
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("prime_divisors: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> first_odd_primes(std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; out.size() < k; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

}  // namespace perimod
