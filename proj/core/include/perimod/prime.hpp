#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace perimod {

// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// An odd prime p >= 3, validated by trial division at construction.
///
/// Values are kept below 2^31 so that products of two residues fit in 64 bits.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  [[nodiscard]] std::uint32_t value() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint32_t value_;
};

// All primes <= n in increasing order (sieve of Eratosthenes). Includes 2.
std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// Distinct prime divisors of n >= 1 in increasing order (trial division). Includes 2.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// The first k odd primes: 3, 5, 7, ...
std::vector<std::uint64_t> first_odd_primes(std::size_t k);

}  // namespace perimod
