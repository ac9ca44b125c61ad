#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "perimod/dynamics.hpp"

namespace perimod {

using Rational = boost::rational<std::int64_t>;

// "a/b" in lowest terms ("a" when b == 1).
std::string to_string(const Rational& r);

/// Which primes contribute to the average at a given c.
enum class AverageCondition {
  PDividesC,        // p | c
  PDividesCPlus1,   // p | c + 1, primes up to c + 1
  PDividesCMinus1,  // p | c - 1
  PNotDividesC,     // p does not divide c
  OtherResidue,     // c is not 0, 1 or -1 mod p
};

std::string_view to_string(AverageCondition condition);
AverageCondition parse_average_condition(std::string_view text);

/// Ring in which each summand is evaluated.
///
/// Integers uses Z/p with c mod p. PolynomialDegreeOne embeds c as a constant
/// of F_p[t] and works in F_p[t]/(t), where t | c exactly when p | c.
enum class AverageRing { Integers, PolynomialDegreeOne };

struct AverageQuery {
  DegreeSpec family;
  AverageCondition condition = AverageCondition::PDividesC;
  Interpretation interpretation = Interpretation::RootsOfPhi2MinusZ;
  std::vector<std::uint64_t> c_values;
  AverageRing ring = AverageRing::Integers;
};

/// numerator = sum of counts over contributing primes, denominator = how many primes contributed.
struct AveragePoint {
  std::uint64_t c = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::optional<Rational> ratio;  // empty when no prime contributed

  [[nodiscard]] bool empty() const { return denominator == 0; }
  friend bool operator==(const AveragePoint&, const AveragePoint&) = default;
};

struct AverageSeries {
  std::vector<AveragePoint> points;
};

// Ratio of summed counts over primes p with p_min <= p <= c (p_min from the
// family) meeting the condition. Throws DomainError if some c < p_min.
AverageSeries partial_average(const AverageQuery& query);

// The product of the first k odd primes.
std::uint64_t odd_primorial(std::size_t k);

// partial_average with condition p | c along c_k = odd_primorial(k), k = 2..k_max.
AverageSeries divergence_series(DegreeSpec family, std::size_t k_max,
                                Interpretation interpretation = Interpretation::RootsOfPhi2MinusZ);

// True when every nonempty ratio exceeds the previous nonempty one.
bool strictly_increasing(const AverageSeries& series);

// Sum and count of the distinct prime divisors p >= p_min of c.
std::uint64_t prime_divisor_sum(std::uint64_t c, std::uint64_t p_min);
std::uint64_t prime_divisor_count(std::uint64_t c, std::uint64_t p_min);

enum class DensityPredicateKind {
  DividesC,
  DividesCPlus1,
  DividesCMinus1,
  CountEquals,    // counting_function == value
  CountEqualsP,   // counting_function == p
  CountInRange,   // lo <= counting_function <= hi
};

struct DensityPredicate {
  DensityPredicateKind kind = DensityPredicateKind::DividesC;
  Interpretation interpretation = Interpretation::RootsOfPhi2MinusZ;
  std::uint64_t value = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool negate = false;
};

std::string describe(const DensityPredicate& predicate);

/// Population: all pairs (p, c) with 1 <= c <= cutoff, p prime, p_min <= p <= c.
struct DensityQuery {
  DegreeSpec family;
  DensityPredicate predicate;
  std::uint64_t cutoff = 0;
  std::optional<std::uint32_t> p_min;  // defaults to the family minimum
};

struct DensityPoint {
  std::uint64_t cutoff = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  std::optional<Rational> ratio;
};

struct DensityResult {
  std::int64_t numerator = 0;
  std::int64_t denominator = 0;
  Rational value;
  std::vector<DensityPoint> trend;  // cutoffs C/4, C/2, C
};

inline constexpr std::string_view kPopulationNote =
    "population = pairs (p, c) with 1 <= c <= C, p prime, p_min <= p <= c";

// Throws DomainError when the population at `cutoff` is empty.
DensityResult density(const DensityQuery& query);

}  // namespace perimod
