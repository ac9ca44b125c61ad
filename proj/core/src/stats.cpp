#include "perimod/stats.hpp"

#include <algorithm>
#include <map>

#include "perimod/errors.hpp"

namespace perimod {
namespace {

/// Count lookups for one prime, memoized by residue of c.
class PrimeCounter {
 public:
  PrimeCounter(std::uint32_t p, DegreeSpec family, AverageRing ring)
      : table_(make_ring(Prime(p), ring), family), memo_(p) {}

  const CountReport& at(std::uint64_t c) {
    const auto r = static_cast<std::uint32_t>(c % table_.ring().prime().value());
    auto& slot = memo_[r];
    if (!slot) slot = table_.counts(r);
    return *slot;
  }

 private:
  static Ring make_ring(Prime p, AverageRing ring) {
    if (ring == AverageRing::Integers) return Ring::prime_field(p);
    return Ring::quotient_field(PolyModulus(FpPoly::monomial(p, 1)));
  }

  MapTable table_;
  std::vector<std::optional<CountReport>> memo_;
};

bool condition_holds(AverageCondition condition, std::uint64_t p, std::uint64_t c) {
  const std::uint64_t r = c % p;
  switch (condition) {
    case AverageCondition::PDividesC: return r == 0;
    case AverageCondition::PDividesCPlus1: return r == p - 1;
    case AverageCondition::PDividesCMinus1: return r == 1;
    case AverageCondition::PNotDividesC: return r != 0;
    case AverageCondition::OtherResidue: return r != 0 && r != 1 && r != p - 1;
  }
  return false;
}

// Primes meeting a divisibility condition, found by factoring instead of scanning.
std::vector<std::uint64_t> divisor_primes(AverageCondition condition, std::uint64_t c) {
  switch (condition) {
    case AverageCondition::PDividesC: return prime_divisors(c);
    case AverageCondition::PDividesCPlus1: return prime_divisors(c + 1);
    case AverageCondition::PDividesCMinus1: return prime_divisors(c - 1);
    default: return {};
  }
}

bool is_divisibility(AverageCondition condition) {
  return condition == AverageCondition::PDividesC || condition == AverageCondition::PDividesCPlus1 ||
         condition == AverageCondition::PDividesCMinus1;
}

std::optional<Rational> ratio_of(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

bool predicate_holds(const DensityPredicate& pred, std::uint64_t p, std::uint64_t c,
                     PrimeCounter* counter) {
  bool holds = false;
  switch (pred.kind) {
    case DensityPredicateKind::DividesC: holds = c % p == 0; break;
    case DensityPredicateKind::DividesCPlus1: holds = (c + 1) % p == 0; break;
    case DensityPredicateKind::DividesCMinus1: holds = (c - 1) % p == 0; break;
    case DensityPredicateKind::CountEquals:
      holds = select(counter->at(c), pred.interpretation) == pred.value;
      break;
    case DensityPredicateKind::CountEqualsP:
      holds = select(counter->at(c), pred.interpretation) == p;
      break;
    case DensityPredicateKind::CountInRange: {
      const std::uint64_t v = select(counter->at(c), pred.interpretation);
      holds = pred.lo <= v && v <= pred.hi;
      break;
    }
  }
  return holds != pred.negate;
}

bool needs_counts(const DensityPredicate& pred) {
  return pred.kind == DensityPredicateKind::CountEquals || pred.kind == DensityPredicateKind::CountEqualsP ||
         pred.kind == DensityPredicateKind::CountInRange;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(AverageCondition condition) {
  switch (condition) {
    case AverageCondition::PDividesC: return "divides";
    case AverageCondition::PDividesCPlus1: return "divides-plus1";
    case AverageCondition::PDividesCMinus1: return "divides-minus1";
    case AverageCondition::PNotDividesC: return "not-divides";
    case AverageCondition::OtherResidue: return "other";
  }
  return "?";
}

AverageCondition parse_average_condition(std::string_view text) {
  for (auto c : {AverageCondition::PDividesC, AverageCondition::PDividesCPlus1,
                 AverageCondition::PDividesCMinus1, AverageCondition::PNotDividesC,
                 AverageCondition::OtherResidue}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown condition '" + std::string(text) +
                   "' (expected divides, divides-plus1, divides-minus1, not-divides or other)");
}

AverageSeries partial_average(const AverageQuery& query) {
  if (query.family.ell == 0) throw DomainError("ell must be >= 1");
  const std::uint64_t p_min = minimum_prime(query.family.base);
  for (std::uint64_t c : query.c_values) {
    if (c < p_min) {
      throw DomainError("partial_average: c = " + std::to_string(c) + " is below p_min = " +
                        std::to_string(p_min));
    }
  }

  AverageSeries series;
  series.points.resize(query.c_values.size());
  for (std::size_t i = 0; i < query.c_values.size(); ++i) series.points[i].c = query.c_values[i];

  const auto accumulate = [&](std::uint64_t p, const std::vector<std::size_t>& which) {
    PrimeCounter counter(static_cast<std::uint32_t>(p), query.family, query.ring);
    for (std::size_t i : which) {
      auto& point = series.points[i];
      point.numerator += static_cast<std::int64_t>(select(counter.at(point.c), query.interpretation));
      point.denominator += 1;
    }
  };

  if (is_divisibility(query.condition)) {
    std::map<std::uint64_t, std::vector<std::size_t>> by_prime;
    for (std::size_t i = 0; i < query.c_values.size(); ++i) {
      for (std::uint64_t p : divisor_primes(query.condition, query.c_values[i])) {
        if (p >= p_min) by_prime[p].push_back(i);
      }
    }
    for (const auto& [p, which] : by_prime) accumulate(p, which);
  } else {
    const std::uint64_t c_max = *std::max_element(query.c_values.begin(), query.c_values.end());
    std::vector<std::size_t> which;
    for (std::uint64_t p : primes_up_to(c_max)) {
      if (p < p_min) continue;
      which.clear();
      for (std::size_t i = 0; i < query.c_values.size(); ++i) {
        const std::uint64_t c = query.c_values[i];
        if (p <= c && condition_holds(query.condition, p, c)) which.push_back(i);
      }
      if (!which.empty()) accumulate(p, which);
    }
  }

  for (auto& point : series.points) point.ratio = ratio_of(point.numerator, point.denominator);
  return series;
}

std::uint64_t odd_primorial(std::size_t k) {
  std::uint64_t c = 1;
  for (std::uint64_t p : first_odd_primes(k)) {
    if (c > UINT64_MAX / p / 2) {
      throw ResourceError("odd primorial of " + std::to_string(k) + " primes overflows 64 bits");
    }
    c *= p;
  }
  return c;
}

AverageSeries divergence_series(DegreeSpec family, std::size_t k_max, Interpretation interpretation) {
  if (k_max < 2) throw DomainError("divergence_series: k_max must be >= 2");
  AverageQuery query{family, AverageCondition::PDividesC, interpretation, {}, AverageRing::Integers};
  for (std::size_t k = 2; k <= k_max; ++k) query.c_values.push_back(odd_primorial(k));
  return partial_average(query);
}

bool strictly_increasing(const AverageSeries& series) {
  std::optional<Rational> prev;
  for (const auto& point : series.points) {
    if (!point.ratio) continue;
    if (prev && !(*point.ratio > *prev)) return false;
    prev = point.ratio;
  }
  return true;
}

std::uint64_t prime_divisor_sum(std::uint64_t c, std::uint64_t p_min) {
  std::uint64_t sum = 0;
  for (std::uint64_t p : prime_divisors(c)) {
    if (p >= p_min) sum += p;
  }
  return sum;
}

std::uint64_t prime_divisor_count(std::uint64_t c, std::uint64_t p_min) {
  std::uint64_t n = 0;
  for (std::uint64_t p : prime_divisors(c)) n += (p >= p_min);
  return n;
}

std::string describe(const DensityPredicate& pred) {
  std::string out;
  switch (pred.kind) {
    case DensityPredicateKind::DividesC: out = "p | c"; break;
    case DensityPredicateKind::DividesCPlus1: out = "p | c+1"; break;
    case DensityPredicateKind::DividesCMinus1: out = "p | c-1"; break;
    case DensityPredicateKind::CountEquals:
      out = "count(" + std::string(to_string(pred.interpretation)) + ") == " + std::to_string(pred.value);
      break;
    case DensityPredicateKind::CountEqualsP:
      out = "count(" + std::string(to_string(pred.interpretation)) + ") == p";
      break;
    case DensityPredicateKind::CountInRange:
      out = "count(" + std::string(to_string(pred.interpretation)) + ") in [" + std::to_string(pred.lo) +
            ", " + std::to_string(pred.hi) + "]";
      break;
  }
  return pred.negate ? "not (" + out + ")" : out;
}

DensityResult density(const DensityQuery& query) {
  if (query.family.ell == 0) throw DomainError("ell must be >= 1");
  const std::uint64_t p_min = query.p_min.value_or(minimum_prime(query.family.base));
  const std::uint64_t cutoff = query.cutoff;
  if (cutoff < p_min) {
    throw DomainError("density: population is empty for C = " + std::to_string(cutoff) +
                      " and p_min = " + std::to_string(p_min));
  }

  // Per-c tallies, then prefix sums give every trend cutoff at once.
  std::vector<std::int64_t> satisfied(cutoff + 1, 0);
  std::vector<std::int64_t> total(cutoff + 1, 0);
  const bool counts = needs_counts(query.predicate);
  for (std::uint64_t p : primes_up_to(cutoff)) {
    if (p < p_min) continue;
    std::optional<PrimeCounter> counter;
    if (counts) counter.emplace(static_cast<std::uint32_t>(p), query.family, AverageRing::Integers);
    for (std::uint64_t c = p; c <= cutoff; ++c) {
      total[c] += 1;
      satisfied[c] += predicate_holds(query.predicate, p, c, counter ? &*counter : nullptr);
    }
  }
  std::vector<std::int64_t> sat_prefix(cutoff + 1, 0);
  std::vector<std::int64_t> tot_prefix(cutoff + 1, 0);
  for (std::uint64_t c = 1; c <= cutoff; ++c) {
    sat_prefix[c] = sat_prefix[c - 1] + satisfied[c];
    tot_prefix[c] = tot_prefix[c - 1] + total[c];
  }

  DensityResult result;
  result.numerator = sat_prefix[cutoff];
  result.denominator = tot_prefix[cutoff];
  if (result.denominator == 0) throw DomainError("density: population is empty");
  result.value = Rational(result.numerator, result.denominator);
  for (std::uint64_t at : {cutoff / 4, cutoff / 2, cutoff}) {
    DensityPoint point{at, sat_prefix[at], tot_prefix[at], ratio_of(sat_prefix[at], tot_prefix[at])};
    result.trend.push_back(point);
  }
  return result;
}

}  // namespace perimod
