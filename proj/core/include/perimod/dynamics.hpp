#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "perimod/ring.hpp"

namespace perimod {

enum class DegreeBase { P, PMinus1 };

/// The exponent d = base^ell of z^d + c, kept factored so large ell never overflows.
struct DegreeSpec {
  DegreeBase base = DegreeBase::P;
  std::uint32_t ell = 1;

  friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;
};

std::string_view to_string(DegreeBase base);
// "p" or "p-1".
DegreeBase parse_degree_base(std::string_view text);

// Smallest prime the family admits: 3 for p^ell, 5 for (p-1)^ell.
std::uint32_t minimum_prime(DegreeBase base);

// Throws DomainError if ell == 0 or p is below the family's minimum.
void validate_degree(DegreeSpec degree, Prime p);

// The integer d when it fits in 64 bits.
std::optional<std::uint64_t> exact_degree(DegreeSpec degree, Prime p);

// Exponent used on nonzero elements: d mod (q - 1), with 0 replaced by q - 1.
std::uint64_t unit_exponent(DegreeSpec degree, const Ring& ring);

/// The map z -> z^d + c on a finite field.
class PowerMapSpec {
 public:
  PowerMapSpec(Ring ring, DegreeSpec degree, RingElem c);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] DegreeSpec degree() const noexcept { return degree_; }
  [[nodiscard]] const RingElem& c() const noexcept { return c_; }

 private:
  Ring ring_;
  DegreeSpec degree_;
  RingElem c_;
};

RingElem apply(const PowerMapSpec& map, const RingElem& z);
// phi^n(z); n = 0 returns z.
RingElem iterate(const PowerMapSpec& map, RingElem z, std::uint64_t n);

struct Cycle {
  std::uint64_t length;
  RingElem representative;  // smallest element of the cycle in enumeration order
};

struct OrbitDecomposition {
  std::vector<Cycle> cycles;  // ordered by representative
  std::uint64_t tail_node_count = 0;
};

OrbitDecomposition orbit_decomposition(const PowerMapSpec& map);

/// The three point counts of one map.
///
/// `period_le2_roots` counts every root of phi^2(z) - z; `exact2` drops the
/// fixed points, so period_le2_roots == fixed + exact2 always.
struct CountReport {
  std::uint64_t fixed = 0;
  std::uint64_t period_le2_roots = 0;
  std::uint64_t exact2 = 0;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

std::uint64_t count_fixed(const PowerMapSpec& map);
std::uint64_t count_period_le2_roots(const PowerMapSpec& map);
std::uint64_t count_exact_period2(const PowerMapSpec& map);
CountReport count_report(const PowerMapSpec& map);

/// Which set a "2-periodic count" refers to.
///
/// ExactPeriod2 excludes fixed points; RootsOfPhi2MinusZ counts all roots of
/// phi^2(z) - z; Fixed counts roots of phi(z) - z.
enum class Interpretation { ExactPeriod2, RootsOfPhi2MinusZ, Fixed };

// "exact2", "roots", "fixed".
std::string_view to_string(Interpretation interpretation);
Interpretation parse_interpretation(std::string_view text);
std::uint64_t select(const CountReport& report, Interpretation interpretation);

std::uint64_t counting_function(DegreeSpec family, Interpretation interpretation, const Ring& ring,
                                const RingElem& c);

/// Precomputed z -> z^d over element indices of one ring.
///
/// Every brute-force scan goes through this table; building it costs one
/// exponentiation per element, after which each map evaluation is a lookup
/// and an addition.
class MapTable {
 public:
  // Throws ResourceError if the ring exceeds the element budget.
  MapTable(Ring ring, DegreeSpec degree);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  [[nodiscard]] DegreeSpec degree() const noexcept { return degree_; }
  [[nodiscard]] std::uint64_t size() const noexcept { return power_.size(); }

  [[nodiscard]] std::uint32_t power_index(std::uint32_t z) const { return power_[z]; }
  [[nodiscard]] std::uint32_t add_index(std::uint32_t a, std::uint32_t b) const;
  [[nodiscard]] std::uint32_t apply_index(std::uint32_t z, std::uint32_t c) const {
    return add_index(power_[z], c);
  }

  // Exhaustive counts for coefficient index c.
  [[nodiscard]] CountReport counts(std::uint32_t c) const;

  struct IndexCycle {
    std::uint64_t length;
    std::uint32_t representative;
  };
  struct IndexOrbits {
    std::vector<IndexCycle> cycles;
    std::uint64_t tail_node_count = 0;
  };
  [[nodiscard]] IndexOrbits orbits(std::uint32_t c) const;

 private:
  std::vector<std::uint32_t> successor_table(std::uint32_t c) const;

  Ring ring_;
  DegreeSpec degree_;
  std::uint32_t p_;
  std::uint32_t m_;
  std::vector<std::uint32_t> power_;
};

}  // namespace perimod
