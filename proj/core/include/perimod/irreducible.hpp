#pragma once

#include <cstdint>
#include <vector>

#include "perimod/fp_poly.hpp"

namespace perimod {

/// Rabin's test: f of degree n is irreducible over F_p iff t^(p^n) = t mod f
/// and gcd(t^(p^(n/r)) - t, f) = 1 for every prime r dividing n.
///
/// Non-monic input is normalized first. Throws DomainError for constants.
bool is_irreducible(const FpPoly& f);

// All monic irreducibles of exact degree m, lexicographic on ascending coefficients.
// Throws ResourceError when p^m exceeds the enumeration budget.
std::vector<FpPoly> enumerate_monic_irreducibles(Prime p, std::uint32_t m);

/// A monic irreducible pi of degree m >= 1; F_p[t]/(pi) is then a field with p^m elements.
class PolyModulus {
 public:
  // Throws DomainError if pi is not monic or not irreducible.
  explicit PolyModulus(FpPoly pi);

  [[nodiscard]] const FpPoly& pi() const noexcept { return pi_; }
  [[nodiscard]] Prime prime() const noexcept { return pi_.prime(); }
  [[nodiscard]] std::uint32_t degree_m() const noexcept {
    return static_cast<std::uint32_t>(pi_.degree());
  }

  friend bool operator==(const PolyModulus&, const PolyModulus&) = default;

 private:
  FpPoly pi_;
};

// a * b reduced modulo pi; a and b must be over the modulus' prime.
FpPoly poly_mul_mod(const FpPoly& a, const FpPoly& b, const PolyModulus& modulus);

}  // namespace perimod
