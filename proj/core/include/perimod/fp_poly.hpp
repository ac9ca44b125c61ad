#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perimod/prime.hpp"

namespace perimod {

/// A polynomial over F_p in canonical form.
///
/// Coefficients are stored in ascending order of the power of t with trailing
/// (leading-power) zeros trimmed, so the zero polynomial is the empty sequence
/// and equality is plain sequence equality.
class FpPoly {
 public:
  explicit FpPoly(Prime p) : p_(p) {}

  // Every coefficient must already lie in [0, p); throws UsageError otherwise.
  FpPoly(Prime p, std::vector<std::uint32_t> coeffs);

  // Reduces `value` modulo p (negative values wrap).
  static FpPoly constant(Prime p, std::int64_t value);
  // coeff * t^power, with coeff reduced modulo p.
  static FpPoly monomial(Prime p, std::size_t power, std::int64_t coeff = 1);

  [[nodiscard]] Prime prime() const noexcept { return p_; }
  [[nodiscard]] std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  [[nodiscard]] bool is_monic() const noexcept { return leading() == 1; }
  // Coefficient of t^i, zero past the degree.
  [[nodiscard]] std::uint32_t coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();

  Prime p_;
  std::vector<std::uint32_t> coeffs_;
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, std::uint32_t k);

// Quotient and remainder of a by nonzero b.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);

// a scaled so its leading coefficient is 1; zero stays zero.
FpPoly monic(const FpPoly& a);

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
FpPoly poly_gcd(const FpPoly& a, const FpPoly& b);

// a * b mod f, and a^e mod f, for any nonconstant f (not necessarily irreducible).
FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f);
FpPoly pow_mod(const FpPoly& a, std::uint64_t e, const FpPoly& f);

// Shortlex order: lower degree first, then lexicographic on ascending coefficients.
bool shortlex_less(const FpPoly& a, const FpPoly& b);

// Comma-separated ascending coefficients: "1,0,1" is 1 + t^2; the zero polynomial is "0".
std::string format_poly(const FpPoly& a);
// Inverse of format_poly. Rejects coefficients outside [0, p) and malformed text.
FpPoly parse_poly(std::string_view text, Prime p);

// Human-readable form such as "t^2 + 2t + 1", used in diagnostics only.
std::string pretty_poly(const FpPoly& a);

}  // namespace perimod
