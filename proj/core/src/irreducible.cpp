#include "perimod/irreducible.hpp"

#include <string>

#include "perimod/budget.hpp"
#include "perimod/errors.hpp"

namespace perimod {
namespace {

// t^(p^k) mod f by k successive p-th powers.
FpPoly frobenius_power_of_t(const FpPoly& f, std::uint32_t k) {
  const Prime p = f.prime();
  FpPoly x = rem(FpPoly::monomial(p, 1), f);
  for (std::uint32_t i = 0; i < k; ++i) x = pow_mod(x, p.value(), f);
  return x;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) {
    throw DomainError("is_irreducible: need a polynomial of degree >= 1, got " + pretty_poly(f));
  }
  const FpPoly g = monic(f);
  const auto n = static_cast<std::uint32_t>(g.degree());
  if (n == 1) return true;

  const FpPoly t = FpPoly::monomial(g.prime(), 1);
  if (frobenius_power_of_t(g, n) != rem(t, g)) return false;
  for (std::uint64_t r : prime_divisors(n)) {
    const FpPoly h = frobenius_power_of_t(g, n / static_cast<std::uint32_t>(r)) - t;
    if (poly_gcd(h, g).degree() != 0) return false;
  }
  return true;
}

std::vector<FpPoly> enumerate_monic_irreducibles(Prime p, std::uint32_t m) {
  if (m == 0) throw DomainError("enumerate_monic_irreducibles: degree must be >= 1");
  const std::uint64_t total = checked_power(p.value(), m, kEnumerationBudget);
  require_within_budget(total, kEnumerationBudget, "monic polynomial enumeration");

  std::vector<FpPoly> out;
  // Counter over (c0, ..., c_{m-1}) with c0 most significant gives lexicographic order.
  std::vector<std::uint32_t> digits(m, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::vector<std::uint32_t> coeffs(digits);
    coeffs.push_back(1);
    FpPoly f(p, std::move(coeffs));
    if (is_irreducible(f)) out.push_back(std::move(f));
    for (std::size_t pos = m; pos-- > 0;) {
      if (++digits[pos] < p.value()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

PolyModulus::PolyModulus(FpPoly pi) : pi_(std::move(pi)) {
  if (pi_.degree() < 1 || !pi_.is_monic()) {
    throw DomainError("modulus must be monic of degree >= 1, got " + pretty_poly(pi_));
  }
  if (!is_irreducible(pi_)) {
    throw DomainError("modulus " + pretty_poly(pi_) + " is reducible over F_" +
                      std::to_string(pi_.prime().value()));
  }
}

FpPoly poly_mul_mod(const FpPoly& a, const FpPoly& b, const PolyModulus& modulus) {
  if (a.prime() != modulus.prime() || b.prime() != modulus.prime()) {
    throw UsageError("poly_mul_mod: operands and modulus use different primes");
  }
  return mul_mod(a, b, modulus.pi());
}

}  // namespace perimod
