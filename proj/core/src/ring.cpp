#include "perimod/ring.hpp"

#include "perimod/budget.hpp"
#include "perimod/errors.hpp"

namespace perimod {
namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* op) {
  if (!(a == b)) {
    throw UsageError(std::string(op) + ": elements of different rings (" + a.describe() + " vs " +
                     b.describe() + ")");
  }
}

std::uint64_t int_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Ring Ring::prime_field(Prime p) { return Ring(p, nullptr, p.value()); }

Ring Ring::quotient_field(PolyModulus modulus) {
  const Prime p = modulus.prime();
  const std::uint32_t m = modulus.degree_m();
  long double approx = 1;
  for (std::uint32_t i = 0; i < m; ++i) approx *= p.value();
  if (approx > 9.0e18L) throw ResourceError("quotient field cardinality exceeds 64 bits");
  const std::uint64_t q = int_pow(p.value(), m);
  return Ring(p, std::make_shared<const PolyModulus>(std::move(modulus)), q);
}

const PolyModulus& Ring::modulus() const {
  if (!modulus_) throw UsageError("Z/p has no polynomial modulus");
  return *modulus_;
}

std::string Ring::describe() const {
  if (!modulus_) return "Z/" + std::to_string(p_.value());
  return "F_" + std::to_string(p_.value()) + "[t]/(" + pretty_poly(modulus_->pi()) + ")";
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.p_ != b.p_) return false;
  if (!a.modulus_ || !b.modulus_) return !a.modulus_ && !b.modulus_;
  return a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_;
}

RingElem RingElem::from_integer(const Ring& ring, std::int64_t value) {
  if (ring.kind() == RingKind::PrimeField) {
    const auto p = static_cast<std::int64_t>(ring.prime().value());
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return RingElem(ring, static_cast<std::uint32_t>(r));
  }
  return RingElem(ring, FpPoly::constant(ring.prime(), value));
}

RingElem RingElem::from_poly(const Ring& ring, const FpPoly& value) {
  if (value.prime() != ring.prime()) {
    throw UsageError("polynomial over F_" + std::to_string(value.prime().value()) +
                     " used in " + ring.describe());
  }
  if (ring.kind() == RingKind::PrimeField) {
    if (value.degree() > 0) throw UsageError("Z/p elements must be constants");
    return RingElem(ring, value.coeff(0));
  }
  return RingElem(ring, rem(value, ring.modulus().pi()));
}

std::uint32_t RingElem::residue() const {
  if (const auto* r = std::get_if<std::uint32_t>(&rep_)) return *r;
  throw UsageError("residue() requested on an element of " + ring_.describe());
}

FpPoly RingElem::as_poly() const {
  if (const auto* r = std::get_if<std::uint32_t>(&rep_)) return FpPoly::constant(ring_.prime(), *r);
  return std::get<FpPoly>(rep_);
}

bool RingElem::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&rep_)) return *r == 0;
  return std::get<FpPoly>(rep_).is_zero();
}

std::string RingElem::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&rep_)) return std::to_string(*r);
  return format_poly(std::get<FpPoly>(rep_));
}

bool operator==(const RingElem& a, const RingElem& b) {
  return a.ring_ == b.ring_ && a.rep_ == b.rep_;
}

RingElem ring_zero(const Ring& ring) { return RingElem::from_integer(ring, 0); }
RingElem ring_one(const Ring& ring) { return RingElem::from_integer(ring, 1); }

RingElem add(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "add");
  if (a.ring().kind() == RingKind::PrimeField) {
    return RingElem::from_integer(a.ring(), static_cast<std::int64_t>(a.residue()) + b.residue());
  }
  return RingElem::from_poly(a.ring(), a.as_poly() + b.as_poly());
}

RingElem sub(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "sub");
  if (a.ring().kind() == RingKind::PrimeField) {
    return RingElem::from_integer(a.ring(), static_cast<std::int64_t>(a.residue()) - b.residue());
  }
  return RingElem::from_poly(a.ring(), a.as_poly() - b.as_poly());
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same_ring(a.ring(), b.ring(), "mul");
  if (a.ring().kind() == RingKind::PrimeField) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a.residue()) * b.residue();
    return RingElem::from_integer(a.ring(), static_cast<std::int64_t>(prod % a.ring().prime().value()));
  }
  return RingElem::from_poly(a.ring(), poly_mul_mod(a.as_poly(), b.as_poly(), a.ring().modulus()));
}

RingElem mod_pow(const RingElem& base, std::uint64_t exponent, const Ring& ring) {
  require_same_ring(base.ring(), ring, "mod_pow");
  if (ring.kind() == RingKind::PrimeField) {
    const std::uint64_t p = ring.prime().value();
    std::uint64_t result = 1;
    std::uint64_t b = base.residue();
    for (std::uint64_t e = exponent; e > 0; e >>= 1) {
      if (e & 1) result = result * b % p;
      b = b * b % p;
    }
    return RingElem::from_integer(ring, static_cast<std::int64_t>(result));
  }
  return RingElem::from_poly(ring, pow_mod(base.as_poly(), exponent, ring.modulus().pi()));
}

std::uint64_t index_of(const RingElem& e) {
  const Ring& ring = e.ring();
  if (ring.kind() == RingKind::PrimeField) return e.residue();
  const FpPoly poly = e.as_poly();
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < ring.degree_m(); ++i) {
    index = index * ring.prime().value() + poly.coeff(i);
  }
  return index;
}

RingElem element_at(const Ring& ring, std::uint64_t index) {
  if (index >= ring.cardinality()) {
    throw UsageError("element index " + std::to_string(index) + " out of range for " + ring.describe());
  }
  if (ring.kind() == RingKind::PrimeField) return RingElem(ring, static_cast<std::uint32_t>(index));
  const std::uint32_t p = ring.prime().value();
  std::vector<std::uint32_t> coeffs(ring.degree_m(), 0);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    coeffs[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return RingElem(ring, FpPoly(ring.prime(), std::move(coeffs)));
}

std::vector<RingElem> ring_elements(const Ring& ring) {
  require_within_budget(ring.cardinality(), element_budget(), "ring enumeration of " + ring.describe());
  std::vector<RingElem> out;
  out.reserve(ring.cardinality());
  for (std::uint64_t i = 0; i < ring.cardinality(); ++i) out.push_back(element_at(ring, i));
  return out;
}

}  // namespace perimod
