#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "perimod/fp_poly.hpp"
#include "perimod/irreducible.hpp"

namespace perimod {

enum class RingKind { PrimeField, QuotientField };

/// Which finite field is in play: Z/pZ or F_p[t]/(pi). Cheap to copy.
class Ring {
 public:
  static Ring prime_field(Prime p);
  static Ring quotient_field(PolyModulus modulus);

  [[nodiscard]] RingKind kind() const noexcept { return modulus_ ? RingKind::QuotientField : RingKind::PrimeField; }
  [[nodiscard]] Prime prime() const noexcept { return p_; }
  // 1 for the prime field.
  [[nodiscard]] std::uint32_t degree_m() const noexcept { return modulus_ ? modulus_->degree_m() : 1; }
  [[nodiscard]] std::uint64_t cardinality() const noexcept { return q_; }
  // Only valid for QuotientField.
  [[nodiscard]] const PolyModulus& modulus() const;

  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(Prime p, std::shared_ptr<const PolyModulus> modulus, std::uint64_t q)
      : p_(p), modulus_(std::move(modulus)), q_(q) {}

  Prime p_;
  std::shared_ptr<const PolyModulus> modulus_;
  std::uint64_t q_;
};

/// A fully reduced element of a Ring: a residue in [0, p) for Z/p, or a
/// polynomial of degree < m for F_p[t]/(pi).
class RingElem {
 public:
  // Reduces an integer (negative values wrap) into either ring kind.
  static RingElem from_integer(const Ring& ring, std::int64_t value);
  // Reduces a polynomial modulo pi; for Z/p the polynomial must be constant.
  static RingElem from_poly(const Ring& ring, const FpPoly& value);

  [[nodiscard]] const Ring& ring() const noexcept { return ring_; }
  // Valid for PrimeField only.
  [[nodiscard]] std::uint32_t residue() const;
  // The representative as a polynomial (a constant for PrimeField).
  [[nodiscard]] FpPoly as_poly() const;
  [[nodiscard]] bool is_zero() const noexcept;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RingElem& a, const RingElem& b);

 private:
  RingElem(Ring ring, std::variant<std::uint32_t, FpPoly> rep)
      : ring_(std::move(ring)), rep_(std::move(rep)) {}

  friend RingElem element_at(const Ring& ring, std::uint64_t index);

  Ring ring_;
  std::variant<std::uint32_t, FpPoly> rep_;
};

RingElem ring_zero(const Ring& ring);
RingElem ring_one(const Ring& ring);
RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);

// base^exponent in `ring`; exponent 0 gives 1 (including 0^0).
// Throws UsageError if base belongs to a different ring.
RingElem mod_pow(const RingElem& base, std::uint64_t exponent, const Ring& ring);

// Position of an element in the deterministic enumeration order: the residue for Z/p;
// for polynomials the base-p number with c0 as the most significant digit.
std::uint64_t index_of(const RingElem& e);
RingElem element_at(const Ring& ring, std::uint64_t index);

// Every element exactly once, in index order. Throws ResourceError over budget.
std::vector<RingElem> ring_elements(const Ring& ring);

}  // namespace perimod
