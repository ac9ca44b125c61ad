#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perimod/dynamics.hpp"

namespace perimod {

/// Residue class of a coefficient c modulo p (or modulo pi).
///
/// The first four kinds partition the residues; NotDivisibleByModulus is the
/// union of the three nonzero classes and only appears as a claim selector
/// (the "otherwise" branch of the p^ell families). For p = 3 the residue 2 is
/// classified as CongruentMinus1.
enum class CoeffClass {
  DivisibleByModulus,
  CongruentPlus1,
  CongruentMinus1,
  OtherResidues,
  NotDivisibleByModulus,
};

std::string_view to_string(CoeffClass cls);
CoeffClass parse_coeff_class(std::string_view text);
CoeffClass classify(const RingElem& c);
// Whether a concrete class (never the union) is selected by a claim's class.
bool class_selected(CoeffClass selector, CoeffClass concrete);

/// One bound of an interval prediction: a constant or the exponent ell itself.
struct Bound {
  bool is_ell = false;
  std::uint64_t constant = 0;

  [[nodiscard]] std::uint64_t at(std::uint32_t ell) const { return is_ell ? ell : constant; }
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// A claimed value after substituting p and ell.
struct ClaimedRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool symbolic_p = false;

  [[nodiscard]] bool contains(std::uint64_t v) const { return lo <= v && v <= hi; }
  friend bool operator==(const ClaimedRange&, const ClaimedRange&) = default;
};

struct Prediction {
  enum class Kind { Exact, SymbolicP, Interval };
  Kind kind = Kind::Exact;
  std::uint64_t value = 0;  // Exact
  Bound lo;                 // Interval
  Bound hi;                 // Interval

  static Prediction exact(std::uint64_t v) { return {Kind::Exact, v, {}, {}}; }
  static Prediction symbolic_p() { return {Kind::SymbolicP, 0, {}, {}}; }
  static Prediction interval(Bound lo, Bound hi) { return {Kind::Interval, 0, lo, hi}; }

  [[nodiscard]] ClaimedRange instantiate(std::uint32_t p, std::uint32_t ell) const;
};

/// Which exponents ell a claim speaks about; OneOrP depends on the cell's prime.
enum class EllDomain { One, Any, OneOrP, NotOneOrP };
bool ell_in_domain(EllDomain domain, std::uint32_t ell, std::uint32_t p);

/// One branch of one counting theorem.
struct ClaimRecord {
  std::string id;
  DegreeBase family = DegreeBase::P;
  EllDomain ell_domain = EllDomain::One;
  std::uint32_t p_min = 3;
  std::optional<std::uint32_t> p_only;  // set for the single-prime theorems
  RingKind ring_kind = RingKind::PrimeField;
  CoeffClass coeff_class = CoeffClass::DivisibleByModulus;
  Prediction prediction;
  std::string citation;
};

// The full catalog, one record per theorem branch, ordered by id.
const std::vector<ClaimRecord>& claim_catalog();
// Throws UsageError for an unknown id.
const ClaimRecord& find_claim(std::string_view id);

struct VerificationCell {
  std::string claim_id;
  RingKind ring_kind = RingKind::PrimeField;
  std::uint32_t p = 0;
  std::uint32_t ell = 0;
  std::uint32_t m = 1;
  std::optional<FpPoly> pi;  // QuotientField cells only
  CoeffClass c_class = CoeffClass::DivisibleByModulus;
  FpPoly c_rep;  // unreduced representative; a constant for Z/p (required)
  Interpretation interpretation = Interpretation::RootsOfPhi2MinusZ;
  ClaimedRange claimed;
  std::uint64_t computed = 0;
  bool match = false;

  friend bool operator==(const VerificationCell&, const VerificationCell&) = default;
};

struct SkipNote {
  std::string claim_id;
  std::string reason;

  friend bool operator==(const SkipNote&, const SkipNote&) = default;
};

struct VerificationReport {
  std::vector<VerificationCell> cells;
  std::vector<SkipNote> skipped;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Inclusive bounds of a sweep. Primes are drawn from [p_min, p_max].
struct SweepRange {
  std::uint32_t p_min = 3;
  std::uint32_t p_max = 13;
  std::uint32_t ell_min = 1;
  std::uint32_t ell_max = 2;
  std::uint32_t m_min = 1;
  std::uint32_t m_max = 2;
};

// Brute-force every cell in the claim's domain intersected with `range`.
// Throws DomainError when the claim's hypotheses leave no cell, ResourceError
// when a ring exceeds the element budget.
VerificationReport verify_claim(const ClaimRecord& claim, const SweepRange& range,
                                Interpretation interpretation);

// verify_claim over the whole catalog with p in [3, p_max]; claims whose
// hypotheses exclude the range become skip notes. Cells are sorted by
// (claim id, p, ell, m, pi, c representative).
VerificationReport verify_all(std::uint32_t p_max, std::uint32_t ell_max, std::uint32_t m_max,
                              Interpretation interpretation);

struct ReportSummary {
  std::size_t cells = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t skipped = 0;
};
ReportSummary summarize(const VerificationReport& report);
// "cells=N matches=M mismatches=K"
std::string summary_line(const ReportSummary& summary);

enum class ReportFormat { Csv, Json };
ReportFormat parse_report_format(std::string_view text);
std::string_view to_string(ReportFormat format);

inline constexpr std::string_view kReportCsvHeader =
    "claim_id,p,ell,m,c_class,c_rep,interpretation,claimed,computed,match";

std::string render_report(const VerificationReport& report, ReportFormat format);
// Inverse of render_report. CSV carries no modulus column, so pi is only
// recovered from JSON; CSV-parsed quotient cells have pi unset.
VerificationReport parse_report(std::string_view text, ReportFormat format);

// "3", "p=5" or "2..4".
std::string format_claimed(const ClaimedRange& claimed);
ClaimedRange parse_claimed(std::string_view text);

}  // namespace perimod
