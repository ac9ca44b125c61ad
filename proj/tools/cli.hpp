#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "perimod/claims.hpp"
#include "perimod/stats.hpp"

namespace perimod::cli {

enum class Subcommand { Count, Orbits, Verify, Avg, Density, Irreducibles };

std::string_view to_string(Subcommand sub);

/// A fully validated invocation. Unused fields keep their defaults so that
/// two parses of the same arguments compare equal.
struct CommandSpec {
  Subcommand subcommand = Subcommand::Count;

  // count, orbits, avg (ring), irreducibles (p)
  RingKind ring = RingKind::PrimeField;
  std::uint32_t p = 0;
  std::string pi;  // comma-coefficient text, fpt only
  DegreeBase family = DegreeBase::P;
  std::uint32_t ell = 1;
  std::string c;  // integer for zp, comma-coefficient polynomial for fpt

  // verify
  std::uint32_t p_max = 13;
  std::uint32_t ell_max = 2;
  std::uint32_t m_max = 2;
  Interpretation interpretation = Interpretation::RootsOfPhi2MinusZ;

  // avg
  AverageCondition condition = AverageCondition::PDividesC;
  std::vector<std::uint64_t> c_values;
  std::uint32_t divergence_k = 0;  // 0 = use c_values

  // density
  DensityPredicateKind predicate = DensityPredicateKind::DividesC;
  std::uint64_t value = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool negate = false;
  std::uint64_t cutoff = 0;
  std::uint32_t p_min = 0;  // 0 = family default

  // irreducibles
  std::uint32_t m = 1;

  ReportFormat format = ReportFormat::Csv;
  std::string output;  // empty = standard output

  friend bool operator==(const CommandSpec&, const CommandSpec&) = default;
};

/// Thrown by parse_args for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// argv excludes the program name. Throws UsageError naming the offending flag.
CommandSpec parse_args(std::span<const std::string> argv);

// Arguments that parse back to an equal CommandSpec.
std::vector<std::string> to_argv(const CommandSpec& cmd);

// Runs a validated command. Output goes to cmd.output (written only after all
// computation succeeds) or to `out`; summaries go to `err`.
// Exit status: 0 success, 1 usage or domain error, 2 resource error.
int run(const CommandSpec& cmd, std::ostream& out, std::ostream& err);

// parse_args + run with error-to-status mapping.
int main_entry(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

}  // namespace perimod::cli
