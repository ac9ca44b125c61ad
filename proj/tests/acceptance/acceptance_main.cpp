// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "cli.hpp"
#include "perimod/claims.hpp"
#include "perimod/dynamics.hpp"
#include "perimod/irreducible.hpp"
#include "perimod/stats.hpp"

namespace {

using namespace perimod;
using enum Interpretation;

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

constexpr DegreeSpec kP1{DegreeBase::P, 1};
constexpr DegreeSpec kPm1{DegreeBase::PMinus1, 1};

std::string str(std::uint64_t v) { return std::to_string(v); }

Outcome criterion1() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Ring ring = Ring::prime_field(Prime(p));
    for (std::uint32_t c = 0; c < p * p; ++c) {
      const auto got = counting_function(kP1, RootsOfPhi2MinusZ, ring, RingElem::from_integer(ring, c));
      o.check(got == (c % p == 0 ? p : 0u), "p=" + str(p) + " c=" + str(c) + " got " + str(got));
    }
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Ring ring = Ring::prime_field(Prime(5));
  const std::uint64_t expect[5] = {2, 1, 1, 1, 2};
  for (std::uint32_t c = 0; c < 5; ++c) {
    const auto got = counting_function(kPm1, RootsOfPhi2MinusZ, ring, RingElem::from_integer(ring, c));
    o.check(got == expect[c], "c=" + str(c) + " computed " + str(got));
  }
  std::set<std::uint32_t> mismatched;
  for (const char* id : {"thm3.1-minus1", "thm3.1-other", "thm3.1-plus1", "thm3.1-zero"}) {
    for (const auto& cell : verify_claim(find_claim(id), {5, 5, 1, 1, 1, 1}, RootsOfPhi2MinusZ).cells) {
      if (cell.match) continue;
      mismatched.insert(cell.c_rep.coeff(0));
      const std::uint64_t claimed = cell.c_class == CoeffClass::CongruentMinus1 ? 1 : 0;
      o.check(cell.claimed.lo == claimed && cell.claimed.hi == claimed, std::string("claimed value at ") + id);
    }
  }
  o.check(mismatched == std::set<std::uint32_t>{2, 3, 4}, "mismatch set differs from {2,3,4}");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Ring z3 = Ring::prime_field(Prime(3));
  o.check(counting_function(kP1, ExactPeriod2, z3, ring_zero(z3)) == 0, "ExactPeriod2 at p=3 c=0");
  o.check(counting_function(kP1, RootsOfPhi2MinusZ, z3, ring_zero(z3)) == 3, "RootsOfPhi2MinusZ at p=3 c=0");
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Ring ring = Ring::prime_field(Prime(p));
    for (std::uint32_t c = 0; c < p * p; ++c) {
      const auto r = count_report(PowerMapSpec(ring, kP1, RingElem::from_integer(ring, c)));
      o.check(r.period_le2_roots == r.fixed + r.exact2, "conservation at p=" + str(p) + " c=" + str(c));
    }
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t ell : {1u, 2u}) {
      for (std::uint32_t m = 1; m <= 3; ++m) {
        for (const auto& pi : enumerate_monic_irreducibles(Prime(p), m)) {
          const Ring ring = Ring::quotient_field(PolyModulus(pi));
          const std::uint64_t fixed = oracle::ipow(p, std::gcd(ell, m));
          const std::uint64_t le2 = oracle::ipow(p, std::gcd(2 * ell, m));
          // c = 0 and c = pi are both congruent to 0 mod pi.
          for (const FpPoly& c : {FpPoly(Prime(p)), pi}) {
            const auto r = count_report(PowerMapSpec(ring, {DegreeBase::P, ell}, RingElem::from_poly(ring, c)));
            o.check(r == CountReport{fixed, le2, le2 - fixed},
                    "p=" + str(p) + " ell=" + str(ell) + " pi=" + format_poly(pi));
          }
        }
      }
    }
  }
  const Ring f9 = Ring::quotient_field(PolyModulus(FpPoly(Prime(3), {1, 0, 1})));
  o.check(count_report(PowerMapSpec(f9, kP1, ring_zero(f9))) == CountReport{3, 9, 6}, "(3,1,2) cell");
  const auto report = verify_claim(find_claim("thm4.2-zero"), {3, 3, 1, 1, 2, 2}, RootsOfPhi2MinusZ);
  bool flagged = !report.cells.empty();
  for (const auto& cell : report.cells) flagged = flagged && !cell.match && cell.computed == 9 && cell.claimed.lo == 3;
  o.check(flagged, "degree-2 cell not flagged against claimed 3");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const Ring ring = Ring::prime_field(Prime(p));
    for (std::uint32_t ell = 1; ell <= 3; ++ell) {
      for (std::uint32_t c = 0; c < p; ++c) {
        const auto r = count_report(PowerMapSpec(ring, {DegreeBase::PMinus1, ell}, RingElem::from_integer(ring, c)));
        const std::uint64_t le2 = (c == 0 || c == p - 1) ? 2 : 1;
        const std::uint64_t exact2 = c == p - 1 ? 2 : 0;
        o.check(r.period_le2_roots == le2 && r.exact2 == exact2,
                "p=" + str(p) + " ell=" + str(ell) + " c=" + str(c));
      }
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<std::uint64_t> cs;
  for (std::uint64_t c = minimum_prime(DegreeBase::P); c <= 10'000; ++c) cs.push_back(c);
  const auto zero = partial_average({kP1, AverageCondition::PNotDividesC, RootsOfPhi2MinusZ, cs, {}});
  for (const auto& pt : zero.points) {
    o.check(pt.numerator == 0, "nonzero summand at c=" + str(pt.c));
    o.check(pt.empty() || *pt.ratio == Rational(0), "ratio at c=" + str(pt.c));
  }
  const auto two = partial_average({kPm1, AverageCondition::PDividesC, RootsOfPhi2MinusZ, {35, 105, 385}, {}});
  for (const auto& pt : two.points) o.check(pt.ratio && *pt.ratio == Rational(2), "ratio 2 at c=" + str(pt.c));
  const auto div = divergence_series(kP1, 8);
  o.check(div.points.size() == 7, "series length");
  if (div.points.size() == 7) {
    o.check(*div.points[0].ratio == Rational(4), "k=2");
    o.check(*div.points[1].ratio == Rational(5), "k=3");
    o.check(*div.points[2].ratio == Rational(13, 2), "k=4");
  }
  o.check(strictly_increasing(div), "not strictly increasing through k=8");
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.check(density({kP1, {}, 10, std::nullopt}).value == Rational(1, 3), "P, p|c, C=10");
  o.check(density({kPm1, {}, 10, std::nullopt}).value == Rational(3, 10), "PMinus1, p|c, C=10");
  const auto at1000 = density({kP1, {}, 1000, std::nullopt});
  const auto at500 = density({kP1, {}, 500, std::nullopt});
  o.check(at1000.value < Rational(1, 20), "C=1000 value " + to_string(at1000.value));
  o.check(at1000.value < at500.value, "C=1000 not below C=500");
  const DensityPredicate zero{DensityPredicateKind::CountEquals, RootsOfPhi2MinusZ, 0, 0, 0, false};
  const auto zero_density = density({kP1, zero, 1000, std::nullopt});
  o.check(zero_density.value > Rational(95, 100), "zero-count density " + to_string(zero_density.value));
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      o.check(enumerate_monic_irreducibles(Prime(p), m).size() == oracle::mobius_irreducible_count(p, m),
              "Mobius count p=" + str(p) + " m=" + str(m));
    }
  }
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t deg = 1; deg <= 4; ++deg) {
      for (const auto& f : oracle::monics_of_degree(p, deg)) {
        const FpPoly g(Prime(p), f);
        o.check(is_irreducible(g) == oracle::is_irreducible_trial(f, p), "Rabin vs trial at " + format_poly(g));
      }
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const std::vector<std::string> args{"verify", "--p-max", "7", "--ell-max", "2", "--m-max", "2"};
  std::ostringstream out1, out2, err;
  o.check(cli::main_entry(args, out1, err) == 0, "first run failed");
  o.check(cli::main_entry(args, out2, err) == 0, "second run failed");
  o.check(!out1.str().empty() && out1.str() == out2.str(), "CSV differs between runs");
  const std::string header = out1.str().substr(0, out1.str().find('\n'));
  o.check(header == "claim_id,p,ell,m,c_class,c_rep,interpretation,claimed,computed,match", "header: " + header);
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto report = verify_all(13, 2, 2, RootsOfPhi2MinusZ);
  bool zp = false, fpt = false;
  for (const auto& cell : report.cells) {
    zp = zp || cell.ring_kind == RingKind::PrimeField;
    fpt = fpt || cell.ring_kind == RingKind::QuotientField;
  }
  o.check(zp && fpt, "sweep does not cover both rings");
  std::set<std::string> covered;
  for (const auto& cell : report.cells) covered.insert(cell.claim_id);
  for (const auto& note : report.skipped) covered.insert(note.claim_id);
  o.check(covered.size() == claim_catalog().size(), "not every claim was swept or skipped");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // 0 = no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "power family over Z/p, p | c gives p else 0", 5, criterion1},
      {2, "units family p=5 per-residue counts and flagged branches", 1, criterion2},
      {3, "interpretation gap and conservation", 0, criterion3},
      {4, "Frobenius closed form over F_p[t]/(pi)", 60, criterion4},
      {5, "units closed form over Z/p", 30, criterion5},
      {6, "partial averages and divergence series", 0, criterion6},
      {7, "finite-cutoff densities", 0, criterion7},
      {8, "irreducible enumeration and Rabin test", 30, criterion8},
      {9, "verify determinism and CSV header", 0, criterion9},
      {10, "full default sweep under 60 s", 60, criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail = "exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                outcome.ok ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
