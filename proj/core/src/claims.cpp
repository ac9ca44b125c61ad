#include "perimod/claims.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "perimod/budget.hpp"
#include "perimod/errors.hpp"

namespace perimod {
namespace {

using Kind = Prediction::Kind;

std::vector<ClaimRecord> build_catalog() {
  std::vector<ClaimRecord> out;
  const auto add = [&out](std::string id, DegreeBase family, EllDomain ell, std::uint32_t p_min,
                          std::optional<std::uint32_t> p_only, RingKind ring, CoeffClass cls,
                          Prediction prediction, std::string citation) {
    out.push_back({std::move(id), family, ell, p_min, p_only, ring, cls, prediction,
                   std::move(citation)});
  };

  // p^ell families: count p when the modulus divides c, zero otherwise, with an
  // interval branch for exponents outside {1, p}.
  struct PowerGroup {
    const char* prefix;
    RingKind ring;
    const char* modulus;  // how the ideal reads in citations
  };
  for (const PowerGroup& g : {PowerGroup{"thm2", RingKind::PrimeField, "p"},
                              PowerGroup{"thm4", RingKind::QuotientField, "pi"}}) {
    const std::string t = std::string("Theorem ") + (g.prefix[3] == '2' ? "2" : "4");
    const std::string pre = g.prefix;
    add(pre + ".1-zero", DegreeBase::P, EllDomain::One, 3, 3, g.ring, CoeffClass::DivisibleByModulus,
        Prediction::exact(3), t + ".1: count 3 when " + g.modulus + " | c (p = 3, d = 3)");
    add(pre + ".1-nonzero", DegreeBase::P, EllDomain::One, 3, 3, g.ring,
        CoeffClass::NotDivisibleByModulus, Prediction::exact(0),
        t + ".1: count 0 when " + g.modulus + " does not divide c (p = 3, d = 3)");
    add(pre + ".2-zero", DegreeBase::P, EllDomain::One, 3, std::nullopt, g.ring,
        CoeffClass::DivisibleByModulus, Prediction::symbolic_p(),
        t + ".2: count p when " + g.modulus + " | c (d = p)");
    add(pre + ".2-nonzero", DegreeBase::P, EllDomain::One, 3, std::nullopt, g.ring,
        CoeffClass::NotDivisibleByModulus, Prediction::exact(0),
        t + ".2: count 0 when " + g.modulus + " does not divide c (d = p)");
    add(pre + ".3-zero-ell1p", DegreeBase::P, EllDomain::OneOrP, 3, std::nullopt, g.ring,
        CoeffClass::DivisibleByModulus, Prediction::symbolic_p(),
        t + ".3: count p when " + g.modulus + " | c and ell in {1, p}");
    add(pre + ".3-zero-ellother", DegreeBase::P, EllDomain::NotOneOrP, 3, std::nullopt, g.ring,
        CoeffClass::DivisibleByModulus, Prediction::interval({false, 2}, {true, 0}),
        t + ".3: count in [2, ell] when " + g.modulus + " | c and ell not in {1, p}");
    add(pre + ".3-nonzero", DegreeBase::P, EllDomain::Any, 3, std::nullopt, g.ring,
        CoeffClass::NotDivisibleByModulus, Prediction::exact(0),
        t + ".3: count 0 when " + g.modulus + " does not divide c");
  }

  // (p-1)^ell families: 1 for c = +-1, 2 for c = 0, 0 otherwise.
  for (const PowerGroup& g : {PowerGroup{"thm3", RingKind::PrimeField, "p"},
                              PowerGroup{"thm5", RingKind::QuotientField, "pi"}}) {
    const std::string num = g.prefix[3] == '3' ? "3" : "5";
    const std::string pre = g.prefix;
    struct Variant {
      const char* suffix;
      EllDomain ell;
      std::optional<std::uint32_t> p_only;
      const char* scope;
    };
    for (const Variant& v : {Variant{".1", EllDomain::One, 5, "p = 5, d = 4"},
                             Variant{".2", EllDomain::One, std::nullopt, "d = p - 1"},
                             Variant{".3", EllDomain::Any, std::nullopt, "d = (p - 1)^ell"}}) {
      const std::string t = "Theorem " + num + v.suffix + ": ";
      const std::string id = pre + v.suffix;
      const std::string mod = g.modulus;
      add(id + "-minus1", DegreeBase::PMinus1, v.ell, 5, v.p_only, g.ring, CoeffClass::CongruentMinus1,
          Prediction::exact(1), t + "count 1 when c = -1 mod " + mod + " (" + v.scope + ")");
      add(id + "-other", DegreeBase::PMinus1, v.ell, 5, v.p_only, g.ring, CoeffClass::OtherResidues,
          Prediction::exact(0), t + "count 0 when c is not 0, 1, -1 mod " + mod + " (" + v.scope + ")");
      add(id + "-plus1", DegreeBase::PMinus1, v.ell, 5, v.p_only, g.ring, CoeffClass::CongruentPlus1,
          Prediction::exact(1), t + "count 1 when c = 1 mod " + mod + " (" + v.scope + ")");
      add(id + "-zero", DegreeBase::PMinus1, v.ell, 5, v.p_only, g.ring, CoeffClass::DivisibleByModulus,
          Prediction::exact(2), t + "count 2 when " + mod + " | c (" + v.scope + ")");
    }
  }
  std::sort(out.begin(), out.end(), [](const ClaimRecord& a, const ClaimRecord& b) { return a.id < b.id; });
  return out;
}

// Coefficient representatives for one ring, each with its concrete class.
std::vector<std::pair<FpPoly, CoeffClass>> representatives(const Ring& ring) {
  const Prime p = ring.prime();
  std::vector<std::pair<FpPoly, CoeffClass>> reps;
  for (std::uint32_t r = 0; r < p.value(); ++r) {
    const FpPoly c = FpPoly::constant(p, r);
    reps.emplace_back(c, classify(RingElem::from_poly(ring, c)));
  }
  if (ring.kind() == RingKind::QuotientField && ring.degree_m() >= 2) {
    const FpPoly& pi = ring.modulus().pi();
    for (const FpPoly& c : {pi, pi + FpPoly::constant(p, 1), pi + FpPoly::constant(p, -1),
                            FpPoly::monomial(p, 1)}) {
      reps.emplace_back(c, classify(RingElem::from_poly(ring, c)));
    }
  }
  return reps;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

auto cell_key(const VerificationCell& c) {
  return std::tie(c.claim_id, c.p, c.ell, c.m);
}

bool cell_less(const VerificationCell& a, const VerificationCell& b) {
  if (cell_key(a) != cell_key(b)) return cell_key(a) < cell_key(b);
  if (a.pi.has_value() != b.pi.has_value()) return !a.pi.has_value();
  if (a.pi && *a.pi != *b.pi) return shortlex_less(*a.pi, *b.pi);
  return shortlex_less(a.c_rep, b.c_rep);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw UsageError("unterminated quote in CSV line");
  return fields;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

std::string_view ring_token(RingKind kind) { return kind == RingKind::PrimeField ? "zp" : "fpt"; }

}  // namespace

std::string_view to_string(CoeffClass cls) {
  switch (cls) {
    case CoeffClass::DivisibleByModulus: return "zero";
    case CoeffClass::CongruentPlus1: return "plus1";
    case CoeffClass::CongruentMinus1: return "minus1";
    case CoeffClass::OtherResidues: return "other";
    case CoeffClass::NotDivisibleByModulus: return "nonzero";
  }
  return "?";
}

CoeffClass parse_coeff_class(std::string_view text) {
  for (CoeffClass c : {CoeffClass::DivisibleByModulus, CoeffClass::CongruentPlus1,
                       CoeffClass::CongruentMinus1, CoeffClass::OtherResidues,
                       CoeffClass::NotDivisibleByModulus}) {
    if (to_string(c) == text) return c;
  }
  throw UsageError("unknown coefficient class '" + std::string(text) + "'");
}

CoeffClass classify(const RingElem& c) {
  if (c.is_zero()) return CoeffClass::DivisibleByModulus;
  const Ring& ring = c.ring();
  if (c == ring_one(ring)) return CoeffClass::CongruentPlus1;
  if (c == RingElem::from_integer(ring, -1)) return CoeffClass::CongruentMinus1;
  return CoeffClass::OtherResidues;
}

bool class_selected(CoeffClass selector, CoeffClass concrete) {
  if (selector == CoeffClass::NotDivisibleByModulus) return concrete != CoeffClass::DivisibleByModulus;
  return selector == concrete;
}

ClaimedRange Prediction::instantiate(std::uint32_t p, std::uint32_t ell) const {
  switch (kind) {
    case Kind::Exact: return {value, value, false};
    case Kind::SymbolicP: return {p, p, true};
    case Kind::Interval: return {lo.at(ell), hi.at(ell), false};
  }
  return {};
}

bool ell_in_domain(EllDomain domain, std::uint32_t ell, std::uint32_t p) {
  switch (domain) {
    case EllDomain::One: return ell == 1;
    case EllDomain::Any: return ell >= 1;
    case EllDomain::OneOrP: return ell == 1 || ell == p;
    case EllDomain::NotOneOrP: return ell >= 1 && ell != 1 && ell != p;
  }
  return false;
}

const std::vector<ClaimRecord>& claim_catalog() {
  static const std::vector<ClaimRecord> catalog = build_catalog();
  return catalog;
}

const ClaimRecord& find_claim(std::string_view id) {
  for (const auto& claim : claim_catalog()) {
    if (claim.id == id) return claim;
  }
  throw UsageError("unknown claim id '" + std::string(id) + "'");
}

VerificationReport verify_claim(const ClaimRecord& claim, const SweepRange& range,
                                Interpretation interpretation) {
  VerificationReport report;
  std::uint32_t p_lo = std::max(range.p_min, claim.p_min);
  std::uint32_t p_hi = range.p_max;
  if (claim.p_only) {
    p_lo = std::max(p_lo, *claim.p_only);
    p_hi = std::min(p_hi, *claim.p_only);
  }

  const auto emit = [&](const MapTable& table, std::uint32_t ell, const std::optional<FpPoly>& pi) {
    const Ring& ring = table.ring();
    const ClaimedRange claimed = claim.prediction.instantiate(ring.prime().value(), ell);
    for (const auto& [rep, cls] : representatives(ring)) {
      if (!class_selected(claim.coeff_class, cls)) continue;
      const RingElem c = RingElem::from_poly(ring, rep);
      const CountReport counts = table.counts(static_cast<std::uint32_t>(index_of(c)));
      const std::uint64_t computed = select(counts, interpretation);
      VerificationCell cell{.claim_id = claim.id,
                            .ring_kind = ring.kind(),
                            .p = ring.prime().value(),
                            .ell = ell,
                            .m = ring.degree_m(),
                            .pi = pi,
                            .c_class = cls,
                            .c_rep = rep,
                            .interpretation = interpretation,
                            .claimed = claimed,
                            .computed = computed,
                            .match = claimed.contains(computed)};
      report.cells.push_back(std::move(cell));
    }
  };

  for (std::uint32_t pv = p_lo; pv <= p_hi; ++pv) {
    if (!is_prime(pv) || pv < 3) continue;
    const Prime p(pv);
    std::vector<std::uint32_t> ells;
    for (std::uint32_t ell = range.ell_min; ell <= range.ell_max; ++ell) {
      if (ell_in_domain(claim.ell_domain, ell, pv)) ells.push_back(ell);
    }
    if (ells.empty()) continue;

    if (claim.ring_kind == RingKind::PrimeField) {
      const Ring ring = Ring::prime_field(p);
      for (std::uint32_t ell : ells) emit(MapTable(ring, {claim.family, ell}), ell, std::nullopt);
      continue;
    }
    for (std::uint32_t m = std::max<std::uint32_t>(range.m_min, 1); m <= range.m_max; ++m) {
      require_within_budget(checked_pow(pv, m), element_budget(),
                            "claim " + claim.id + " at p = " + std::to_string(pv) + ", m = " +
                                std::to_string(m));
      for (const FpPoly& pi : enumerate_monic_irreducibles(p, m)) {
        const Ring ring = Ring::quotient_field(PolyModulus(pi));
        for (std::uint32_t ell : ells) emit(MapTable(ring, {claim.family, ell}), ell, pi);
      }
    }
  }

  if (report.cells.empty()) {
    throw DomainError("claim " + claim.id + ": hypotheses (p >= " + std::to_string(claim.p_min) +
                      (claim.p_only ? ", p = " + std::to_string(*claim.p_only) : std::string()) +
                      ", ell domain) exclude the whole sweep range");
  }
  std::sort(report.cells.begin(), report.cells.end(), cell_less);
  return report;
}

VerificationReport verify_all(std::uint32_t p_max, std::uint32_t ell_max, std::uint32_t m_max,
                              Interpretation interpretation) {
  const SweepRange range{3, p_max, 1, ell_max, 1, m_max};
  VerificationReport all;
  for (const ClaimRecord& claim : claim_catalog()) {
    try {
      VerificationReport one = verify_claim(claim, range, interpretation);
      all.cells.insert(all.cells.end(), std::make_move_iterator(one.cells.begin()),
                       std::make_move_iterator(one.cells.end()));
    } catch (const DomainError& e) {
      all.skipped.push_back({claim.id, e.what()});
    }
  }
  std::stable_sort(all.cells.begin(), all.cells.end(), cell_less);
  return all;
}

ReportSummary summarize(const VerificationReport& report) {
  ReportSummary s;
  s.cells = report.cells.size();
  s.matches = static_cast<std::size_t>(
      std::count_if(report.cells.begin(), report.cells.end(), [](const auto& c) { return c.match; }));
  s.mismatches = s.cells - s.matches;
  s.skipped = report.skipped.size();
  return s;
}

std::string summary_line(const ReportSummary& summary) {
  return "cells=" + std::to_string(summary.cells) + " matches=" + std::to_string(summary.matches) +
         " mismatches=" + std::to_string(summary.mismatches);
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw UsageError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

std::string_view to_string(ReportFormat format) { return format == ReportFormat::Csv ? "csv" : "json"; }

std::string format_claimed(const ClaimedRange& claimed) {
  if (claimed.symbolic_p) return "p=" + std::to_string(claimed.lo);
  if (claimed.lo == claimed.hi) return std::to_string(claimed.lo);
  return std::to_string(claimed.lo) + ".." + std::to_string(claimed.hi);
}

ClaimedRange parse_claimed(std::string_view text) {
  if (text.starts_with("p=")) {
    const std::uint64_t v = parse_u64(text.substr(2), "claimed value");
    return {v, v, true};
  }
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    return {parse_u64(text.substr(0, dots), "claimed bound"), parse_u64(text.substr(dots + 2), "claimed bound"),
            false};
  }
  const std::uint64_t v = parse_u64(text, "claimed value");
  return {v, v, false};
}

std::string render_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << kReportCsvHeader << '\n';
    for (const auto& c : report.cells) {
      out << csv_field(c.claim_id) << ',' << c.p << ',' << c.ell << ',' << c.m << ','
          << to_string(c.c_class) << ',' << csv_field(format_poly(c.c_rep)) << ','
          << to_string(c.interpretation) << ',' << format_claimed(c.claimed) << ',' << c.computed
          << ',' << (c.match ? "true" : "false") << '\n';
    }
    return out.str();
  }

  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& c : report.cells) {
    nlohmann::ordered_json j;
    j["claim_id"] = c.claim_id;
    j["ring"] = ring_token(c.ring_kind);
    j["p"] = c.p;
    j["ell"] = c.ell;
    j["m"] = c.m;
    j["pi"] = c.pi ? nlohmann::ordered_json(format_poly(*c.pi)) : nlohmann::ordered_json(nullptr);
    j["c_class"] = to_string(c.c_class);
    j["c_rep"] = format_poly(c.c_rep);
    j["interpretation"] = to_string(c.interpretation);
    j["claimed"] = format_claimed(c.claimed);
    j["computed"] = c.computed;
    j["match"] = c.match;
    cells.push_back(std::move(j));
  }
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"claim_id", s.claim_id}, {"reason", s.reason}});
  nlohmann::ordered_json doc;
  doc["cells"] = std::move(cells);
  doc["skipped"] = std::move(skipped);
  return doc.dump(2) + "\n";
}

VerificationReport parse_report(std::string_view text, ReportFormat format) {
  VerificationReport report;
  if (format == ReportFormat::Csv) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kReportCsvHeader) {
      throw UsageError("CSV report must start with the header line");
    }
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split_csv_line(line);
      if (f.size() != 10) throw UsageError("CSV row has " + std::to_string(f.size()) + " fields");
      if (f[9] != "true" && f[9] != "false") throw UsageError("match must be true or false");
      const Prime p(parse_u64(f[1], "p"));
      report.cells.push_back(VerificationCell{
          .claim_id = f[0],
          .ring_kind = find_claim(f[0]).ring_kind,
          .p = p.value(),
          .ell = static_cast<std::uint32_t>(parse_u64(f[2], "ell")),
          .m = static_cast<std::uint32_t>(parse_u64(f[3], "m")),
          .pi = std::nullopt,
          .c_class = parse_coeff_class(f[4]),
          .c_rep = parse_poly(f[5], p),
          .interpretation = parse_interpretation(f[6]),
          .claimed = parse_claimed(f[7]),
          .computed = parse_u64(f[8], "computed"),
          .match = f[9] == "true"});
    }
    return report;
  }

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("cells")) {
      const Prime p(j.at("p").get<std::uint32_t>());
      std::optional<FpPoly> pi;
      if (!j.at("pi").is_null()) pi = parse_poly(j.at("pi").get<std::string>(), p);
      VerificationCell c{
          .claim_id = j.at("claim_id").get<std::string>(),
          .ring_kind = j.at("ring").get<std::string>() == "zp" ? RingKind::PrimeField : RingKind::QuotientField,
          .p = p.value(),
          .ell = j.at("ell").get<std::uint32_t>(),
          .m = j.at("m").get<std::uint32_t>(),
          .pi = std::move(pi),
          .c_class = parse_coeff_class(j.at("c_class").get<std::string>()),
          .c_rep = parse_poly(j.at("c_rep").get<std::string>(), p),
          .interpretation = parse_interpretation(j.at("interpretation").get<std::string>()),
          .claimed = parse_claimed(j.at("claimed").get<std::string>()),
          .computed = j.at("computed").get<std::uint64_t>(),
          .match = j.at("match").get<bool>()};
      report.cells.push_back(std::move(c));
    }
    for (const auto& s : doc.at("skipped")) {
      report.skipped.push_back({s.at("claim_id").get<std::string>(), s.at("reason").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON report: ") + e.what());
  }
  return report;
}

}  // namespace perimod
