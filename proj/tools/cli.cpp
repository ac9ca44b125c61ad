#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "perimod/errors.hpp"
#include "perimod/irreducible.hpp"

namespace perimod::cli {

using perimod::to_string;
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void flag_error(std::string_view flag, const std::string& message) {
  throw UsageError(std::string(flag) + ": " + message);
}

std::uint64_t parse_uint(std::string_view flag, const std::string& text, std::uint64_t min = 0) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    flag_error(flag, "expected a nonnegative integer, got '" + text + "'");
  }
  if (v < min) flag_error(flag, "must be >= " + std::to_string(min) + ", got " + text);
  return v;
}

std::uint32_t parse_u32(std::string_view flag, const std::string& text, std::uint64_t min = 0) {
  const std::uint64_t v = parse_uint(flag, text, min);
  if (v > UINT32_MAX) flag_error(flag, "value too large: " + text);
  return static_cast<std::uint32_t>(v);
}

std::int64_t parse_int(std::string_view flag, const std::string& text) {
  std::int64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    flag_error(flag, "expected an integer, got '" + text + "'");
  }
  return v;
}

Prime parse_prime(std::string_view flag, const std::string& text) {
  const std::uint64_t v = parse_uint(flag, text);
  try {
    return Prime(v);
  } catch (const UsageError& e) {
    flag_error(flag, e.what());
  }
}

template <typename F>
auto rethrow_as_flag(std::string_view flag, F&& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    flag_error(flag, e.what());
  } catch (const DomainError& e) {
    flag_error(flag, e.what());
  }
}

RingKind parse_ring(const std::string& text) {
  if (text == "zp") return RingKind::PrimeField;
  if (text == "fpt") return RingKind::QuotientField;
  flag_error("--ring", "expected zp or fpt, got '" + text + "'");
}

std::string_view ring_token(RingKind kind) { return kind == RingKind::PrimeField ? "zp" : "fpt"; }

std::string_view predicate_token(DensityPredicateKind kind) {
  switch (kind) {
    case DensityPredicateKind::DividesC: return "divides";
    case DensityPredicateKind::DividesCPlus1: return "divides-plus1";
    case DensityPredicateKind::DividesCMinus1: return "divides-minus1";
    case DensityPredicateKind::CountEquals: return "count-eq";
    case DensityPredicateKind::CountEqualsP: return "count-eq-p";
    case DensityPredicateKind::CountInRange: return "count-range";
  }
  return "?";
}

DensityPredicateKind parse_predicate(const std::string& text) {
  for (auto k : {DensityPredicateKind::DividesC, DensityPredicateKind::DividesCPlus1,
                 DensityPredicateKind::DividesCMinus1, DensityPredicateKind::CountEquals,
                 DensityPredicateKind::CountEqualsP, DensityPredicateKind::CountInRange}) {
    if (predicate_token(k) == text) return k;
  }
  flag_error("--predicate", "unknown predicate '" + text +
                                "' (expected divides, divides-plus1, divides-minus1, count-eq, "
                                "count-eq-p or count-range)");
}

Ring make_ring(const CommandSpec& cmd) {
  const Prime p(cmd.p);
  if (cmd.ring == RingKind::PrimeField) return Ring::prime_field(p);
  return Ring::quotient_field(PolyModulus(parse_poly(cmd.pi, p)));
}

RingElem make_c(const CommandSpec& cmd, const Ring& ring) {
  if (cmd.ring == RingKind::PrimeField) return RingElem::from_integer(ring, parse_int("--c", cmd.c));
  return RingElem::from_poly(ring, parse_poly(cmd.c, ring.prime()));
}

// Raw flag text as collected by CLI11, before validation.
struct Raw {
  std::string ring, p, pi, family, ell, c, format, output;
  std::string p_max, ell_max, m_max, interpretation;
  std::string condition, divergence;
  std::vector<std::string> c_list;
  std::string predicate, value, lo, hi, cutoff, p_min;
  bool negate = false;
  std::string m;
};

void validate_map_flags(CLI::App* sub, const Raw& raw, CommandSpec& cmd) {
  cmd.ring = parse_ring(raw.ring);
  const Prime p = parse_prime("--p", raw.p);
  cmd.p = p.value();
  cmd.family = rethrow_as_flag("--family", [&] { return parse_degree_base(raw.family); });
  cmd.ell = parse_u32("--ell", raw.ell, 1);
  rethrow_as_flag("--family", [&] {
    validate_degree({cmd.family, cmd.ell}, p);
    return 0;
  });
  if (cmd.ring == RingKind::QuotientField) {
    if (sub->count("--pi") == 0) flag_error("--pi", "required with --ring fpt");
    const FpPoly pi = rethrow_as_flag("--pi", [&] { return parse_poly(raw.pi, p); });
    rethrow_as_flag("--pi", [&] { return PolyModulus(pi); });
    cmd.pi = raw.pi;
    rethrow_as_flag("--c", [&] { return parse_poly(raw.c, p); });
  } else {
    if (sub->count("--pi") != 0) flag_error("--pi", "only valid with --ring fpt");
    parse_int("--c", raw.c);
  }
  cmd.c = raw.c;
}

void write_output(const CommandSpec& cmd, const std::string& text, std::ostream& out) {
  if (cmd.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cmd.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("--output: cannot open '" + cmd.output + "' for writing");
  file << text;
  if (!file) throw UsageError("--output: write to '" + cmd.output + "' failed");
}

std::string series_csv_row(std::uint64_t key, std::int64_t num, std::int64_t den,
                           const std::optional<Rational>& ratio) {
  std::string row = std::to_string(key) + "," + std::to_string(num) + "," + std::to_string(den) + ",";
  if (ratio) row += std::to_string(ratio->numerator()) + "," + std::to_string(ratio->denominator());
  else row += ",";
  return row + "\n";
}

constexpr std::string_view kSeriesHeader = "cutoff_or_c,numerator,denominator,ratio_num,ratio_den\n";

ojson series_json_row(std::uint64_t key, std::int64_t num, std::int64_t den,
                      const std::optional<Rational>& ratio) {
  ojson j;
  j["cutoff_or_c"] = key;
  j["numerator"] = num;
  j["denominator"] = den;
  j["ratio_num"] = ratio ? ojson(ratio->numerator()) : ojson(nullptr);
  j["ratio_den"] = ratio ? ojson(ratio->denominator()) : ojson(nullptr);
  return j;
}

std::string run_count(const CommandSpec& cmd) {
  const Ring ring = make_ring(cmd);
  const CountReport r = count_report(PowerMapSpec(ring, {cmd.family, cmd.ell}, make_c(cmd, ring)));
  if (cmd.format == ReportFormat::Json) {
    ojson j;
    j["fixed"] = r.fixed;
    j["period_le2_roots"] = r.period_le2_roots;
    j["exact2"] = r.exact2;
    return j.dump() + "\n";
  }
  return "fixed,period_le2_roots,exact2\n" + std::to_string(r.fixed) + "," +
         std::to_string(r.period_le2_roots) + "," + std::to_string(r.exact2) + "\n";
}

std::string run_orbits(const CommandSpec& cmd) {
  const Ring ring = make_ring(cmd);
  const OrbitDecomposition orbits =
      orbit_decomposition(PowerMapSpec(ring, {cmd.family, cmd.ell}, make_c(cmd, ring)));
  std::map<std::uint64_t, std::uint64_t> multiset;
  for (const auto& cycle : orbits.cycles) ++multiset[cycle.length];
  if (cmd.format == ReportFormat::Json) {
    ojson j;
    j["cycles"] = ojson::array();
    for (const auto& [length, count] : multiset) j["cycles"].push_back({{"length", length}, {"count", count}});
    j["tail_node_count"] = orbits.tail_node_count;
    return j.dump() + "\n";
  }
  std::string text = "cycle_length,count\n";
  for (const auto& [length, count] : multiset) {
    text += std::to_string(length) + "," + std::to_string(count) + "\n";
  }
  return text + "tail_nodes," + std::to_string(orbits.tail_node_count) + "\n";
}

std::string run_verify(const CommandSpec& cmd, std::ostream& err) {
  const VerificationReport report = verify_all(cmd.p_max, cmd.ell_max, cmd.m_max, cmd.interpretation);
  const ReportSummary summary = summarize(report);
  err << summary_line(summary) << " skipped=" << summary.skipped << "\n";
  return render_report(report, cmd.format);
}

std::string run_avg(const CommandSpec& cmd, std::ostream& err) {
  const DegreeSpec family{cmd.family, cmd.ell};
  AverageSeries series;
  if (cmd.divergence_k != 0) {
    series = divergence_series(family, cmd.divergence_k, cmd.interpretation);
    err << "trend=" << (strictly_increasing(series) ? "strictly-increasing" : "not-strictly-increasing")
        << "\n";
  } else {
    series = partial_average({family, cmd.condition, cmd.interpretation, cmd.c_values,
                              cmd.ring == RingKind::PrimeField ? AverageRing::Integers
                                                               : AverageRing::PolynomialDegreeOne});
  }
  if (cmd.format == ReportFormat::Json) {
    ojson j;
    j["family"] = to_string(cmd.family);
    j["ell"] = cmd.ell;
    j["condition"] = cmd.divergence_k != 0 ? "divides" : to_string(cmd.condition);
    j["interpretation"] = to_string(cmd.interpretation);
    j["points"] = ojson::array();
    for (const auto& pt : series.points) {
      j["points"].push_back(series_json_row(pt.c, pt.numerator, pt.denominator, pt.ratio));
    }
    return j.dump(2) + "\n";
  }
  std::string text(kSeriesHeader);
  for (const auto& pt : series.points) text += series_csv_row(pt.c, pt.numerator, pt.denominator, pt.ratio);
  return text;
}

std::string run_density(const CommandSpec& cmd, std::ostream& err) {
  DensityQuery query;
  query.family = {cmd.family, cmd.ell};
  query.predicate = {cmd.predicate, cmd.interpretation, cmd.value, cmd.lo, cmd.hi, cmd.negate};
  query.cutoff = cmd.cutoff;
  if (cmd.p_min != 0) query.p_min = cmd.p_min;
  const DensityResult result = density(query);
  err << "density=" << result.numerator << "/" << result.denominator << " (" << to_string(result.value)
      << ")\n" << kPopulationNote << "\n";
  if (cmd.format == ReportFormat::Json) {
    ojson j;
    j["family"] = to_string(cmd.family);
    j["ell"] = cmd.ell;
    j["predicate"] = describe(query.predicate);
    j["population"] = kPopulationNote;
    j["p_min"] = query.p_min.value_or(minimum_prime(cmd.family));
    j["numerator"] = result.numerator;
    j["denominator"] = result.denominator;
    j["value"] = to_string(result.value);
    j["trend"] = ojson::array();
    for (const auto& pt : result.trend) {
      j["trend"].push_back(series_json_row(pt.cutoff, pt.numerator, pt.denominator, pt.ratio));
    }
    return j.dump(2) + "\n";
  }
  std::string text(kSeriesHeader);
  for (const auto& pt : result.trend) text += series_csv_row(pt.cutoff, pt.numerator, pt.denominator, pt.ratio);
  return text;
}

std::string run_irreducibles(const CommandSpec& cmd) {
  const auto polys = enumerate_monic_irreducibles(Prime(cmd.p), cmd.m);
  if (cmd.format == ReportFormat::Json) {
    ojson j;
    j["p"] = cmd.p;
    j["m"] = cmd.m;
    j["count"] = polys.size();
    j["irreducibles"] = ojson::array();
    for (const auto& f : polys) j["irreducibles"].push_back(format_poly(f));
    return j.dump(2) + "\n";
  }
  std::string text = "pi\n";
  for (const auto& f : polys) text += "\"" + format_poly(f) + "\"\n";
  return text;
}

}  // namespace

std::string_view to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::Count: return "count";
    case Subcommand::Orbits: return "orbits";
    case Subcommand::Verify: return "verify";
    case Subcommand::Avg: return "avg";
    case Subcommand::Density: return "density";
    case Subcommand::Irreducibles: return "irreducibles";
  }
  return "?";
}

CommandSpec parse_args(std::span<const std::string> argv) {
  CLI::App app{"perimod: fixed and 2-periodic point counts of z^d + c over finite fields"};
  app.require_subcommand(1, 1);
  Raw raw;

  const auto add_output = [&raw](CLI::App* sub) {
    sub->add_option("--format", raw.format, "csv or json")->default_str("csv");
    sub->add_option("--output", raw.output, "output file (default: standard output)");
  };
  const auto add_family = [&raw](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--family", raw.family, "degree family: p or p-1");
    if (required) opt->required();
    sub->add_option("--ell", raw.ell, "exponent ell >= 1 (default 1)");
  };

  CLI::App* count = app.add_subcommand("count", "fixed / period<=2 / exact-period-2 counts of one map");
  CLI::App* orbits = app.add_subcommand("orbits", "cycle structure of one map");
  for (CLI::App* sub : {count, orbits}) {
    sub->add_option("--ring", raw.ring, "zp or fpt")->required();
    sub->add_option("--p", raw.p, "odd prime")->required();
    sub->add_option("--pi", raw.pi, "monic irreducible modulus, comma coefficients (fpt)");
    add_family(sub, true);
    sub->add_option("--c", raw.c, "coefficient: integer (zp) or comma coefficients (fpt)")->required();
    add_output(sub);
  }

  CLI::App* verify = app.add_subcommand("verify", "check every claim against brute force");
  verify->add_option("--p-max", raw.p_max, "largest prime swept (default 13)");
  verify->add_option("--ell-max", raw.ell_max, "largest ell swept (default 2)");
  verify->add_option("--m-max", raw.m_max, "largest modulus degree swept (default 2)");
  verify->add_option("--interpretation", raw.interpretation, "roots, exact2 or fixed (default roots)");
  add_output(verify);

  CLI::App* avg = app.add_subcommand("avg", "partial averages over primes p <= c");
  add_family(avg, true);
  avg->add_option("--condition", raw.condition, "divides, divides-plus1, divides-minus1, not-divides, other");
  avg->add_option("--interpretation", raw.interpretation, "roots, exact2 or fixed (default roots)");
  auto* c_opt = avg->add_option("--c", raw.c_list, "coefficients (comma separated)")->delimiter(',');
  auto* div_opt = avg->add_option("--divergence", raw.divergence, "odd-primorial series up to k");
  c_opt->excludes(div_opt);
  avg->add_option("--ring", raw.ring, "zp (integers, default) or fpt (degree-one modulus)");
  add_output(avg);

  CLI::App* dens = app.add_subcommand("density", "finite-cutoff density over pairs (p, c)");
  add_family(dens, true);
  dens->add_option("--predicate", raw.predicate,
                   "divides, divides-plus1, divides-minus1, count-eq, count-eq-p, count-range")
      ->required();
  dens->add_option("--interpretation", raw.interpretation, "roots, exact2 or fixed (default roots)");
  dens->add_option("--value", raw.value, "target count for count-eq");
  dens->add_option("--lo", raw.lo, "lower bound for count-range");
  dens->add_option("--hi", raw.hi, "upper bound for count-range");
  dens->add_flag("--negate", raw.negate, "negate the predicate");
  dens->add_option("--C", raw.cutoff, "cutoff C")->required();
  dens->add_option("--p-min", raw.p_min, "smallest prime in the population (default 3 or 5)");
  add_output(dens);

  CLI::App* irr = app.add_subcommand("irreducibles", "list monic irreducibles of degree m over F_p");
  irr->add_option("--p", raw.p, "odd prime")->required();
  irr->add_option("--m", raw.m, "degree m >= 1")->required();
  add_output(irr);

  if (!argv.empty() && !argv.front().starts_with("-") && app.get_subcommand_no_throw(argv.front()) == nullptr) {
    throw UsageError("unknown subcommand '" + argv.front() + "'");
  }
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CommandSpec cmd;
  CLI::App* sub = app.get_subcommands().front();
  const auto given = [sub](const char* flag) { return sub->count(flag) != 0; };

  if (given("--format")) cmd.format = rethrow_as_flag("--format", [&] { return parse_report_format(raw.format); });
  cmd.output = raw.output;
  if (sub->get_option_no_throw("--interpretation") != nullptr && given("--interpretation")) {
    cmd.interpretation = rethrow_as_flag("--interpretation", [&] { return parse_interpretation(raw.interpretation); });
  }

  if (sub == count || sub == orbits) {
    cmd.subcommand = sub == count ? Subcommand::Count : Subcommand::Orbits;
    if (!given("--ell")) raw.ell = "1";
    validate_map_flags(sub, raw, cmd);
  } else if (sub == verify) {
    cmd.subcommand = Subcommand::Verify;
    if (given("--p-max")) cmd.p_max = parse_u32("--p-max", raw.p_max, 3);
    if (given("--ell-max")) cmd.ell_max = parse_u32("--ell-max", raw.ell_max, 1);
    if (given("--m-max")) cmd.m_max = parse_u32("--m-max", raw.m_max, 1);
  } else if (sub == avg) {
    cmd.subcommand = Subcommand::Avg;
    cmd.family = rethrow_as_flag("--family", [&] { return parse_degree_base(raw.family); });
    if (given("--ell")) cmd.ell = parse_u32("--ell", raw.ell, 1);
    if (given("--ring")) cmd.ring = parse_ring(raw.ring);
    if (given("--divergence")) {
      cmd.divergence_k = parse_u32("--divergence", raw.divergence, 2);
      if (given("--condition") && raw.condition != "divides") {
        flag_error("--condition", "the divergence series always uses divides");
      }
      if (cmd.ring != RingKind::PrimeField) flag_error("--ring", "the divergence series runs over zp");
    } else {
      if (!given("--condition")) flag_error("--condition", "required unless --divergence is given");
      cmd.condition = rethrow_as_flag("--condition", [&] { return parse_average_condition(raw.condition); });
      if (raw.c_list.empty()) flag_error("--c", "at least one coefficient is required");
      const std::uint64_t p_min = minimum_prime(cmd.family);
      for (const auto& text : raw.c_list) {
        const std::uint64_t c = parse_uint("--c", text);
        if (c < p_min) flag_error("--c", "each c must be >= " + std::to_string(p_min) + ", got " + text);
        cmd.c_values.push_back(c);
      }
    }
  } else if (sub == dens) {
    cmd.subcommand = Subcommand::Density;
    cmd.family = rethrow_as_flag("--family", [&] { return parse_degree_base(raw.family); });
    if (given("--ell")) cmd.ell = parse_u32("--ell", raw.ell, 1);
    cmd.predicate = parse_predicate(raw.predicate);
    if (cmd.predicate == DensityPredicateKind::CountEquals) {
      if (!given("--value")) flag_error("--value", "required with --predicate count-eq");
      cmd.value = parse_uint("--value", raw.value);
    } else if (given("--value")) {
      flag_error("--value", "only valid with --predicate count-eq");
    }
    if (cmd.predicate == DensityPredicateKind::CountInRange) {
      if (!given("--lo") || !given("--hi")) flag_error("--lo", "--lo and --hi are required with count-range");
      cmd.lo = parse_uint("--lo", raw.lo);
      cmd.hi = parse_uint("--hi", raw.hi);
      if (cmd.lo > cmd.hi) flag_error("--lo", "must not exceed --hi");
    } else if (given("--lo") || given("--hi")) {
      flag_error(given("--lo") ? "--lo" : "--hi", "only valid with --predicate count-range");
    }
    cmd.negate = raw.negate;
    cmd.cutoff = parse_uint("--C", raw.cutoff, 1);
    if (given("--p-min")) {
      const Prime pm = parse_prime("--p-min", raw.p_min);
      if (pm.value() < minimum_prime(cmd.family)) {
        flag_error("--p-min", "family " + std::string(to_string(cmd.family)) + " needs p_min >= " +
                                  std::to_string(minimum_prime(cmd.family)));
      }
      cmd.p_min = pm.value();
    }
    const std::uint64_t p_min = cmd.p_min != 0 ? cmd.p_min : minimum_prime(cmd.family);
    if (cmd.cutoff < p_min) flag_error("--C", "population is empty: C must be >= " + std::to_string(p_min));
  } else {
    cmd.subcommand = Subcommand::Irreducibles;
    cmd.p = parse_prime("--p", raw.p).value();
    cmd.m = parse_u32("--m", raw.m, 1);
  }
  return cmd;
}

std::vector<std::string> to_argv(const CommandSpec& cmd) {
  std::vector<std::string> a{std::string(to_string(cmd.subcommand))};
  const auto flag = [&a](const char* name, std::string value) {
    a.emplace_back(name);
    a.push_back(std::move(value));
  };
  switch (cmd.subcommand) {
    case Subcommand::Count:
    case Subcommand::Orbits:
      flag("--ring", std::string(ring_token(cmd.ring)));
      flag("--p", std::to_string(cmd.p));
      if (cmd.ring == RingKind::QuotientField) flag("--pi", cmd.pi);
      flag("--family", std::string(to_string(cmd.family)));
      flag("--ell", std::to_string(cmd.ell));
      flag("--c", cmd.c);
      break;
    case Subcommand::Verify:
      flag("--p-max", std::to_string(cmd.p_max));
      flag("--ell-max", std::to_string(cmd.ell_max));
      flag("--m-max", std::to_string(cmd.m_max));
      flag("--interpretation", std::string(to_string(cmd.interpretation)));
      break;
    case Subcommand::Avg:
      flag("--family", std::string(to_string(cmd.family)));
      flag("--ell", std::to_string(cmd.ell));
      flag("--interpretation", std::string(to_string(cmd.interpretation)));
      flag("--ring", std::string(ring_token(cmd.ring)));
      if (cmd.divergence_k != 0) {
        flag("--divergence", std::to_string(cmd.divergence_k));
      } else {
        flag("--condition", std::string(to_string(cmd.condition)));
        std::string list;
        for (std::uint64_t c : cmd.c_values) list += (list.empty() ? "" : ",") + std::to_string(c);
        flag("--c", list);
      }
      break;
    case Subcommand::Density:
      flag("--family", std::string(to_string(cmd.family)));
      flag("--ell", std::to_string(cmd.ell));
      flag("--predicate", std::string(predicate_token(cmd.predicate)));
      flag("--interpretation", std::string(to_string(cmd.interpretation)));
      if (cmd.predicate == DensityPredicateKind::CountEquals) flag("--value", std::to_string(cmd.value));
      if (cmd.predicate == DensityPredicateKind::CountInRange) {
        flag("--lo", std::to_string(cmd.lo));
        flag("--hi", std::to_string(cmd.hi));
      }
      if (cmd.negate) a.emplace_back("--negate");
      flag("--C", std::to_string(cmd.cutoff));
      if (cmd.p_min != 0) flag("--p-min", std::to_string(cmd.p_min));
      break;
    case Subcommand::Irreducibles:
      flag("--p", std::to_string(cmd.p));
      flag("--m", std::to_string(cmd.m));
      break;
  }
  flag("--format", std::string(to_string(cmd.format)));
  if (!cmd.output.empty()) flag("--output", cmd.output);
  return a;
}

int run(const CommandSpec& cmd, std::ostream& out, std::ostream& err) {
  std::string text;
  switch (cmd.subcommand) {
    case Subcommand::Count: text = run_count(cmd); break;
    case Subcommand::Orbits: text = run_orbits(cmd); break;
    case Subcommand::Verify: text = run_verify(cmd, err); break;
    case Subcommand::Avg: text = run_avg(cmd, err); break;
    case Subcommand::Density: text = run_density(cmd, err); break;
    case Subcommand::Irreducibles: text = run_irreducibles(cmd); break;
  }
  write_output(cmd, text, out);
  return 0;
}

int main_entry(std::span<const std::string> argv, std::ostream& out, std::ostream& err) {
  try {
    const CommandSpec cmd = parse_args(argv);
    return run(cmd, out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace perimod::cli
