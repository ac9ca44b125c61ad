#include "perimod/dynamics.hpp"

#include <algorithm>
#include <string>

#include "perimod/budget.hpp"
#include "perimod/errors.hpp"

namespace perimod {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
  }
  return result;
}

std::uint64_t base_value(DegreeBase base, Prime p) {
  return base == DegreeBase::P ? p.value() : p.value() - 1;
}

}  // namespace

std::string_view to_string(DegreeBase base) { return base == DegreeBase::P ? "p" : "p-1"; }

DegreeBase parse_degree_base(std::string_view text) {
  if (text == "p") return DegreeBase::P;
  if (text == "p-1") return DegreeBase::PMinus1;
  throw UsageError("unknown degree family '" + std::string(text) + "' (expected p or p-1)");
}

std::uint32_t minimum_prime(DegreeBase base) { return base == DegreeBase::P ? 3 : 5; }

void validate_degree(DegreeSpec degree, Prime p) {
  if (degree.ell == 0) throw DomainError("degree exponent ell must be >= 1");
  if (p.value() < minimum_prime(degree.base)) {
    throw DomainError("family " + std::string(to_string(degree.base)) + " requires p >= " +
                      std::to_string(minimum_prime(degree.base)) + ", got p = " +
                      std::to_string(p.value()));
  }
}

std::optional<std::uint64_t> exact_degree(DegreeSpec degree, Prime p) {
  const std::uint64_t b = base_value(degree.base, p);
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < degree.ell; ++i) {
    if (d > UINT64_MAX / b) return std::nullopt;
    d *= b;
  }
  return d;
}

std::uint64_t unit_exponent(DegreeSpec degree, const Ring& ring) {
  const std::uint64_t order = ring.cardinality() - 1;
  const std::uint64_t e = powmod(base_value(degree.base, ring.prime()), degree.ell, order);
  return e == 0 ? order : e;
}

PowerMapSpec::PowerMapSpec(Ring ring, DegreeSpec degree, RingElem c)
    : ring_(std::move(ring)), degree_(degree), c_(std::move(c)) {
  if (!(c_.ring() == ring_)) {
    throw UsageError("coefficient belongs to " + c_.ring().describe() + ", map is over " +
                     ring_.describe());
  }
  validate_degree(degree_, ring_.prime());
}

RingElem apply(const PowerMapSpec& map, const RingElem& z) {
  if (!(z.ring() == map.ring())) {
    throw UsageError("apply: point belongs to " + z.ring().describe() + ", map is over " +
                     map.ring().describe());
  }
  // d >= 2, so 0^d = 0.
  if (z.is_zero()) return map.c();
  return add(mod_pow(z, unit_exponent(map.degree(), map.ring()), map.ring()), map.c());
}

RingElem iterate(const PowerMapSpec& map, RingElem z, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) z = apply(map, z);
  return z;
}

OrbitDecomposition orbit_decomposition(const PowerMapSpec& map) {
  const MapTable table(map.ring(), map.degree());
  const auto orbits = table.orbits(static_cast<std::uint32_t>(index_of(map.c())));
  OrbitDecomposition out;
  out.tail_node_count = orbits.tail_node_count;
  out.cycles.reserve(orbits.cycles.size());
  for (const auto& cycle : orbits.cycles) {
    out.cycles.push_back({cycle.length, element_at(map.ring(), cycle.representative)});
  }
  return out;
}

CountReport count_report(const PowerMapSpec& map) {
  const MapTable table(map.ring(), map.degree());
  return table.counts(static_cast<std::uint32_t>(index_of(map.c())));
}

std::uint64_t count_fixed(const PowerMapSpec& map) { return count_report(map).fixed; }
std::uint64_t count_period_le2_roots(const PowerMapSpec& map) { return count_report(map).period_le2_roots; }
std::uint64_t count_exact_period2(const PowerMapSpec& map) { return count_report(map).exact2; }

std::string_view to_string(Interpretation interpretation) {
  switch (interpretation) {
    case Interpretation::ExactPeriod2: return "exact2";
    case Interpretation::RootsOfPhi2MinusZ: return "roots";
    case Interpretation::Fixed: return "fixed";
  }
  return "?";
}

Interpretation parse_interpretation(std::string_view text) {
  if (text == "exact2") return Interpretation::ExactPeriod2;
  if (text == "roots") return Interpretation::RootsOfPhi2MinusZ;
  if (text == "fixed") return Interpretation::Fixed;
  throw UsageError("unknown interpretation '" + std::string(text) +
                   "' (expected exact2, roots or fixed)");
}

std::uint64_t select(const CountReport& report, Interpretation interpretation) {
  switch (interpretation) {
    case Interpretation::ExactPeriod2: return report.exact2;
    case Interpretation::RootsOfPhi2MinusZ: return report.period_le2_roots;
    case Interpretation::Fixed: return report.fixed;
  }
  return 0;
}

std::uint64_t counting_function(DegreeSpec family, Interpretation interpretation, const Ring& ring,
                                const RingElem& c) {
  return select(count_report(PowerMapSpec(ring, family, c)), interpretation);
}

MapTable::MapTable(Ring ring, DegreeSpec degree)
    : ring_(std::move(ring)), degree_(degree), p_(ring_.prime().value()), m_(ring_.degree_m()) {
  validate_degree(degree_, ring_.prime());
  require_within_budget(ring_.cardinality(), element_budget(), "map table over " + ring_.describe());

  const std::uint64_t q = ring_.cardinality();
  const std::uint64_t e = unit_exponent(degree_, ring_);
  power_.assign(q, 0);
  if (ring_.kind() == RingKind::PrimeField) {
    for (std::uint64_t z = 1; z < q; ++z) power_[z] = static_cast<std::uint32_t>(powmod(z, e, p_));
    return;
  }
  for (std::uint64_t z = 1; z < q; ++z) {
    power_[z] = static_cast<std::uint32_t>(index_of(mod_pow(element_at(ring_, z), e, ring_)));
  }
}

std::uint32_t MapTable::add_index(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::vector<std::uint32_t> MapTable::successor_table(std::uint32_t c) const {
  std::vector<std::uint32_t> next(power_.size());
  for (std::size_t z = 0; z < power_.size(); ++z) next[z] = add_index(power_[z], c);
  return next;
}

CountReport MapTable::counts(std::uint32_t c) const {
  CountReport report;
  const auto n = static_cast<std::uint32_t>(power_.size());
  if (c >= n) throw UsageError("coefficient index out of range");
  if (m_ == 1) {
    const std::uint32_t* pw = power_.data();
    std::uint64_t fixed = 0;
    std::uint64_t roots = 0;
    for (std::uint32_t z = 0; z < n; ++z) {
      std::uint32_t w = pw[z] + c;
      if (w >= p_) w -= p_;
      std::uint32_t v = pw[w] + c;
      if (v >= p_) v -= p_;
      fixed += (w == z);
      roots += (v == z);
    }
    report.fixed = fixed;
    report.period_le2_roots = roots;
  } else {
    const auto next = successor_table(c);
    for (std::uint32_t z = 0; z < n; ++z) {
      report.fixed += (next[z] == z);
      report.period_le2_roots += (next[next[z]] == z);
    }
  }
  report.exact2 = report.period_le2_roots - report.fixed;
  return report;
}

MapTable::IndexOrbits MapTable::orbits(std::uint32_t c) const {
  const auto next = successor_table(c);
  const std::size_t n = next.size();
  enum : std::uint8_t { kUnseen = 0, kOnPath = 1, kDone = 2 };
  std::vector<std::uint8_t> state(n, kUnseen);
  std::vector<std::uint32_t> path;
  IndexOrbits out;
  std::uint64_t cycle_nodes = 0;

  for (std::uint32_t start = 0; start < n; ++start) {
    if (state[start] != kUnseen) continue;
    path.clear();
    std::uint32_t z = start;
    while (state[z] == kUnseen) {
      state[z] = kOnPath;
      path.push_back(z);
      z = next[z];
    }
    if (state[z] == kOnPath) {
      // z closes a new cycle; walk it once to get its length and minimum.
      std::uint64_t length = 1;
      std::uint32_t rep = z;
      for (std::uint32_t w = next[z]; w != z; w = next[w]) {
        ++length;
        rep = std::min(rep, w);
      }
      out.cycles.push_back({length, rep});
      cycle_nodes += length;
    }
    for (std::uint32_t w : path) state[w] = kDone;
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const IndexCycle& a, const IndexCycle& b) { return a.representative < b.representative; });
  out.tail_node_count = n - cycle_nodes;
  return out;
}

}  // namespace perimod
