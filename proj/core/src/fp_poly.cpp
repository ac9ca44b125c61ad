#include "perimod/fp_poly.hpp"

#include <algorithm>
#include <charconv>

#include "perimod/errors.hpp"

namespace perimod {
namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void require_same_prime(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) {
    throw UsageError("polynomials over different primes: " + std::to_string(a.prime().value()) +
                     " vs " + std::to_string(b.prime().value()));
  }
}

}  // namespace

FpPoly::FpPoly(Prime p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c >= p_.value()) {
      throw UsageError("coefficient " + std::to_string(c) + " outside [0, " +
                       std::to_string(p_.value()) + ")");
    }
  }
  trim();
}

FpPoly FpPoly::constant(Prime p, std::int64_t value) {
  return FpPoly(p, {reduce(value, p.value())});
}

FpPoly FpPoly::monomial(Prime p, std::size_t power, std::int64_t coeff) {
  std::vector<std::uint32_t> c(power + 1, 0);
  c[power] = reduce(coeff, p.value());
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  const std::uint32_t p = a.prime().value();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::uint32_t s = a.coeff(i) + b.coeff(i);
    c[i] = s >= p ? s - p : s;
  }
  return FpPoly(a.prime(), std::move(c));
}

FpPoly operator-(const FpPoly& a) {
  const std::uint32_t p = a.prime().value();
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = x == 0 ? 0 : p - x;
  return FpPoly(a.prime(), std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.prime());
  const std::uint64_t p = a.prime().value();
  std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coeffs()[i]) * b.coeffs()[j]) % p;
    }
  }
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return FpPoly(a.prime(), std::move(c));
}

FpPoly scale(const FpPoly& a, std::uint32_t k) {
  const std::uint32_t p = a.prime().value();
  std::vector<std::uint32_t> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = mul(x, k % p, p);
  return FpPoly(a.prime(), std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::uint32_t p = a.prime().value();
  if (a.degree() < b.degree()) return {FpPoly(a.prime()), a};

  std::vector<std::uint32_t> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<std::uint32_t> q(r.size() - db, 0);
  const std::uint32_t lead_inv = inverse(b.leading(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint32_t top = r[k + db];
    if (top == 0) continue;
    const std::uint32_t factor = mul(top, lead_inv, p);
    q[k] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      const std::uint32_t sub = mul(factor, b.coeffs()[j], p);
      std::uint32_t& slot = r[k + j];
      slot = slot >= sub ? slot - sub : slot + p - sub;
    }
  }
  r.resize(db);
  return {FpPoly(a.prime(), std::move(q)), FpPoly(a.prime(), std::move(r))};
}

FpPoly rem(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, inverse(a.leading(), a.prime().value()));
}

FpPoly poly_gcd(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  FpPoly x = a;
  FpPoly y = b;
  while (!y.is_zero()) {
    FpPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& f) {
  return rem(a * b, f);
}

FpPoly pow_mod(const FpPoly& a, std::uint64_t e, const FpPoly& f) {
  require_same_prime(a, f);
  if (f.degree() < 1) throw DomainError("pow_mod: modulus must be nonconstant");
  FpPoly result = FpPoly::constant(a.prime(), 1);
  FpPoly base = rem(a, f);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, base, f);
    if (e > 1) base = mul_mod(base, base, f);
  }
  return result;
}

bool shortlex_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

std::string format_poly(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a.coeffs()[i]);
  }
  return out;
}

FpPoly parse_poly(std::string_view text, Prime p) {
  if (text.empty()) throw UsageError("empty polynomial text");
  std::vector<std::uint32_t> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw UsageError("malformed polynomial '" + std::string(text) + "'");
    }
    if (v >= p.value()) {
      throw UsageError("coefficient " + std::to_string(v) + " in '" + std::string(text) +
                       "' outside [0, " + std::to_string(p.value()) + ")");
    }
    coeffs.push_back(static_cast<std::uint32_t>(v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FpPoly(p, std::move(coeffs));
}

std::string pretty_poly(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const std::uint32_t c = a.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += 't';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace perimod
