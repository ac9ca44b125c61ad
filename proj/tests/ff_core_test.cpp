#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "perimod/budget.hpp"
#include "perimod/errors.hpp"
#include "perimod/fp_poly.hpp"
#include "perimod/irreducible.hpp"
#include "perimod/prime.hpp"
#include "perimod/ring.hpp"

namespace perimod {
namespace {

FpPoly poly(std::uint32_t p, std::vector<std::uint32_t> c) { return FpPoly(Prime(p), std::move(c)); }

oracle::Poly raw(const FpPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

Ring quotient(std::uint32_t p, std::vector<std::uint32_t> pi) {
  return Ring::quotient_field(PolyModulus(poly(p, std::move(pi))));
}

// Small rings used by the exhaustive properties (q <= 81).
std::vector<Ring> small_rings() {
  std::vector<Ring> rings;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) rings.push_back(Ring::prime_field(Prime(p)));
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      if (oracle::ipow(p, m) > 81) break;
      for (const auto& pi : enumerate_monic_irreducibles(Prime(p), m)) {
        rings.push_back(Ring::quotient_field(PolyModulus(pi)));
      }
    }
  }
  return rings;
}

TEST(Prime, AcceptsOddPrimesOnly) {
  EXPECT_EQ(Prime(3).value(), 3u);
  EXPECT_EQ(Prime(2147483647).value(), 2147483647u);
  EXPECT_THROW(Prime(2), UsageError);
  EXPECT_THROW(Prime(9), UsageError);
  EXPECT_THROW(Prime(1), UsageError);
  EXPECT_THROW(Prime(0), UsageError);
}

TEST(Prime, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
}

TEST(Prime, SieveAndDivisors) {
  const auto primes = primes_up_to(30);
  EXPECT_EQ(primes, (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(prime_divisors(1155), (std::vector<std::uint64_t>{3, 5, 7, 11}));
  EXPECT_EQ(prime_divisors(64), (std::vector<std::uint64_t>{2}));
  EXPECT_TRUE(prime_divisors(1).empty());
  EXPECT_EQ(first_odd_primes(4), (std::vector<std::uint64_t>{3, 5, 7, 11}));
}

TEST(FpPoly, CanonicalFormTrimsAndValidates) {
  EXPECT_EQ(poly(3, {1, 0, 0}).degree(), 0);
  EXPECT_TRUE(poly(3, {0, 0}).is_zero());
  EXPECT_EQ(FpPoly(Prime(3)).degree(), -1);
  EXPECT_THROW(poly(3, {3}), UsageError);
  EXPECT_EQ(FpPoly::constant(Prime(5), -1), poly(5, {4}));
  EXPECT_EQ(FpPoly::monomial(Prime(5), 2), poly(5, {0, 0, 1}));
}

TEST(FpPoly, TextFormat) {
  EXPECT_EQ(format_poly(poly(3, {1, 0, 1})), "1,0,1");
  EXPECT_EQ(format_poly(FpPoly(Prime(3))), "0");
  EXPECT_EQ(parse_poly("1,0,1", Prime(3)), poly(3, {1, 0, 1}));
  EXPECT_EQ(parse_poly("0", Prime(3)), FpPoly(Prime(3)));
  EXPECT_EQ(parse_poly("2,0", Prime(3)), poly(3, {2}));
  EXPECT_THROW(parse_poly("1,3", Prime(3)), UsageError);
  EXPECT_THROW(parse_poly("1,,2", Prime(3)), UsageError);
  EXPECT_THROW(parse_poly("", Prime(3)), UsageError);
  EXPECT_THROW(parse_poly("a", Prime(3)), UsageError);
  EXPECT_THROW(parse_poly("-1", Prime(3)), UsageError);
}

TEST(FpPoly, MixedPrimesRejected) {
  EXPECT_THROW(poly(3, {1}) + poly(5, {1}), UsageError);
  EXPECT_THROW(divmod(poly(3, {1, 1}), FpPoly(Prime(3))), DomainError);
}

TEST(ModPow, Examples) {
  const Ring z5 = Ring::prime_field(Prime(5));
  const Ring z3 = Ring::prime_field(Prime(3));
  const Ring z7 = Ring::prime_field(Prime(7));
  EXPECT_EQ(mod_pow(RingElem::from_integer(z5, 2), 4, z5).residue(), 1u);
  EXPECT_EQ(mod_pow(RingElem::from_integer(z3, 0), 5, z3).residue(), 0u);
  EXPECT_EQ(mod_pow(RingElem::from_integer(z7, 3), 9, z7).residue(), 6u);
  EXPECT_EQ(mod_pow(RingElem::from_integer(z7, 0), 0, z7).residue(), 1u);
  EXPECT_THROW(mod_pow(RingElem::from_integer(z7, 3), 2, z5), UsageError);
}

TEST(ModPow, AgreesWithRepeatedMultiplication) {
  for (const Ring& ring : small_rings()) {
    const std::uint32_t p = ring.prime().value();
    // For Z/p the constants are already reduced modulo t.
    const oracle::Poly pi = ring.kind() == RingKind::QuotientField ? raw(ring.modulus().pi()) : oracle::Poly{0, 1};
    for (const RingElem& z : ring_elements(ring)) {
      const oracle::Poly base = raw(z.as_poly());
      oracle::Poly acc{1};
      for (std::uint64_t e = 0; e <= 2000; ++e) {
        if (e % 97 == 0 || e < 20 || e == 2000) {
          ASSERT_EQ(raw(mod_pow(z, e, ring).as_poly()), acc) << ring.describe() << " z=" << z.to_string() << " e=" << e;
        }
        acc = oracle::rem(oracle::mul(acc, base, p), pi, p);
      }
    }
  }
}

TEST(ModPow, FrobeniusFixesEveryElement) {
  for (const Ring& ring : small_rings()) {
    for (const RingElem& z : ring_elements(ring)) {
      ASSERT_EQ(mod_pow(z, ring.cardinality(), ring), z) << ring.describe() << " z=" << z.to_string();
    }
  }
}

TEST(PolyMulMod, Examples) {
  const PolyModulus pi3(poly(3, {1, 0, 1}));
  EXPECT_EQ(poly_mul_mod(poly(3, {0, 1}), poly(3, {0, 1}), pi3), poly(3, {2}));
  const FpPoly a = poly(3, {2, 1});
  EXPECT_EQ(poly_mul_mod(a, poly(3, {1}), pi3), a);
  const PolyModulus t5(poly(5, {0, 1}));
  EXPECT_EQ(poly_mul_mod(poly(5, {1, 1}), poly(5, {2, 1}), t5), poly(5, {2}));
  EXPECT_THROW(poly_mul_mod(poly(5, {1}), poly(5, {1}), pi3), UsageError);
}

TEST(PolyMulMod, AgreesWithLongDivision) {
  std::mt19937 rng(7);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto& pi : enumerate_monic_irreducibles(Prime(p), 3)) {
      const PolyModulus mod(pi);
      std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
      for (int trial = 0; trial < 20; ++trial) {
        const FpPoly a = poly(p, {coeff(rng), coeff(rng), coeff(rng), coeff(rng)});
        const FpPoly b = poly(p, {coeff(rng), coeff(rng), coeff(rng)});
        const auto expect = oracle::rem(oracle::mul(raw(a), raw(b), p), raw(pi), p);
        EXPECT_EQ(raw(poly_mul_mod(a, b, mod)), expect);
      }
    }
  }
}

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(poly(5, {4, 0, 1}), poly(5, {4, 1})), poly(5, {4, 1}));
  const FpPoly a = poly(5, {2, 0, 3});
  EXPECT_EQ(poly_gcd(a, FpPoly(Prime(5))), monic(a));
  EXPECT_EQ(poly_gcd(poly(3, {1, 0, 1}), poly(3, {2, 0, 1})), poly(3, {1}));
  EXPECT_TRUE(poly_gcd(FpPoly(Prime(3)), FpPoly(Prime(3))).is_zero());
}

TEST(PolyGcd, DividesBothArguments) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> coeff(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const FpPoly common = poly(5, {coeff(rng), 1});
    const FpPoly a = common * poly(5, {coeff(rng), coeff(rng), 1});
    const FpPoly b = common * poly(5, {coeff(rng), 1});
    const FpPoly g = poly_gcd(a, b);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(rem(a, g).is_zero());
    EXPECT_TRUE(rem(b, g).is_zero());
    EXPECT_TRUE(rem(g, common).is_zero());
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(poly(3, {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(poly(5, {1, 0, 1})));
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) EXPECT_TRUE(is_irreducible(poly(p, {0, 1})));
  EXPECT_THROW(is_irreducible(poly(3, {2})), DomainError);
  EXPECT_THROW(is_irreducible(FpPoly(Prime(3))), DomainError);
}

TEST(Irreducible, RabinAgreesWithTrialDivision) {
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t deg = 1; deg <= 4; ++deg) {
      for (const auto& f : oracle::monics_of_degree(p, deg)) {
        ASSERT_EQ(is_irreducible(poly(p, f)), oracle::is_irreducible_trial(f, p))
            << "p=" << p << " f=" << format_poly(poly(p, f));
      }
    }
  }
}

TEST(Irreducible, EnumerationExamples) {
  const auto deg1 = enumerate_monic_irreducibles(Prime(3), 1);
  EXPECT_EQ(deg1, (std::vector<FpPoly>{poly(3, {0, 1}), poly(3, {1, 1}), poly(3, {2, 1})}));
  EXPECT_EQ(enumerate_monic_irreducibles(Prime(3), 2).size(), 3u);
  EXPECT_EQ(enumerate_monic_irreducibles(Prime(5), 2).size(), 10u);
  EXPECT_THROW(enumerate_monic_irreducibles(Prime(3), 0), DomainError);
  EXPECT_THROW(enumerate_monic_irreducibles(Prime(101), 4), ResourceError);
}

TEST(Irreducible, EnumerationMatchesMobiusAndIsOrdered) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      const auto list = enumerate_monic_irreducibles(Prime(p), m);
      ASSERT_EQ(list.size(), oracle::mobius_irreducible_count(p, m)) << p << " " << m;
      for (std::size_t i = 0; i + 1 < list.size(); ++i) {
        EXPECT_TRUE(std::lexicographical_compare(list[i].coeffs().begin(), list[i].coeffs().end(),
                                                 list[i + 1].coeffs().begin(), list[i + 1].coeffs().end()));
      }
      for (const auto& f : list) EXPECT_TRUE(f.is_monic() && f.degree() == static_cast<int>(m));
    }
  }
}

TEST(PolyModulus, RejectsReducibleOrNonMonic) {
  EXPECT_THROW(PolyModulus(poly(5, {1, 0, 1})), DomainError);
  EXPECT_THROW(PolyModulus(poly(3, {1, 0, 2})), DomainError);
  EXPECT_THROW(PolyModulus(poly(3, {1})), DomainError);
}

TEST(Ring, ElementsExamples) {
  const auto z3 = ring_elements(Ring::prime_field(Prime(3)));
  ASSERT_EQ(z3.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(z3[i].residue(), i);
  EXPECT_EQ(ring_elements(quotient(3, {1, 0, 1})).size(), 9u);
  EXPECT_EQ(ring_elements(quotient(5, {0, 1})).size(), 5u);
}

TEST(Ring, IndexRoundTripAndOrder) {
  for (const Ring& ring : small_rings()) {
    const auto elems = ring_elements(ring);
    ASSERT_EQ(elems.size(), ring.cardinality());
    for (std::uint64_t i = 0; i < elems.size(); ++i) {
      EXPECT_EQ(index_of(elems[i]), i);
      EXPECT_EQ(element_at(ring, i), elems[i]);
    }
  }
  const auto f9 = ring_elements(quotient(3, {1, 0, 1}));
  EXPECT_EQ(f9[1].as_poly(), poly(3, {0, 1}));
  EXPECT_EQ(f9[3].as_poly(), poly(3, {1}));
}

TEST(Ring, CanonicalClosure) {
  for (const Ring& ring : small_rings()) {
    const auto elems = ring_elements(ring);
    for (std::size_t i = 0; i < elems.size(); i += 3) {
      for (std::size_t j = 0; j < elems.size(); j += 5) {
        for (const RingElem& r : {add(elems[i], elems[j]), sub(elems[i], elems[j]), mul(elems[i], elems[j])}) {
          EXPECT_EQ(RingElem::from_poly(ring, r.as_poly()), r);
          EXPECT_LT(r.as_poly().degree(), static_cast<int>(ring.degree_m()));
        }
      }
    }
  }
}

TEST(Ring, FromIntegerReduces) {
  const Ring z5 = Ring::prime_field(Prime(5));
  EXPECT_EQ(RingElem::from_integer(z5, -1).residue(), 4u);
  EXPECT_EQ(RingElem::from_integer(z5, 12).residue(), 2u);
  const Ring f9 = quotient(3, {1, 0, 1});
  EXPECT_EQ(RingElem::from_poly(f9, poly(3, {0, 0, 1})).as_poly(), poly(3, {2}));
  EXPECT_THROW(RingElem::from_poly(z5, poly(5, {0, 1})), UsageError);
}

TEST(Budget, EnvironmentOverride) {
  EXPECT_EQ(element_budget(), kDefaultElementBudget);
  ::setenv(std::string(kBudgetEnvVar).c_str(), "50", 1);
  EXPECT_EQ(element_budget(), 50u);
  EXPECT_THROW(require_within_budget(51, element_budget(), "test"), ResourceError);
  ::unsetenv(std::string(kBudgetEnvVar).c_str());
  EXPECT_NO_THROW(require_within_budget(51, element_budget(), "test"));
}

}  // namespace
}  // namespace perimod
