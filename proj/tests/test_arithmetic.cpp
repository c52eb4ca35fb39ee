#include <gtest/gtest.h>

#include <random>

#include "betadigits/ball.hpp"
#include "betadigits/errors.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace betadigits;

namespace {

Rational random_rational(std::mt19937_64& rng, int span = 40) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return fixtures::ratio(num(rng), den(rng));
}

FieldElement random_element(const FieldPtr& F, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < F->degree(); ++i) c.push_back(random_rational(rng));
  return F->from_coords(c);
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational(" 7/1 "), Rational(7));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, SqrtBoundsBracketTheRoot) {
  for (unsigned bits : {8u, 64u, 300u}) {
    const Rational lo = sqrt_lower(Rational(2), bits), hi = sqrt_upper(Rational(2), bits);
    EXPECT_LT(lo * lo, 2);
    EXPECT_GT(hi * hi, 2);
    Rational eps(1);
    eps /= Rational(Integer(1) << bits);
    EXPECT_LE(hi - lo, 2 * eps);
  }
  EXPECT_EQ(sqrt_lower(Rational(9, 4), 20), Rational(3, 2));
}

TEST(Rational, OutwardDoubleConversion) {
  EXPECT_LE(rational_below(0.1), Rational(1, 10));
  EXPECT_GE(rational_above(0.1), Rational(1, 10));
  EXPECT_LT(rational_below(0.5), Rational(1, 2));
  EXPECT_GT(rational_below(0.5), Rational(499999, 1000000));
}

TEST(Polynomial, ParseAndPrint) {
  const IntPoly p = parse_int_poly("-1,-1,1");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(pretty(p), "X^2 - X - 1");
  EXPECT_EQ(to_string(p), "-1,-1,1");
  EXPECT_THROW(parse_int_poly("1,,2"), ParseError);
  EXPECT_THROW(parse_int_poly("1,1/2"), ParseError);
}

TEST(Polynomial, DivisionProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a(1 + rng() % 8), b(1 + rng() % 5);
    for (auto& c : a) c = random_rational(rng);
    for (auto& c : b) c = random_rational(rng);
    b.back() = b.back() == 0 ? Rational(1) : b.back();
    const QPoly A(a), B(b);
    const auto [q, r] = divmod(A, B);
    EXPECT_EQ(q * B + r, A);
    EXPECT_LT(r.degree(), B.degree() == 0 ? 0 : B.degree());
  }
}

TEST(Polynomial, ExtendedGcdBezout) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> common{random_rational(rng), 1};
    std::vector<Rational> a(1 + rng() % 4), b(1 + rng() % 4);
    for (auto& c : a) c = random_rational(rng);
    for (auto& c : b) c = random_rational(rng);
    const QPoly A = QPoly(a) * QPoly(common), B = QPoly(b) * QPoly(common);
    if (A.is_zero() || B.is_zero()) continue;
    const ExtendedGcd eg = extended_gcd(A, B);
    EXPECT_EQ(eg.s * A + eg.t * B, eg.g);
    EXPECT_EQ(eg.g.leading(), 1);
    EXPECT_TRUE(divmod(A, eg.g).second.is_zero());
    EXPECT_TRUE(divmod(B, eg.g).second.is_zero());
    EXPECT_GE(eg.g.degree(), 1);
  }
}

TEST(Polynomial, SturmCountsHalfOpenIntervals) {
  const QPoly cubic(parse_int_poly("-6,11,-6,1"));  // (X-1)(X-2)(X-3)
  EXPECT_EQ(sturm_count(cubic, Rational(1), Rational(3)), 2);
  EXPECT_EQ(sturm_count(cubic, Rational(0), Rational(3)), 3);
  EXPECT_EQ(sturm_count(cubic, Rational(3), Rational(10)), 0);
  EXPECT_EQ(sturm_count(QPoly(parse_int_poly("-2,0,1")), Rational(-2), Rational(2)), 2);
  EXPECT_EQ(sturm_count(QPoly(parse_int_poly("1,0,1")), Rational(-5), Rational(5)), 0);
}

TEST(NumberField, RejectsBadDefiningPolynomials) {
  EXPECT_THROW(NumberField::create(parse_int_poly("1,2")), NotMonic);
  EXPECT_THROW(NumberField::create(parse_int_poly("1,-2,1")), NotSquarefree);
  EXPECT_THROW(NumberField::create(parse_int_poly("5")), ParseError);
}

TEST(NumberField, GoldenProductMatchesHandFormula) {
  const FieldPtr F = fixtures::golden_field();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng),
                   d = random_rational(rng);
    const auto [re, im] = oracles::golden_product(a, b, c, d);
    const FieldElement p = F->from_coords({a, b}) * F->from_coords({c, d});
    EXPECT_EQ(p.coords()[0], re);
    EXPECT_EQ(p.coords()[1], im);
  }
}

TEST(NumberField, RingAxiomsAndInverses) {
  std::mt19937_64 rng(5);
  for (const char* poly : {"-1,-1,1", "2,2,1", "-1,-1,0,1", "1,-1,1,0,-1,0,1,-1,1"}) {
    const FieldPtr F = fixtures::field_of(poly);
    for (int trial = 0; trial < 60; ++trial) {
      const FieldElement x = random_element(F, rng), y = random_element(F, rng), z = random_element(F, rng);
      EXPECT_EQ((x * y) * z, x * (y * z)) << poly;
      EXPECT_EQ(x * (y + z), x * y + x * z) << poly;
      EXPECT_EQ(x * y, y * x) << poly;
      EXPECT_EQ(x - x, F->zero());
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.inverse(), F->one()) << poly << " x = " << x.to_string();
        EXPECT_EQ(x.pow(-3) * x.pow(3), F->one());
      }
    }
  }
}

TEST(NumberField, CompanionMatchesMultiplicationByBeta) {
  std::mt19937_64 rng(9);
  const FieldPtr F = fixtures::field_of("-1,-1,0,1");
  const auto& M = F->companion();
  for (int trial = 0; trial < 50; ++trial) {
    const FieldElement x = random_element(F, rng);
    const FieldElement bx = x.times_beta();
    EXPECT_EQ(bx, x * F->beta());
    for (int i = 0; i < F->degree(); ++i) {
      Rational acc = 0;
      for (int j = 0; j < F->degree(); ++j) acc += Rational(M[i][j]) * x.coords()[j];
      EXPECT_EQ(acc, bx.coords()[i]);
    }
  }
}

TEST(NumberField, ZeroInverseAndZeroDivisor) {
  const FieldPtr F = fixtures::golden_field();
  EXPECT_THROW(F->zero().inverse(), DivisionByZero);
  const FieldPtr reducible = fixtures::field_of("-2,1,1");  // (X - 1)(X + 2)
  EXPECT_THROW(reducible->from_coords({Rational(-1), Rational(1)}).inverse(), ReducibleDetected);
}

TEST(NumberField, IntegralityAndDenominators) {
  const FieldPtr F = fixtures::golden_field();
  const FieldElement x = F->from_coords({Rational(1, 6), Rational(3, 4)});
  EXPECT_FALSE(x.is_integral());
  EXPECT_EQ(x.denominator_lcm(), 12);
  EXPECT_TRUE((x * Rational(12)).is_integral());
  EXPECT_EQ(x.serialize(), (std::vector<std::string>{"1/6", "3/4"}));
}

TEST(Ball, ArithmeticEnclosesExactResults) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational a = random_rational(rng, 1000), b = random_rational(rng, 1000);
    const ComplexBall A = ComplexBall::from_rational(a, 20), B = ComplexBall::from_rational(b, 20);
    const Rational sum_lo = add(A, B, 20).modulus_lower(40), sum_hi = add(A, B, 20).modulus_upper(40);
    const Rational exact_sum = abs(a + b);
    EXPECT_LE(sum_lo, exact_sum);
    EXPECT_GE(sum_hi, exact_sum);
    const ComplexBall P = mul(A, B, 20);
    EXPECT_LE(P.modulus_lower(40), abs(a * b));
    EXPECT_GE(P.modulus_upper(40), abs(a * b));
  }
}

TEST(Embedder, GoldenRatioValues) {
  const FieldPtr F = fixtures::golden_field();
  Embedder phi = fixtures::embedder(F, 0);
  Embedder psi = fixtures::embedder(F, 1);
  EXPECT_NEAR(phi.root().approx_re(), 1.6180339887498949, 1e-12);
  EXPECT_NEAR(psi.root().approx_re(), -0.6180339887498949, 1e-12);
  // phi^10 = 55 phi + 34 = 122.99..., Lucas number 123 minus psi^10.
  EXPECT_EQ(phi.floor_real(F->beta().pow(10)), 122);
  EXPECT_EQ(psi.floor_real(F->beta().pow(10)), 0);
  EXPECT_EQ(phi.floor_real(F->from_coords({Rational(-1), Rational(1)})), 0);  // phi - 1 = 0.618
  EXPECT_EQ(phi.floor_real(F->from_rational(7)), 7);
  EXPECT_EQ(phi.sign_real(F->from_coords({fixtures::ratio(-1618, 1000), Rational(1)})), 1);
  EXPECT_EQ(phi.sign_real(F->zero()), 0);
  EXPECT_EQ(phi.compare_modulus(F->beta(), F->from_rational(fixtures::ratio(-1618034, 1000000))), -1);
  EXPECT_EQ(phi.compare_modulus(F->beta() - F->one(), F->beta().inverse()), 1);  // equal moduli
}

TEST(Embedder, HighPrecisionEmbeddingIsTight) {
  const FieldPtr F = fixtures::gaussian_field();
  Embedder beta = fixtures::embedder(F, 0);
  const ComplexBall b = beta.embed(F->beta().pow(40), 200);  // (-1+i)^40 = 2^20
  EXPECT_LE(b.modulus_lower(200), Rational(1 << 20));
  EXPECT_GE(b.modulus_upper(200), Rational(1 << 20));
  EXPECT_LT(b.modulus_upper(200) - b.modulus_lower(200), Rational(1, 1L << 40));
}
