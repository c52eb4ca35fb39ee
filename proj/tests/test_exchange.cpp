#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "betadigits/errors.hpp"
#include "betadigits/exchange.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace betadigits;

namespace {

DigitData digits_of(std::vector<std::int64_t> t, std::int64_t bound) {
  DigitData d;
  d.digits = std::move(t);
  d.bound = bound;
  return d;
}

DigitData random_reduced_digits(std::mt19937_64& rng, std::size_t length, std::int64_t T) {
  std::uniform_int_distribution<std::int64_t> digit(-T, T);
  std::vector<std::int64_t> t(length);
  for (auto& x : t) x = digit(rng);
  while (t[0] == 0) t[0] = digit(rng);
  return digits_of(std::move(t), T);
}

std::vector<std::int64_t> random_sparse_set(std::mt19937_64& rng, std::int64_t horizon, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<std::int64_t> g{0};
  for (std::int64_t n = 1; n < horizon; ++n) {
    if (keep(rng)) g.push_back(n);
  }
  return g;
}

}  // namespace

TEST(Reduction, ShiftsDigitsAndRescalesCoefficients) {
  // xi = 1/10 has greedy golden digits starting 0,0,0,0,1,...
  const FieldPtr F = fixtures::golden_field();
  Embedder phi = fixtures::embedder(F);
  const FieldElement xi = F->from_rational(Rational(1, 10));
  const DigitData d = greedy_digits(xi, phi, 40).data;
  const std::vector<FieldElement> A{F->from_rational(-1), F->from_rational(10)};
  const Reduction r = reduce_to_N0(d, A);
  ASSERT_EQ(r.first_nonzero, d.first_nonzero().value());
  EXPECT_GT(r.first_nonzero, 1u);
  EXPECT_NE(r.digits.t(1), 0);
  for (std::size_t n = 1; n <= r.digits.size(); ++n) EXPECT_EQ(r.digits.t(n), d.t(n + r.first_nonzero - 1));
  // The shifted point beta^(N0-1) xi is a root of the rescaled coefficients.
  const FieldElement shifted = F->beta().pow(static_cast<std::int64_t>(r.first_nonzero) - 1) * xi;
  EXPECT_EQ(r.coefficients[0] + r.coefficients[1] * shifted, F->zero());
}

TEST(Reduction, QuadraticCoefficientsScaleByPowers) {
  const FieldPtr F = fixtures::golden_field();
  const DigitData d = digits_of({0, 0, 1, 1}, 1);
  const std::vector<FieldElement> A{F->from_rational(2), F->from_rational(3), F->from_rational(5)};
  const Reduction r = reduce_to_N0(d, A);
  EXPECT_EQ(r.first_nonzero, 3u);
  const FieldElement b2 = F->beta().pow(2);
  EXPECT_EQ(r.coefficients[0], A[0] * b2 * b2);
  EXPECT_EQ(r.coefficients[1], A[1] * b2);
  EXPECT_EQ(r.coefficients[2], A[2]);
}

TEST(Reduction, AllZeroAndUnreducedInputs) {
  const FieldPtr F = fixtures::golden_field();
  EXPECT_THROW(reduce_to_N0(digits_of({0, 0, 0}, 1), {F->one(), F->one()}), AllZero);
  EXPECT_THROW(exchange_sequence(digits_of({0, 1, 0}, 1)), NotReduced);
}

TEST(ExchangeSequence, DifferencesSupportAndExchanges) {
  const ExchangeData e = exchange_sequence(digits_of({1, 0, 0, 1, 1, -1}, 1));
  EXPECT_EQ(e.s, (std::vector<std::int64_t>{1, -1, 0, 1, 0, -2}));
  EXPECT_EQ(e.support, (std::vector<std::int64_t>{0, 1, 3, 5}));
  EXPECT_EQ(e.exchanges, (std::vector<std::int64_t>{1, 3, 5}));
  EXPECT_EQ(e.bound, 1);
}

TEST(ExchangeSequence, GammaCountsMatchSupport) {
  // For n >= 1, n is in Gamma exactly when t_n != t_{n+1}.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const DigitData d = random_reduced_digits(rng, 200, 2);
    const ExchangeData e = exchange_sequence(d);
    for (std::int64_t N = 1; N < 199; N += 7) {
      EXPECT_EQ(lambda_count(e.support, N + 1) - 1, gamma_count(d, static_cast<std::size_t>(N)));
    }
  }
}

TEST(Telescoping, ExactOnRandomBoundedSequences) {
  std::mt19937_64 rng(1234);
  const std::vector<FieldPtr> fields{fixtures::golden_field(), fixtures::gaussian_field(),
                                     fixtures::field_of("-1,-1,0,1")};
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const FieldPtr& F = fields[static_cast<std::size_t>(trial) % fields.size()];
    const std::int64_t T = 1 + static_cast<std::int64_t>(rng() % 4);
    const std::size_t length = 1 + rng() % 60;
    const DigitData d = random_reduced_digits(rng, length, T);
    const ExchangeData e = exchange_sequence(d);
    const std::size_t M = 1 + rng() % length;
    ASSERT_TRUE(telescoping_identity_holds(F, d, e, M)) << "trial " << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 1000);
}

TEST(Telescoping, DetectsCorruptedSequence) {
  std::mt19937_64 rng(99);
  const FieldPtr F = fixtures::golden_field();
  const DigitData d = random_reduced_digits(rng, 30, 2);
  ExchangeData e = exchange_sequence(d);
  e.s[7] += 1;
  EXPECT_FALSE(telescoping_identity_holds(F, d, e, 20));
  EXPECT_TRUE(telescoping_identity_holds(F, d, e, 5));
}

TEST(EtaIdentity, TailWithinBound) {
  const FieldPtr F = fixtures::golden_field();
  Embedder phi = fixtures::embedder(F);
  const DigitData d = greedy_digits(F->from_rational(Rational(3, 7)), phi, 80).data;
  const DigitData reduced = reduce_to_N0(d, {F->one(), F->one()}).digits;
  const ExchangeData e = exchange_sequence(reduced);
  for (std::size_t M : {5u, 30u, 60u}) {
    const EtaCheck c = verify_eta_identity(F, phi, reduced, e, M);
    EXPECT_TRUE(c.ok) << "M = " << M;
    EXPECT_LE(c.gap_upper, c.allowed);
  }
}

TEST(Sumsets, MatchBruteForceAndObeyCountLaw) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t horizon = 20 + static_cast<std::int64_t>(rng() % 180);
    const double density = 0.02 + 0.2 * static_cast<double>(rng() % 100) / 100.0;
    const std::vector<std::int64_t> gamma = random_sparse_set(rng, horizon, density);
    const std::vector<Sumset> chain = sumset_chain(gamma, 4, horizon);
    ASSERT_EQ(chain.size(), 5u);
    EXPECT_EQ(chain[0].members, (std::vector<std::int64_t>{0}));
    for (int k = 1; k <= 4; ++k) {
      const auto expected = oracles::sumset(gamma, k, horizon);
      const auto& members = chain[static_cast<std::size_t>(k)].members;
      ASSERT_EQ(std::vector<std::int64_t>(expected.begin(), expected.end()), members) << "k = " << k;
      EXPECT_EQ(sumset(gamma, k, horizon).members, members);
      // 0 in Gamma gives (k-1)Gamma inside kGamma.
      const auto& prev = chain[static_cast<std::size_t>(k - 1)].members;
      EXPECT_TRUE(std::includes(members.begin(), members.end(), prev.begin(), prev.end()));
      for (std::int64_t N = 1; N <= horizon; N += 1 + N / 4) {
        const auto base = static_cast<double>(lambda_count(gamma, N));
        EXPECT_LE(static_cast<double>(lambda_count(members, N)), std::pow(base, k));
      }
    }
  }
}

TEST(Sumsets, LambdaCountBoundaries) {
  const std::vector<std::int64_t> g{0, 3, 7};
  EXPECT_EQ(lambda_count(g, 0), 0);
  EXPECT_EQ(lambda_count(g, 1), 1);
  EXPECT_EQ(lambda_count(g, 7), 2);
  EXPECT_EQ(lambda_count(g, 8), 3);
}
