#include "betadigits/linear_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "betadigits/errors.hpp"

namespace betadigits {

BCoefficients compute_B(const std::vector<FieldElement>& A, const FieldElement& pi) {
  if (A.size() < 2) throw ParseError("need A_0..A_D with D >= 1");
  if (A.back().is_zero()) throw OutOfRange("leading coefficient A_D is zero");
  const FieldPtr& field = pi.field();
  const FieldElement pi_inv = pi.inverse();
  const FieldElement beta_minus_one = field->beta() - field->one();
  const int D = static_cast<int>(A.size()) - 1;
  BCoefficients out;
  out.B.resize(A.size());
  FieldElement factor = pi_inv;  // (beta-1)^(D-k) / pi, built from k = D downwards
  for (int k = D; k >= 0; --k) {
    out.B[static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(k)] * factor;
    factor *= beta_minus_one;
  }
  for (int k = 1; k <= D; ++k) {
    if (!out[k].is_integral()) throw HypothesisIIViolated(k);
  }
  return out;
}

namespace {

using State = std::vector<Integer>;

struct CompanionModQ {
  const IntPoly& poly;
  Integer q;

  State operator()(const State& v) const {
    const std::size_t d = v.size();
    State w(d);
    const Integer& top = v[d - 1];
    for (std::size_t j = 0; j < d; ++j) {
      w[j] = (j ? v[j - 1] : Integer(0)) - top * poly[j];
      mpz_fdiv_r(w[j].get_mpz_t(), w[j].get_mpz_t(), q.get_mpz_t());
    }
    return w;
  }
};

bool is_zero_state(const State& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; });
}

}  // namespace

HypothesisIIIResult check_hypothesis_iii(const FieldElement& B0) {
  HypothesisIIIResult out;
  out.modulus = B0.denominator_lcm();
  out.integral_at_zero = out.modulus == 1;
  if (out.integral_at_zero) {
    out.witness = 1;
    return out;
  }
  const CompanionModQ step{B0.field()->poly(), out.modulus};
  State start;
  for (const auto& c : B0.coords()) {
    Integer z = c.get_num() * (out.modulus / c.get_den());
    mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), out.modulus.get_mpz_t());
    start.push_back(z);
  }
  // Brent: the orbit is eventually periodic and 0 is a fixed point, so (iii) fails
  // exactly when the cycle reached is {0}.
  State tortoise = start;
  State hare = step(start);
  std::uint64_t power = 1, lam = 1;
  out.steps = 1;
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = step(hare);
    ++lam;
    ++out.steps;
  }
  if (!is_zero_state(hare)) {
    out.holds = true;
    return out;
  }
  State x = start;
  std::int64_t n = 0;
  while (!is_zero_state(x)) {
    x = step(x);
    ++n;
  }
  out.witness = n;
  return out;
}

RhoTable::RhoTable(const ExchangeData& e, int order, std::int64_t length) : length_(length), digit_bound_(e.bound) {
  if (order < 1) throw std::invalid_argument("RhoTable: order must be at least 1");
  if (length < 0 || static_cast<std::size_t>(length) > e.s.size()) {
    throw HorizonExceeded("rho table of length " + std::to_string(length) + " needs more of the s-sequence (have " +
                          std::to_string(e.s.size()) + ")");
  }
  const auto len = static_cast<std::size_t>(length);
  rows_.emplace_back(e.s.begin(), e.s.begin() + length);
  std::vector<__int128> acc(len);
  for (int k = 2; k <= order; ++k) {
    const std::vector<std::int64_t>& prev = rows_.back();
    std::fill(acc.begin(), acc.end(), 0);
    for (std::int64_t j : e.support) {
      if (j >= length) break;
      const __int128 sj = e.s[static_cast<std::size_t>(j)];
      for (std::size_t m = static_cast<std::size_t>(j); m < len; ++m) acc[m] += sj * prev[m - static_cast<std::size_t>(j)];
    }
    std::vector<std::int64_t> row(len);
    for (std::size_t m = 0; m < len; ++m) {
      if (acc[m] > INT64_MAX || acc[m] < INT64_MIN) {
        throw std::overflow_error("rho(" + std::to_string(k) + "; " + std::to_string(m) + ") exceeds 64 bits");
      }
      row[m] = static_cast<std::int64_t>(acc[m]);
    }
    rows_.push_back(std::move(row));
  }
}

std::int64_t RhoTable::operator()(int k, std::int64_t m) const {
  if (k < 1 || k > order()) throw std::invalid_argument("rho: order out of range");
  if (m < 0 || m >= length_) {
    throw HorizonExceeded("rho(" + std::to_string(k) + "; " + std::to_string(m) + ") lies beyond the horizon " +
                          std::to_string(length_));
  }
  return rows_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m)];
}

std::vector<FieldElement> Y_table(const BCoefficients& B, const RhoTable& rho, std::int64_t count) {
  if (count > rho.length()) {
    throw HorizonExceeded("Y table of length " + std::to_string(count) + " exceeds the rho horizon");
  }
  std::vector<FieldElement> Y;
  Y.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  const int D = B.D();
  FieldElement y = -B[0];
  for (std::int64_t R = 0; R < count; ++R) {
    if (R > 0) y = y.times_beta();
    for (int k = 1; k <= D; ++k) {
      const std::int64_t r = rho(k, R);
      if (r != 0) y -= B[k] * Rational(r);
    }
    Y.push_back(y);
  }
  return Y;
}

FieldElement Y_R_exact(std::int64_t R, const BCoefficients& B, const RhoTable& rho) {
  if (R < 0 || R >= rho.length()) throw HorizonExceeded("Y_" + std::to_string(R) + " lies beyond the rho horizon");
  const FieldPtr& field = B[0].field();
  std::vector<FieldElement> powers{field->one()};
  for (std::int64_t i = 1; i <= R; ++i) powers.push_back(powers.back().times_beta());
  FieldElement y = -(B[0] * powers.back());
  for (int k = 1; k <= B.D(); ++k) {
    FieldElement inner = field->zero();
    for (std::int64_t j = 0; j <= R; ++j) {
      const std::int64_t r = rho(k, j);
      if (r != 0) inner += powers[static_cast<std::size_t>(R - j)] * Rational(r);
    }
    y -= B[k] * inner;
  }
  return y;
}

ZeroScan scan_Y_zeros(const std::vector<FieldElement>& Y, const BCoefficients& B) {
  ZeroScan out;
  FieldElement shifted = B[0];  // B_0 beta^R
  for (std::size_t R = 0; R < Y.size(); ++R) {
    if (R > 0) shifted = shifted.times_beta();
    if (!Y[R].is_zero()) continue;
    if (!shifted.is_integral()) {
      throw IdentityFailure("Y_" + std::to_string(R) + " = 0 but B_0 beta^R is not in Z[beta]");
    }
    out.zeros.push_back(static_cast<std::int64_t>(R));
  }
  return out;
}

SeriesCheck series_consistency(std::int64_t R, std::int64_t terms, const FieldElement& Y_R, const BCoefficients& B,
                               const RhoTable& rho, Embedder& beta) {
  if (terms < 1) throw std::invalid_argument("series_consistency: need at least one term");
  if (R + terms >= rho.length()) {
    throw HorizonExceeded("series check at R = " + std::to_string(R) + " needs rho up to " +
                          std::to_string(R + terms));
  }
  const FieldPtr& field = B[0].field();
  const FieldElement inv_pow = field->beta().pow(-terms);
  FieldElement series = field->zero();
  for (int k = 1; k <= B.D(); ++k) {
    FieldElement acc = field->zero();
    for (std::int64_t m = 1; m <= terms; ++m) acc = acc.times_beta() + field->from_rational(Rational(rho(k, m + R)));
    series += B[k] * acc;
  }
  series *= inv_pow;
  const FieldElement diff = Y_R - series;

  SeriesCheck out;
  const long base_bits = beta.policy().initial_bits;
  const Rational b = beta.embed(field->beta(), base_bits).modulus_lower(64);
  if (b <= 1) throw OutOfRange("series check needs |beta| > 1");
  // sum_{m > M} b^-m (2T(m+R+1))^k <= first term / (1 - ratio), ratio taken at m = M+1.
  Rational b_pow = 1;
  for (std::int64_t i = 0; i <= terms; ++i) b_pow *= b;
  Rational tail = 0;
  for (int k = 1; k <= B.D(); ++k) {
    const Rational base(Integer(2 * rho.digit_bound() * (R + terms + 2)));
    Rational first = 1;
    for (int i = 0; i < k; ++i) first *= base;
    Rational growth = 1;
    const Rational step(Integer(R + terms + 3), Integer(R + terms + 2));
    for (int i = 0; i < k; ++i) growth *= step;
    const Rational ratio = growth / b;
    if (ratio >= 1) throw HorizonExceeded("series check: too few terms for a convergent tail bound");
    const Rational Bk = beta.embed(B[k], base_bits).modulus_upper(64);
    tail += Bk * first / (b_pow * (1 - ratio));
  }
  out.tail_bound = tail;
  for (long bits = 2 * base_bits;; bits *= 2) {
    out.difference_upper = beta.embed(diff, bits).modulus_upper(static_cast<unsigned>(bits));
    out.ok = out.difference_upper <= out.tail_bound;
    if (out.ok || 4 * bits > beta.policy().cap_bits) break;
  }
  return out;
}

std::int64_t GapStructure::interval_of(std::int64_t R) const {
  if (R < 0 || R >= horizon) throw NotInGapInterior("R = " + std::to_string(R) + " lies outside [0, N)");
  return std::upper_bound(points.begin(), points.end(), R) - points.begin();
}

GapStructure gap_structure(const Sumset& top, std::int64_t N) {
  GapStructure g;
  g.horizon = N;
  for (std::int64_t i : top.members) {
    if (i >= N) break;
    g.points.push_back(i);
  }
  if (g.points.empty() || g.points.front() != 0) g.points.insert(g.points.begin(), 0);
  g.points.push_back(N);
  return g;
}

bool verify_recursion(std::int64_t R, std::int64_t h, const BCoefficients& B, const RhoTable& rho,
                      const GapStructure& G) {
  if (h < 1 || h > G.tau()) throw NotInGapInterior("interval index " + std::to_string(h) + " out of range");
  const auto [left, right] = G.interval(h);
  if (!(left < R && R < right)) {
    throw NotInGapInterior("R = " + std::to_string(R) + " is not strictly inside I_" + std::to_string(h) + " = [" +
                           std::to_string(left) + ", " + std::to_string(right) + ")");
  }
  const int D = B.D();
  for (int k = 1; k < D; ++k) {
    if (rho(k, R) != 0) return false;
  }
  const FieldPtr& field = B[0].field();
  const FieldElement beta_inv = field->beta().inverse();
  const FieldElement lhs = Y_R_exact(R - 1, B, rho);
  const FieldElement rhs = (B[D] * Rational(rho(D, R)) + Y_R_exact(R, B, rho)) * beta_inv;
  return lhs == rhs;
}

std::vector<bool> threshold_flags(const std::vector<FieldElement>& Y, const BCoefficients& B, Embedder& beta) {
  std::vector<bool> above(Y.size());
  const FieldElement two_beta = B[0].field()->beta() * Rational(2);
  const FieldElement& top = B[B.D()];
  for (std::size_t R = 0; R < Y.size(); ++R) above[R] = beta.compare_modulus(two_beta * Y[R], top) >= 0;
  return above;
}

std::int64_t y_N_count(const std::vector<bool>& above, std::int64_t N) {
  if (N > static_cast<std::int64_t>(above.size())) throw HorizonExceeded("y_N beyond the Y table");
  return std::count(above.begin(), above.begin() + N, true);
}

GapLemmaCheck check_gap_lemma(const GapStructure& G, const std::vector<bool>& above, double c10, double log_beta_N) {
  if (G.horizon > static_cast<std::int64_t>(above.size())) throw HorizonExceeded("gap check beyond the Y table");
  GapLemmaCheck out;
  out.allowed = 2 * c10 * log_beta_N;
  const double offset = 3 * c10 * log_beta_N;
  std::int64_t last = -1;  // latest R' < R with |Y_R'| >= C_9; intervals are consecutive
  for (std::int64_t h = 1; h <= G.tau(); ++h) {
    const auto [left, right] = G.interval(h);
    for (std::int64_t R = left; R < right; ++R) {
      if (static_cast<double>(R) > static_cast<double>(left) + offset) {
        ++out.admissible;
        const std::int64_t dist = last < 0 ? R + 1 : R - last;
        out.worst_distance = std::max(out.worst_distance, dist);
        if (last < 0 || static_cast<double>(dist) > out.allowed) ++out.violations;
      }
      if (above[static_cast<std::size_t>(R)]) last = R;
    }
  }
  return out;
}

}  // namespace betadigits
