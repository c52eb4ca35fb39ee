#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

// Sign of p + q sqrt5.
int sign_sqrt5(const mpz_class& p, const mpz_class& q) {
  const int sp = sgn(p), sq = sgn(q);
  if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const mpz_class lhs = p * p, rhs = 5 * q * q;
  return lhs > rhs ? sp : sq;
}

// floor((u + v sqrt5) / w) for w > 0.
mpz_class floor_sqrt5(const mpz_class& u, const mpz_class& v, const mpz_class& w) {
  const double estimate = (u.get_d() + v.get_d() * std::sqrt(5.0)) / w.get_d();
  mpz_class k = static_cast<long>(std::floor(estimate));
  while (sign_sqrt5(u - k * w, v) < 0) --k;
  while (sign_sqrt5(u - (k + 1) * w, v) >= 0) ++k;
  return k;
}

}  // namespace

std::vector<std::int64_t> golden_greedy(mpz_class a, mpz_class b, mpz_class c, std::size_t count) {
  if (c <= 0) throw std::invalid_argument("denominator must be positive");
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // beta x = ((a + 5b) + (a + b) sqrt5) / (2c)
    mpz_class u = a + 5 * b, v = a + b, w = 2 * c;
    const mpz_class t = floor_sqrt5(u, v, w);
    out.push_back(t.get_si());
    u -= t * w;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
    a = u / g;
    b = v / g;
    c = w / g;
  }
  return out;
}

std::vector<std::vector<mpz_class>> rho(const std::vector<std::int64_t>& s, int order, std::size_t length) {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<mpz_class> base(length);
  for (std::size_t m = 0; m < length; ++m) base[m] = static_cast<long>(s.at(m));
  rows.push_back(base);
  for (int k = 2; k <= order; ++k) {
    std::vector<mpz_class> next(length, 0);
    for (std::size_t m = 0; m < length; ++m) {
      for (std::size_t j = 0; j <= m; ++j) next[m] += base[j] * rows.back()[m - j];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

std::set<std::int64_t> sumset(const std::vector<std::int64_t>& gamma, int order, std::int64_t horizon) {
  std::set<std::int64_t> current{0};
  for (int k = 0; k < order; ++k) {
    std::set<std::int64_t> next;
    for (std::int64_t x : current) {
      for (std::int64_t g : gamma) {
        if (x + g < horizon) next.insert(x + g);
      }
    }
    current = std::move(next);
  }
  return current;
}

std::optional<std::int64_t> integral_power(const betadigits::FieldElement& B0, std::int64_t limit) {
  betadigits::FieldElement x = B0;
  const betadigits::FieldElement beta = B0.field()->beta();
  for (std::int64_t n = 1; n <= limit; ++n) {
    x = x * beta;
    bool integral = true;
    for (const auto& c : x.coords()) integral = integral && c.get_den() == 1;
    if (integral) return n;
  }
  return std::nullopt;
}

std::pair<mpq_class, mpq_class> golden_product(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                               const mpq_class& d) {
  // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, x^2 = x + 1
  return {a * c + b * d, a * d + b * c + b * d};
}

}  // namespace oracles
