#include "betadigits/rational.hpp"

#include <cmath>
#include <limits>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) return false;
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from) return false;
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return out.set_str(s, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Integer num, den = 1;
  auto slash = text.find('/');
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) ok = parse_integer(text.substr(slash + 1), den);
  if (!ok) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return 0;
  Integer scaled = floor(q * Rational(Integer(1) << (2 * bits)));
  Integer root = sqrt(scaled);
  Rational r(root, Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (sgn(q) <= 0) return 0;
  Integer scaled = ceil(q * Rational(Integer(1) << (2 * bits)));
  Integer root = sqrt(scaled);
  if (root * root != scaled) root += 1;
  Rational r(root, Integer(1) << bits);
  r.canonicalize();
  return r;
}

Rational rational_above(double x) {
  // Exact conversion, then one ulp outward to absorb the rounding of x.
  double up = std::nextafter(x, std::numeric_limits<double>::infinity());
  Rational r(up);
  return r;
}

Rational rational_below(double x) {
  double down = std::nextafter(x, -std::numeric_limits<double>::infinity());
  Rational r(down);
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace betadigits
