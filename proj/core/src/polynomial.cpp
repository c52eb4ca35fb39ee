#include "betadigits/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "betadigits/errors.hpp"

namespace betadigits {

IntPoly parse_int_poly(std::string_view text) {
  IntPoly out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Rational q = parse_rational(token);
    if (q.get_den() != 1) throw ParseError("polynomial coefficient is not an integer: '" + std::string(token) + "'");
    out.push_back(q.get_num());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (out.size() < 2) throw ParseError("polynomial must be nonconstant: '" + std::string(text) + "'");
  return out;
}

std::string to_string(const IntPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s;
}

std::string pretty(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
  coeffs_.reserve(p.size());
  for (const auto& c : p) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  Rational lead = leading();
  std::vector<Rational> v(coeffs_);
  for (auto& c : v) c /= lead;
  return QPoly(std::move(v));
}

QPoly QPoly::reversed() const {
  std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
  return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& c : v) c = -c;
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const Rational& c, const QPoly& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += betadigits::to_string(coeffs_[i]);
  }
  return "[" + s + "]";
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> r(a.coeffs());
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  const auto& bc = b.coeffs();
  const Rational lead = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Rational f = r[i + b.degree()] / lead;
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= f * bc[j];
  }
  r.resize(b.degree());
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  QPoly s0 = QPoly({Rational(1)}), s1;
  QPoly t0, t1 = QPoly({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {QPoly(), QPoly(), QPoly()};
  Rational inv_lead = 1 / r0.leading();
  return {inv_lead * r0, inv_lead * s0, inv_lead * t0};
}

namespace {

int sign_changes(const std::vector<QPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  std::vector<QPoly> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace betadigits
