#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betadigits/rational.hpp"

namespace betadigits {

/// Integer polynomial, coefficients listed constant term first.
using IntPoly = std::vector<Integer>;

/// Parses "c0,c1,...,cn" (constant term first). Throws ParseError.
IntPoly parse_int_poly(std::string_view text);
std::string to_string(const IntPoly& p);
/// Human-readable form, e.g. "X^2 - X - 1".
std::string pretty(const IntPoly& p);

/// Dense univariate polynomial over Q, constant term first, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  explicit QPoly(const IntPoly& p);
  static QPoly monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  QPoly derivative() const;
  QPoly monic() const;
  /// X^deg * p(1/X) for deg = degree().
  QPoly reversed() const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd (zero only if both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

struct ExtendedGcd {
  QPoly g;  // monic
  QPoly s;  // s*a + t*b = g
  QPoly t;
};
ExtendedGcd extended_gcd(const QPoly& a, const QPoly& b);

/// Number of distinct real roots in the half-open interval (lo, hi], via a Sturm chain.
int sturm_count(const QPoly& p, const Rational& lo, const Rational& hi);

}  // namespace betadigits
