#pragma once

#include <string>

#include "betadigits/rational.hpp"

namespace betadigits {

/// Exact dyadic rational mantissa * 2^exponent.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(Integer mantissa, long exponent);
  Dyadic(long value) : Dyadic(Integer(value), 0) {}
  explicit Dyadic(const Integer& value) : Dyadic(value, 0) {}

  /// Exact conversion; q must have a power-of-two denominator.
  static Dyadic exact(const Rational& q);
  /// Nearest grid point at or below (resp. above) q with `bits` significant bits.
  static Dyadic below(const Rational& q, long bits);
  static Dyadic above(const Rational& q, long bits);

  const Integer& mantissa() const { return mantissa_; }
  long exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }
  /// floor(log2 |x|) + 1, or a very negative value for zero.
  long magnitude_bits() const;

  Rational to_rational() const;
  double to_double() const;
  Integer floor() const;

  /// Truncate to `bits` significant bits toward -inf; `error` receives an upper bound on the dropped part.
  Dyadic round_down(long bits, Dyadic* error = nullptr) const;
  /// Upper bound with at most `bits` significant bits (for nonnegative radii).
  Dyadic round_up(long bits) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }
  friend int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

 private:
  void normalize();
  Integer mantissa_ = 0;
  long exponent_ = 0;
};

Dyadic abs(const Dyadic& x);

/// Closed disc {z : |z - (re + i im)| <= radius} with dyadic center and radius.
/// Arithmetic is outward-rounded: every result contains all exact results of its inputs.
class ComplexBall {
 public:
  ComplexBall() = default;
  ComplexBall(Dyadic re, Dyadic im, Dyadic radius);
  /// Ball containing q, rounded to `bits` significant bits.
  static ComplexBall from_rational(const Rational& q, long bits);
  static ComplexBall exact(const Dyadic& re, const Dyadic& im = Dyadic()) { return {re, im, Dyadic()}; }

  const Dyadic& re() const { return re_; }
  const Dyadic& im() const { return im_; }
  const Dyadic& radius() const { return radius_; }
  bool is_exact() const { return radius_.is_zero(); }

  /// |center|^2, exact.
  Dyadic center_norm2() const { return re_ * re_ + im_ * im_; }
  /// Cheap upper bound |re| + |im| + radius on every point's modulus.
  Dyadic modulus_upper_cheap() const;
  /// Certified bounds on min / max modulus over the ball, to roughly 2^-bits.
  Rational modulus_lower(unsigned bits = 64) const;
  Rational modulus_upper(unsigned bits = 64) const;

  /// Certified strict comparisons of the modulus of every point with c.
  bool modulus_gt(const Rational& c) const;
  bool modulus_lt(const Rational& c) const;
  bool contains_zero() const;
  bool contains(const ComplexBall& other) const;
  /// Certified sign of the real part (0 when the ball straddles the imaginary axis).
  int real_sign() const;

  std::string to_string() const;

 private:
  Dyadic re_, im_, radius_;
};

ComplexBall add(const ComplexBall& a, const ComplexBall& b, long bits);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b, long bits);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b, long bits);
ComplexBall neg(const ComplexBall& a);
ComplexBall conj(const ComplexBall& a);

}  // namespace betadigits
