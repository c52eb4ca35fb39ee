#include "betadigits/ball.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <limits>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

constexpr long kRadiusBits = 30;

long bit_length(const Integer& z) {
  if (z == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

Integer shift_left(const Integer& z, unsigned long n) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), n);
  return r;
}

}  // namespace

Dyadic::Dyadic(Integer mantissa, long exponent) : mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<long>(tz);
  }
}

Dyadic Dyadic::exact(const Rational& q) {
  const Integer& den = q.get_den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::invalid_argument("Dyadic::exact: denominator is not a power of two");
  }
  long shift = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
  return Dyadic(q.get_num(), -shift);
}

namespace {

// floor (round_up=false) or ceil of q / 2^e.
Integer scaled(const Rational& q, long e, bool round_up) {
  Integer num = q.get_num();
  Integer den = q.get_den();
  if (e < 0) {
    num = shift_left(num, static_cast<unsigned long>(-e));
  } else {
    den = shift_left(den, static_cast<unsigned long>(e));
  }
  Integer r;
  if (round_up) {
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return r;
}

long rational_exponent_for(const Rational& q, long bits) {
  long mag = bit_length(abs(q.get_num())) - bit_length(q.get_den());
  return mag - bits - 1;
}

}  // namespace

Dyadic Dyadic::below(const Rational& q, long bits) {
  if (q == 0) return {};
  if (mpz_popcount(q.get_den_mpz_t()) == 1 && bit_length(abs(q.get_num())) <= bits) return exact(q);
  long e = rational_exponent_for(q, bits);
  return Dyadic(scaled(q, e, false), e);
}

Dyadic Dyadic::above(const Rational& q, long bits) {
  if (q == 0) return {};
  if (mpz_popcount(q.get_den_mpz_t()) == 1 && bit_length(abs(q.get_num())) <= bits) return exact(q);
  long e = rational_exponent_for(q, bits);
  return Dyadic(scaled(q, e, true), e);
}

long Dyadic::magnitude_bits() const {
  if (mantissa_ == 0) return std::numeric_limits<long>::min() / 4;
  return bit_length(abs(mantissa_)) + exponent_;
}

Rational Dyadic::to_rational() const {
  if (exponent_ >= 0) return Rational(shift_left(mantissa_, static_cast<unsigned long>(exponent_)));
  Rational r(mantissa_, shift_left(Integer(1), static_cast<unsigned long>(-exponent_)));
  r.canonicalize();
  return r;
}

double Dyadic::to_double() const {
  if (mantissa_ == 0) return 0.0;
  long exp2 = 0;
  double m = mpz_get_d_2exp(&exp2, mantissa_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(exp2 + exponent_));
}

Integer Dyadic::floor() const {
  if (exponent_ >= 0) return shift_left(mantissa_, static_cast<unsigned long>(exponent_));
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), mantissa_.get_mpz_t(), static_cast<unsigned long>(-exponent_));
  return r;
}

Dyadic Dyadic::round_down(long bits, Dyadic* error) const {
  long len = bit_length(abs(mantissa_));
  if (len <= bits) {
    if (error) *error = Dyadic();
    return *this;
  }
  unsigned long shift = static_cast<unsigned long>(len - bits);
  Integer m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  long e = exponent_ + static_cast<long>(shift);
  if (error) *error = Dyadic(Integer(1), e);
  return Dyadic(std::move(m), e);
}

Dyadic Dyadic::round_up(long bits) const {
  long len = bit_length(abs(mantissa_));
  if (len <= bits) return *this;
  unsigned long shift = static_cast<unsigned long>(len - bits);
  Integer m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  return Dyadic(std::move(m), exponent_ + static_cast<long>(shift));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ <= b.exponent_) {
    return Dyadic(a.mantissa_ + shift_left(b.mantissa_, static_cast<unsigned long>(b.exponent_ - a.exponent_)),
                  a.exponent_);
  }
  return Dyadic(shift_left(a.mantissa_, static_cast<unsigned long>(a.exponent_ - b.exponent_)) + b.mantissa_,
                b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

int cmp(const Dyadic& a, const Dyadic& b) { return (a - b).sign(); }

Dyadic abs(const Dyadic& x) { return x.sign() < 0 ? -x : x; }

ComplexBall::ComplexBall(Dyadic re, Dyadic im, Dyadic radius)
    : re_(std::move(re)), im_(std::move(im)), radius_(std::move(radius)) {
  if (radius_.sign() < 0) throw std::invalid_argument("ComplexBall: negative radius");
}

ComplexBall ComplexBall::from_rational(const Rational& q, long bits) {
  Dyadic lo = Dyadic::below(q, bits);
  Rational err = q - lo.to_rational();
  return {lo, Dyadic(), Dyadic::above(err, kRadiusBits)};
}

Dyadic ComplexBall::modulus_upper_cheap() const { return abs(re_) + abs(im_) + radius_; }

Rational ComplexBall::modulus_lower(unsigned bits) const {
  Rational v = sqrt_lower(center_norm2().to_rational(), bits) - radius_.to_rational();
  return v > 0 ? v : Rational(0);
}

Rational ComplexBall::modulus_upper(unsigned bits) const {
  return sqrt_upper(center_norm2().to_rational(), bits) + radius_.to_rational();
}

bool ComplexBall::modulus_gt(const Rational& c) const {
  Rational t = c + radius_.to_rational();
  if (t < 0) return true;
  return center_norm2().to_rational() > t * t;
}

bool ComplexBall::modulus_lt(const Rational& c) const {
  Rational t = c - radius_.to_rational();
  if (t <= 0) return false;
  return center_norm2().to_rational() < t * t;
}

bool ComplexBall::contains_zero() const { return center_norm2() <= radius_ * radius_; }

bool ComplexBall::contains(const ComplexBall& other) const {
  Dyadic slack = radius_ - other.radius_;
  if (slack.sign() < 0) return false;
  Dyadic dr = re_ - other.re_, di = im_ - other.im_;
  return dr * dr + di * di <= slack * slack;
}

int ComplexBall::real_sign() const {
  if ((re_ - radius_).sign() > 0) return 1;
  if ((re_ + radius_).sign() < 0) return -1;
  return 0;
}

std::string ComplexBall::to_string() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17gi +/- %.3g)", re_.to_double(), im_.to_double(),
                radius_.to_double());
  return buf;
}

ComplexBall add(const ComplexBall& a, const ComplexBall& b, long bits) {
  Dyadic er, ei;
  Dyadic re = (a.re() + b.re()).round_down(bits, &er);
  Dyadic im = (a.im() + b.im()).round_down(bits, &ei);
  return {re, im, (a.radius() + b.radius() + er + ei).round_up(kRadiusBits)};
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b, long bits) { return add(a, neg(b), bits); }

ComplexBall mul(const ComplexBall& a, const ComplexBall& b, long bits) {
  Dyadic er, ei;
  Dyadic re = (a.re() * b.re() - a.im() * b.im()).round_down(bits, &er);
  Dyadic im = (a.re() * b.im() + a.im() * b.re()).round_down(bits, &ei);
  Dyadic ma = abs(a.re()) + abs(a.im());
  Dyadic mb = abs(b.re()) + abs(b.im());
  Dyadic rad = ma * b.radius() + mb * a.radius() + a.radius() * b.radius() + er + ei;
  return {re, im, rad.round_up(kRadiusBits)};
}

ComplexBall neg(const ComplexBall& a) { return {-a.re(), -a.im(), a.radius()}; }

ComplexBall conj(const ComplexBall& a) { return {a.re(), -a.im(), a.radius()}; }

}  // namespace betadigits
