#include "betadigits/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

// ---------------------------------------------------------------------------
// Floating approximations (uncertified). Only used to propose centers; every
// enclosure handed out is certified with exact dyadic arithmetic below.

struct Approx {
  mpf_class re, im;
};

class MpfComplexOps {
 public:
  explicit MpfComplexOps(unsigned long prec) : prec_(prec) {}

  mpf_class num(double v) const { return mpf_class(v, prec_); }
  mpf_class num(const Integer& v) const { return mpf_class(v, prec_); }
  Approx make(double re, double im) const { return {num(re), num(im)}; }

  Approx mul(const Approx& a, const Approx& b) const {
    Approx r{num(0), num(0)};
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
  }
  Approx div(const Approx& a, const Approx& b) const {
    mpf_class den(b.re * b.re + b.im * b.im, prec_);
    Approx r{num(0), num(0)};
    r.re = (a.re * b.re + a.im * b.im) / den;
    r.im = (a.im * b.re - a.re * b.im) / den;
    return r;
  }
  Approx sub(const Approx& a, const Approx& b) const {
    Approx r{num(0), num(0)};
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
  }
  mpf_class abs2(const Approx& a) const { return mpf_class(a.re * a.re + a.im * a.im, prec_); }

  // p(z) and p'(z) by Horner.
  void eval(const IntPoly& p, const Approx& z, Approx& value, Approx& deriv) const {
    value = {num(p.back()), num(0)};
    deriv = {num(0), num(0)};
    for (std::size_t i = p.size() - 1; i-- > 0;) {
      deriv = mul(deriv, z);
      deriv.re += value.re;
      deriv.im += value.im;
      value = mul(value, z);
      value.re += mpf_class(p[i], prec_);
    }
  }

  Approx rebase(const Approx& a) const { return {mpf_class(a.re, prec_), mpf_class(a.im, prec_)}; }

 private:
  unsigned long prec_;
};

std::vector<Approx> initial_guesses(const IntPoly& p, const MpfComplexOps& ops) {
  const int d = static_cast<int>(p.size()) - 1;
  // Fujiwara-type bound 2 * max |a_{d-k}|^(1/k).
  double bound = 0;
  for (int k = 1; k <= d; ++k) {
    double a = std::fabs(p[static_cast<std::size_t>(d - k)].get_d());
    if (a > 0) bound = std::max(bound, std::pow(a, 1.0 / k));
  }
  double radius = std::max(1.0, bound);
  std::vector<Approx> z;
  for (int k = 0; k < d; ++k) {
    double theta = 2.0 * M_PI * k / d + 0.7;
    z.push_back(ops.make(radius * std::cos(theta), radius * std::sin(theta)));
  }
  return z;
}

// Aberth-Ehrlich simultaneous iteration (Gauss-Seidel sweep).
void aberth(const IntPoly& p, std::vector<Approx>& z, unsigned long prec, int max_iter) {
  MpfComplexOps ops(prec);
  for (auto& w : z) w = ops.rebase(w);
  const std::size_t d = z.size();
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec > 16 ? prec - 12 : 4);
  mpf_class tol2(tol * tol, prec);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < d; ++k) {
      Approx value, deriv;
      ops.eval(p, z[k], value, deriv);
      if (sgn(value.re) == 0 && sgn(value.im) == 0) continue;
      if (sgn(ops.abs2(deriv)) == 0) {
        z[k].re += tol;
        converged = false;
        continue;
      }
      Approx ratio = ops.div(value, deriv);
      Approx sum{ops.num(0), ops.num(0)};
      for (std::size_t j = 0; j < d; ++j) {
        if (j == k) continue;
        Approx diff = ops.sub(z[k], z[j]);
        if (sgn(ops.abs2(diff)) == 0) {
          diff.re = tol;
        }
        Approx inv = ops.div({ops.num(1), ops.num(0)}, diff);
        sum.re += inv.re;
        sum.im += inv.im;
      }
      Approx denom = ops.sub({ops.num(1), ops.num(0)}, ops.mul(ratio, sum));
      Approx step = sgn(ops.abs2(denom)) == 0 ? ratio : ops.div(ratio, denom);
      z[k] = ops.sub(z[k], step);
      mpf_class scale(1 + ops.abs2(z[k]), prec);
      if (ops.abs2(step) > tol2 * scale) converged = false;
    }
    if (converged) break;
  }
}

Dyadic to_dyadic(const mpf_class& x, long bits) {
  Rational q;
  mpq_set_f(q.get_mpq_t(), x.get_mpf_t());
  return Dyadic::exact(q).round_down(bits);
}

mpf_class to_mpf(const Rational& q, long prec) {
  mpf_class f(0, static_cast<mp_bitcnt_t>(prec));
  mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
  return f;
}

struct ExactPoint {
  Dyadic re, im;
};

Dyadic sq_dist(const ExactPoint& a, const ExactPoint& b) {
  Dyadic dr = a.re - b.re, di = a.im - b.im;
  return dr * dr + di * di;
}

// Upper bound on d * |p(z_i)| / prod_{j != i} |z_i - z_j| (Gerschgorin radius), or nullopt
// when two centers coincide.
std::optional<Dyadic> gerschgorin_radius(const IntPoly& p, const std::vector<ExactPoint>& z, std::size_t i,
                                         long bits) {
  const std::size_t d = z.size();
  ComplexBall v = evaluate_exact(p, z[i].re, z[i].im);
  Dyadic num = v.center_norm2();
  if (num.is_zero()) return Dyadic();
  Dyadic den(1);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == i) continue;
    Dyadic s = sq_dist(z[i], z[j]);
    if (s.is_zero()) return std::nullopt;
    den = den * s;
  }
  Rational r2 = num.to_rational() / den.to_rational() * Rational(static_cast<long>(d * d));
  return Dyadic::above(sqrt_upper(r2, static_cast<unsigned>(bits + 16)), 30);
}

struct Certified {
  ExactPoint center;
  Dyadic radius;
  bool is_real;
};

std::optional<std::vector<Certified>> certify(const IntPoly& p, std::vector<ExactPoint> z, long bits) {
  const std::size_t d = z.size();
  std::vector<Dyadic> r(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto ri = gerschgorin_radius(p, z, i, bits);
    if (!ri) return std::nullopt;
    r[i] = *ri;
  }
  // A disc that meets the real axis is recentered on it; if it is then isolated,
  // conjugate symmetry forces its unique root to be real.
  bool snapped = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (!z[i].im.is_zero() && abs(z[i].im) <= r[i]) {
      z[i].im = Dyadic();
      snapped = true;
    }
  }
  if (snapped) {
    for (std::size_t i = 0; i < d; ++i) {
      auto ri = gerschgorin_radius(p, z, i, bits);
      if (!ri) return std::nullopt;
      r[i] = *ri;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!z[i].im.is_zero() && abs(z[i].im) <= r[i]) return std::nullopt;
    for (std::size_t j = i + 1; j < d; ++j) {
      Dyadic sum = r[i] + r[j];
      if (sq_dist(z[i], z[j]) <= sum * sum) return std::nullopt;
    }
  }
  std::vector<Certified> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back({z[i], r[i], z[i].im.is_zero()});
  return out;
}

// Makes approximate conjugate pairs exactly conjugate so equal moduli compare equal.
void symmetrize(std::vector<ExactPoint>& z, long bits) {
  const Dyadic tolerance(Integer(1), -bits / 2);
  std::vector<bool> used(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (used[i] || z[i].im.sign() <= 0) continue;
    std::optional<std::size_t> best;
    Dyadic best_dist;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (used[j] || j == i || z[j].im.sign() >= 0) continue;
      ExactPoint mirrored{z[j].re, -z[j].im};
      Dyadic dist = sq_dist(z[i], mirrored);
      if (!best || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best && best_dist <= tolerance) {
      used[i] = used[*best] = true;
      z[*best] = {z[i].re, -z[i].im};
    }
  }
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  if (d.empty()) d.push_back(0);
  return d;
}

}  // namespace

ComplexBall evaluate_exact(const IntPoly& p, const Dyadic& re, const Dyadic& im) {
  Dyadic ar(p.back()), ai;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    Dyadic nr = ar * re - ai * im + Dyadic(p[i]);
    Dyadic ni = ar * im + ai * re;
    ar = std::move(nr);
    ai = std::move(ni);
  }
  return ComplexBall::exact(ar, ai);
}

RootEnclosure::RootEnclosure(IntPoly poly, ComplexBall isolation, bool is_real)
    : poly_(std::move(poly)), isolation_(isolation), current_(std::move(isolation)), is_real_(is_real) {}

RootEnclosure RootEnclosure::refined(long bits, long cap_bits) const {
  const Dyadic target(Integer(1), -bits);
  if (current_.radius() <= target) return *this;
  const IntPoly dp = derivative(poly_);
  const long d = static_cast<long>(poly_.size()) - 1;
  long prec = std::max<long>(64, bits + 32);
  while (true) {
    if (prec > cap_bits + 64) {
      throw PrecisionExhausted("root refinement exceeded the precision cap of " + std::to_string(cap_bits) + " bits");
    }
    MpfComplexOps ops(static_cast<unsigned long>(prec));
    Approx z{to_mpf(current_.re().to_rational(), prec), to_mpf(current_.im().to_rational(), prec)};
    mpf_class tol(1, prec);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<unsigned long>(prec - 8));
    for (int iter = 0; iter < 200; ++iter) {
      Approx value, deriv;
      ops.eval(poly_, z, value, deriv);
      if (sgn(ops.abs2(deriv)) == 0) break;
      Approx step = ops.div(value, deriv);
      if (is_real_) step.im = 0;
      z = ops.sub(z, step);
      if (ops.abs2(step) <= tol * tol) break;
    }
    long mag = std::max<long>(1, current_.modulus_upper_cheap().magnitude_bits());
    ExactPoint c{to_dyadic(z.re, prec + mag), is_real_ ? Dyadic() : to_dyadic(z.im, prec + mag)};
    ComplexBall value = evaluate_exact(poly_, c.re, c.im);
    Dyadic radius;
    bool ok = true;
    if (!value.center_norm2().is_zero()) {
      ComplexBall deriv = evaluate_exact(dp, c.re, c.im);
      Dyadic dn = deriv.center_norm2();
      if (dn.is_zero()) {
        ok = false;
      } else {
        Rational r2 = value.center_norm2().to_rational() / dn.to_rational() * Rational(d * d);
        radius = Dyadic::above(sqrt_upper(r2, static_cast<unsigned>(prec + 16)), 30);
      }
    }
    if (ok) {
      ComplexBall candidate(c.re, c.im, radius);
      if (isolation_.contains(candidate) && radius <= target) {
        RootEnclosure out = *this;
        out.current_ = candidate;
        return out;
      }
    }
    prec *= 2;
  }
}

std::vector<RootEnclosure> isolate_roots(const IntPoly& p, const PrecisionPolicy& policy) {
  if (p.size() < 2 || p.back() != 1) throw NotMonic("isolate_roots expects a monic nonconstant polynomial");
  const std::size_t d = p.size() - 1;
  std::vector<Certified> certified;
  if (d == 1) {
    certified.push_back({{Dyadic(Integer(-p[0])), Dyadic()}, Dyadic(), true});
  } else {
    long prec = std::max<long>(64, policy.initial_bits);
    std::vector<Approx> z = initial_guesses(p, MpfComplexOps(static_cast<unsigned long>(prec)));
    bool done = false;
    while (!done) {
      if (prec > policy.cap_bits) {
        throw PrecisionExhausted("root isolation exceeded the precision cap of " + std::to_string(policy.cap_bits) +
                                 " bits");
      }
      aberth(p, z, static_cast<unsigned long>(prec), 2000);
      std::vector<ExactPoint> pts;
      for (const auto& w : z) pts.push_back({to_dyadic(w.re, prec), to_dyadic(w.im, prec)});
      symmetrize(pts, prec);
      if (auto c = certify(p, pts, prec)) {
        certified = std::move(*c);
        done = true;
      } else {
        prec *= 2;
      }
    }
  }

  // Order: descending modulus, ties (relative 2^-40) by descending argument.
  std::vector<std::size_t> order(certified.size());
  std::iota(order.begin(), order.end(), 0);
  auto norm = [&](std::size_t i) { return certified[i].center.re * certified[i].center.re +
                                          certified[i].center.im * certified[i].center.im; };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    Dyadic na = norm(a), nb = norm(b);
    Dyadic diff = abs(na - nb);
    Dyadic big = na > nb ? na : nb;
    bool tie = diff * Dyadic(Integer(1), 40) <= big;
    if (!tie) return na > nb;
    double arg_a = std::atan2(certified[a].center.im.to_double(), certified[a].center.re.to_double());
    double arg_b = std::atan2(certified[b].center.im.to_double(), certified[b].center.re.to_double());
    return arg_a > arg_b;
  });
  std::vector<RootEnclosure> out;
  for (auto i : order) {
    const auto& c = certified[i];
    out.emplace_back(p, ComplexBall(c.center.re, c.center.im, c.radius), c.is_real);
  }
  return out;
}

std::vector<RootEnclosure> isolate_roots(const NumberField& field, const PrecisionPolicy& policy) {
  return isolate_roots(field.poly(), policy);
}

Embedder::Embedder(RootEnclosure root, PrecisionPolicy policy) : root_(std::move(root)), policy_(policy) {}

void Embedder::ensure_root_bits(long bits) {
  if (root_bits_ >= bits) return;
  root_ = root_.refined(bits, policy_.cap_bits);
  root_bits_ = bits;
}

ComplexBall Embedder::embed(const FieldElement& x, long bits) {
  if (bits > policy_.cap_bits) {
    throw PrecisionExhausted("embedding exceeded the precision cap of " + std::to_string(policy_.cap_bits) + " bits");
  }
  if (x.is_zero()) return ComplexBall();
  const auto& c = x.coords();
  long coeff_bits = 0;
  for (const auto& q : c) {
    if (q == 0) continue;
    coeff_bits = std::max<long>(coeff_bits, static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
                                                static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + 1);
  }
  const long work = bits + 16 + coeff_bits;
  ensure_root_bits(work);
  const ComplexBall& z = root_.ball();
  ComplexBall acc = ComplexBall::from_rational(c.back(), work);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = mul(acc, z, work);
    if (c[i] != 0) acc = add(acc, ComplexBall::from_rational(c[i], work), work);
  }
  if (root_.is_real() && !acc.im().is_zero()) acc = ComplexBall(acc.re(), Dyadic(), acc.radius() + abs(acc.im()));
  return acc;
}

int Embedder::sign_real(const FieldElement& x) {
  if (!root_.is_real()) throw OutOfRange("sign_real requires a real embedding");
  if (x.is_zero()) return 0;
  for (long bits = policy_.initial_bits; bits <= policy_.cap_bits; bits *= 2) {
    int s = embed(x, bits).real_sign();
    if (s != 0) return s;
  }
  throw PrecisionExhausted("sign of a nonzero element not resolved within the precision cap");
}

Integer Embedder::floor_real(const FieldElement& x) {
  if (!root_.is_real()) throw OutOfRange("floor_real requires a real embedding");
  if (x.is_rational()) return betadigits::floor(x.coords()[0]);
  for (long bits = policy_.initial_bits; bits <= policy_.cap_bits; bits *= 2) {
    ComplexBall b = embed(x, bits);
    Integer lo = (b.re() - b.radius()).floor();
    Integer hi = (b.re() + b.radius()).floor();
    if (lo == hi) return lo;
    if (hi == lo + 1 && x == x.field()->from_rational(Rational(hi))) return hi;
  }
  throw PrecisionExhausted("floor not resolved within the precision cap");
}

int Embedder::compare_modulus(const FieldElement& x, const FieldElement& y) {
  if (root_.is_real()) {
    int sx = sign_real(x), sy = sign_real(y);
    FieldElement ax = sx < 0 ? -x : x;
    FieldElement ay = sy < 0 ? -y : y;
    return sign_real(ax - ay) >= 0 ? 1 : -1;
  }
  if (x == y || x == -y) return 1;
  for (long bits = policy_.initial_bits; bits <= policy_.cap_bits; bits *= 2) {
    ComplexBall bx = embed(x, bits), by = embed(y, bits);
    unsigned ub = static_cast<unsigned>(bits);
    if (bx.modulus_lower(ub) > by.modulus_upper(ub)) return 1;
    if (bx.modulus_upper(ub) < by.modulus_lower(ub)) return -1;
  }
  throw ThresholdTieUnresolved("modulus comparison unresolved at the precision cap");
}

ComplexBall embed(const FieldElement& x, const RootEnclosure& root, long precision_bits,
                  const PrecisionPolicy& policy) {
  Embedder e(root, policy);
  return e.embed(x, precision_bits);
}

Integer floor_real(const FieldElement& x, const RootEnclosure& root, const PrecisionPolicy& policy) {
  Embedder e(root, policy);
  return e.floor_real(x);
}

int sign_real(const FieldElement& x, const RootEnclosure& root, const PrecisionPolicy& policy) {
  Embedder e(root, policy);
  return e.sign_real(x);
}

}  // namespace betadigits
