#include "betadigits/classifier.hpp"

#include "betadigits/errors.hpp"

namespace betadigits {

std::string to_string(NumberKind kind) {
  switch (kind) {
    case NumberKind::Pisot: return "Pisot";
    case NumberKind::Salem: return "Salem";
    case NumberKind::QuasiPisot: return "QuasiPisot";
    case NumberKind::QuasiSalem: return "QuasiSalem";
    case NumberKind::None: break;
  }
  return "None";
}

namespace {

// For a palindromic polynomial g of degree 2m, returns q with g(x) = x^m q(x + 1/x).
QPoly trace_polynomial(const QPoly& g) {
  const int m = g.degree() / 2;
  // V_k(y) = x^k + x^-k expressed in y = x + 1/x.
  std::vector<QPoly> v;
  v.push_back(QPoly(std::vector<Rational>{2}));
  v.push_back(QPoly(std::vector<Rational>{0, 1}));
  const QPoly y = v[1];
  for (int k = 2; k <= m; ++k) v.push_back(y * v[k - 1] - v[k - 2]);
  QPoly q(std::vector<Rational>{g.coeff(static_cast<std::size_t>(m))});
  for (int k = 1; k <= m; ++k) {
    q = q + g.coeff(static_cast<std::size_t>(m + k)) * v[static_cast<std::size_t>(k)];
  }
  return q;
}

}  // namespace

int unit_circle_root_count(const IntPoly& p) {
  QPoly poly(p);
  // Roots at 0 are never on the circle; strip them so reversal is well defined.
  std::vector<Rational> c = poly.coeffs();
  std::size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0) ++lead_zeros;
  poly = QPoly(std::vector<Rational>(c.begin() + static_cast<long>(lead_zeros), c.end()));
  if (poly.degree() <= 0) return 0;

  QPoly g = gcd(poly, poly.reversed());
  int count = 0;
  for (int s : {1, -1}) {
    const QPoly lin(std::vector<Rational>{-s, 1});
    if (g.degree() > 0 && g(Rational(s)) == 0) {
      g = divmod(g, lin).first;
      ++count;
    }
  }
  if (g.degree() <= 0) return count;
  const QPoly q = trace_polynomial(g);
  // Roots y in (-2, 2) lift to conjugate pairs on the circle; y = +-2 would mean x = +-1, already removed.
  int inside = sturm_count(q, Rational(-2), Rational(2));
  if (q(Rational(2)) == 0) --inside;
  return count + 2 * inside;
}

Classification classify(const NumberField& field, const PrecisionPolicy& policy) {
  Classification out;
  out.roots = isolate_roots(field, policy);
  out.unit_circle_count = unit_circle_root_count(field.poly());
  const std::size_t d = out.roots.size();
  out.moduli.assign(d, {});
  std::vector<bool> decided(d, false);
  int undecided = static_cast<int>(d);
  const Rational one(1);

  for (long bits = policy.initial_bits; undecided > out.unit_circle_count; bits *= 2) {
    if (bits > policy.cap_bits) throw PrecisionExhausted("classify: moduli not separated from 1 at the cap");
    for (std::size_t i = 0; i < d; ++i) {
      if (decided[i]) continue;
      out.roots[i] = out.roots[i].refined(bits, policy.cap_bits);
      const ComplexBall& b = out.roots[i].ball();
      if (b.modulus_gt(one)) {
        out.moduli[i].versus_one = 1;
      } else if (b.modulus_lt(one)) {
        out.moduli[i].versus_one = -1;
      } else {
        continue;
      }
      decided[i] = true;
      --undecided;
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexBall& b = out.roots[i].ball();
    out.moduli[i].lower = b.modulus_lower(48);
    out.moduli[i].upper = b.modulus_upper(48);
    if (!decided[i]) {
      out.moduli[i].versus_one = 0;
      out.moduli[i].lower = out.moduli[i].lower < 1 ? out.moduli[i].lower : one;
      out.moduli[i].upper = out.moduli[i].upper > 1 ? out.moduli[i].upper : one;
    }
    if (out.moduli[i].versus_one > 0) ++out.outside_count;
  }

  if (out.outside_count == 0) {
    throw NoRootOutsideUnitDisk("no root of " + pretty(field.poly()) + " lies outside the closed unit disc");
  }
  // Outside roots sort first by descending modulus.
  const bool has_unit = out.unit_circle_count > 0;
  const RootEnclosure& top = out.roots[0];
  out.distinguished_root = 0;
  if (out.outside_count == 1 && top.is_real()) {
    const bool positive = top.ball().re().sign() > 0;
    if (positive) {
      out.kind = has_unit ? NumberKind::Salem : NumberKind::Pisot;
    } else {
      out.kind = has_unit ? NumberKind::QuasiSalem : NumberKind::QuasiPisot;
    }
  } else if (out.outside_count == 2 && !top.is_real() && !out.roots[1].is_real()) {
    out.conjugate_root = 1;
    out.kind = has_unit ? NumberKind::QuasiSalem : NumberKind::QuasiPisot;
  } else {
    out.kind = NumberKind::None;
  }
  return out;
}

}  // namespace betadigits
