#include "betadigits/number_field.hpp"

#include <stdexcept>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

// Reduces a coefficient vector of any length modulo the monic polynomial p (integer coefficients).
std::vector<Rational> reduce_mod(std::vector<Rational> v, const IntPoly& p) {
  const std::size_t d = p.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] != 0) v[i - d + j] -= c * p[j];
    }
    v[i] = 0;
  }
  v.resize(d);
  return v;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::create(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() < 2) throw ParseError("defining polynomial must be nonconstant");
  if (p.back() != 1) throw NotMonic("defining polynomial " + pretty(p) + " is not monic");
  QPoly q(p);
  QPoly g = gcd(q, q.derivative());
  if (g.degree() > 0) {
    throw NotSquarefree("defining polynomial " + pretty(p) + " is not squarefree (gcd with derivative is " +
                        g.to_string() + ")");
  }
  return std::shared_ptr<const NumberField>(new NumberField(std::move(p)));
}

NumberField::NumberField(IntPoly p) : poly_(std::move(p)), qpoly_(poly_), degree_(static_cast<int>(poly_.size()) - 1) {
  const auto d = static_cast<std::size_t>(degree_);
  companion_.assign(d, std::vector<Integer>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    if (j + 1 < d) {
      companion_[j + 1][j] = 1;
    } else {
      for (std::size_t i = 0; i < d; ++i) companion_[i][j] = -poly_[i];
    }
  }
}

FieldElement NumberField::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(static_cast<std::size_t>(degree_)));
}

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::beta() const {
  std::vector<Rational> v(static_cast<std::size_t>(degree_));
  if (degree_ == 1) {
    v[0] = -Rational(poly_[0]);
  } else {
    v[1] = 1;
  }
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> v(static_cast<std::size_t>(degree_));
  v[0] = q;
  return FieldElement(shared_from_this(), std::move(v));
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  return FieldElement(shared_from_this(), reduce_mod(std::move(coords), poly_));
}

FieldElement NumberField::parse(const std::vector<std::string>& coords) const {
  std::vector<Rational> v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.push_back(parse_rational(c));
  return from_coords(std::move(v));
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (coords_.size() != static_cast<std::size_t>(field_->degree())) {
    coords_ = reduce_mod(std::move(coords_), field_->poly());
  }
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    throw std::invalid_argument("FieldElement: operands belong to different fields");
  }
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_integral() const {
  for (const auto& c : coords_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Integer FieldElement::denominator_lcm() const {
  Integer j = 1;
  for (const auto& c : coords_) j = lcm(j, c.get_den());
  return j;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same_field(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same_field(o);
  const std::size_t d = coords_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.coords_[j] != 0) prod[i + j] += coords_[i] * o.coords_[j];
    }
  }
  coords_ = reduce_mod(std::move(prod), field_->poly());
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::times_beta() const {
  const auto& p = field_->poly();
  const std::size_t d = coords_.size();
  std::vector<Rational> v(d);
  const Rational top = coords_[d - 1];
  for (std::size_t j = d; j-- > 1;) v[j] = coords_[j - 1];
  v[0] = 0;
  if (top != 0) {
    for (std::size_t j = 0; j < d; ++j) {
      if (p[j] != 0) v[j] -= top * p[j];
    }
  }
  return FieldElement(field_, std::move(v));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(beta)");
  ExtendedGcd eg = extended_gcd(as_poly(), field_->qpoly());
  if (eg.g.degree() > 0) {
    throw ReducibleDetected("defining polynomial " + pretty(field_->poly()) + " has the factor " + eg.g.to_string(),
                            eg.g.to_string());
  }
  return field_->from_coords(eg.s.coeffs());
}

FieldElement FieldElement::pow(std::int64_t n) const {
  FieldElement base = n < 0 ? inverse() : *this;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  FieldElement acc = field_->one();
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::vector<std::string> FieldElement::serialize() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(betadigits::to_string(c));
  return out;
}

std::string FieldElement::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    std::string c = betadigits::to_string(coords_[i]);
    if (!s.empty()) s += (c[0] == '-') ? " - " : " + ";
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (i == 0) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += (i == 1) ? "b" : "b^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace betadigits
