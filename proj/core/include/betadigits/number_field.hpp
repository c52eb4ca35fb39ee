#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "betadigits/polynomial.hpp"
#include "betadigits/rational.hpp"

namespace betadigits {

class FieldElement;

/// Q(beta) = Q[X]/(p) for a monic squarefree integer polynomial p.
///
/// Irreducibility is not checked up front. A reducible p is detected the
/// first time an inversion meets a zero divisor (ReducibleDetected).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Throws NotMonic, NotSquarefree, ParseError (constant polynomial).
  static std::shared_ptr<const NumberField> create(IntPoly p);

  int degree() const { return degree_; }
  const IntPoly& poly() const { return poly_; }
  const QPoly& qpoly() const { return qpoly_; }
  /// d x d integer matrix of multiplication by beta in the power basis;
  /// column j holds the coordinates of beta * beta^j.
  const std::vector<std::vector<Integer>>& companion() const { return companion_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement beta() const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement from_coords(std::vector<Rational> coords) const;
  /// Parses d strings "n/d" (missing trailing coordinates read as zero).
  FieldElement parse(const std::vector<std::string>& coords) const;

  bool same_as(const NumberField& other) const { return this == &other || poly_ == other.poly_; }

 private:
  explicit NumberField(IntPoly p);
  IntPoly poly_;
  QPoly qpoly_;
  int degree_;
  std::vector<std::vector<Integer>> companion_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of Q(beta) in the power basis 1, beta, ..., beta^(d-1); immutable value type.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  int degree() const { return static_cast<int>(coords_.size()); }

  bool is_zero() const;
  bool is_rational() const;
  /// All coordinates are integers, i.e. the element lies in Z[beta].
  bool is_integral() const;
  /// Least J >= 1 with J * x in Z[beta].
  Integer denominator_lcm() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& c);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
  friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// beta * x, computed by the companion action.
  FieldElement times_beta() const;
  /// Throws DivisionByZero for 0, ReducibleDetected if x is a zero divisor.
  FieldElement inverse() const;
  /// x^n for any integer n (n < 0 inverts).
  FieldElement pow(std::int64_t n) const;

  QPoly as_poly() const { return QPoly(coords_); }
  std::vector<std::string> serialize() const;
  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& o) const;
  FieldPtr field_;
  std::vector<Rational> coords_;
};

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

}  // namespace betadigits
