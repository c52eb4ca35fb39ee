#pragma once

#include <vector>

#include "betadigits/ball.hpp"
#include "betadigits/number_field.hpp"
#include "betadigits/polynomial.hpp"

namespace betadigits {

/// Precision policy for certified evaluation.
struct PrecisionPolicy {
  long initial_bits = 64;
  long cap_bits = 1L << 16;
};

/// Certified disc containing exactly one (simple) root of a squarefree integer polynomial.
///
/// `isolation()` is the disc certified at isolation time; `ball()` is the current,
/// possibly refined, disc. Both contain the same unique root.
class RootEnclosure {
 public:
  RootEnclosure(IntPoly poly, ComplexBall isolation, bool is_real);

  const ComplexBall& ball() const { return current_; }
  const ComplexBall& isolation() const { return isolation_; }
  bool is_real() const { return is_real_; }
  const IntPoly& poly() const { return poly_; }
  int multiplicity() const { return 1; }

  /// Copy refined so that the radius is at most 2^-bits. Throws PrecisionExhausted past `cap_bits`.
  RootEnclosure refined(long bits, long cap_bits = PrecisionPolicy{}.cap_bits) const;

  double approx_re() const { return current_.re().to_double(); }
  double approx_im() const { return current_.im().to_double(); }

 private:
  IntPoly poly_;
  ComplexBall isolation_;
  ComplexBall current_;
  bool is_real_;
};

/// Disjoint certified enclosures of all roots of a monic squarefree p, ordered by
/// descending modulus with ties broken by descending argument in (-pi, pi].
std::vector<RootEnclosure> isolate_roots(const IntPoly& p, const PrecisionPolicy& policy = {});
std::vector<RootEnclosure> isolate_roots(const NumberField& field, const PrecisionPolicy& policy = {});

/// Ball containing the value of an integer polynomial at an exact point (no rounding).
ComplexBall evaluate_exact(const IntPoly& p, const Dyadic& re, const Dyadic& im);

/// Certified evaluation of one embedding sigma: Q(beta) -> C, sigma(beta) = the enclosed root.
///
/// Holds its own refined copy of the enclosure and refines it further on demand, so a
/// single Embedder is not meant to be shared between threads; copies are independent.
class Embedder {
 public:
  Embedder(RootEnclosure root, PrecisionPolicy policy = {});

  const RootEnclosure& root() const { return root_; }
  const PrecisionPolicy& policy() const { return policy_; }

  /// Ball containing sigma(x), computed at `bits` working precision.
  ComplexBall embed(const FieldElement& x, long bits);
  /// Certified sign of sigma(x) for a real embedding; exact zero test first.
  int sign_real(const FieldElement& x);
  /// floor(sigma(x)) for a real embedding; ties decided by exact field equality.
  Integer floor_real(const FieldElement& x);
  /// Certified |sigma(x)| >= |sigma(y)| decision (-1 below, +1 at-or-above).
  /// For a real root this is exact; otherwise ties exhaust precision and throw ThresholdTieUnresolved.
  int compare_modulus(const FieldElement& x, const FieldElement& y);

 private:
  void ensure_root_bits(long bits);
  RootEnclosure root_;
  PrecisionPolicy policy_;
  long root_bits_ = 0;
};

/// One-shot helpers matching the module surface.
ComplexBall embed(const FieldElement& x, const RootEnclosure& root, long precision_bits,
                  const PrecisionPolicy& policy = {});
Integer floor_real(const FieldElement& x, const RootEnclosure& root, const PrecisionPolicy& policy = {});
int sign_real(const FieldElement& x, const RootEnclosure& root, const PrecisionPolicy& policy = {});

}  // namespace betadigits
