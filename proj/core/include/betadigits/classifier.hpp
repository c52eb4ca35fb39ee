#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betadigits/number_field.hpp"
#include "betadigits/roots.hpp"

namespace betadigits {

enum class NumberKind { Pisot, Salem, QuasiPisot, QuasiSalem, None };

std::string to_string(NumberKind kind);

/// Pisot numbers are quasi-Pisot, Salem numbers are quasi-Salem.
inline bool is_quasi_pisot(NumberKind k) { return k == NumberKind::Pisot || k == NumberKind::QuasiPisot; }
inline bool is_quasi_salem(NumberKind k) { return k == NumberKind::Salem || k == NumberKind::QuasiSalem; }

/// Certified bracket of |z| and its exact position relative to 1 (-1 inside, 0 on, +1 outside).
struct ModulusBracket {
  Rational lower;
  Rational upper;
  int versus_one = 0;
};

struct Classification {
  NumberKind kind = NumberKind::None;
  /// Index of beta in `roots` (largest modulus, upper half-plane for a complex pair).
  int distinguished_root = 0;
  /// Index of the complex conjugate of beta, when beta is not real.
  std::optional<int> conjugate_root;
  int unit_circle_count = 0;
  int outside_count = 0;
  std::vector<RootEnclosure> roots;
  std::vector<ModulusBracket> moduli;
};

/// Exact number of roots of p on the unit circle (p squarefree, p(0) != 0 not required).
int unit_circle_root_count(const IntPoly& p);

/// Throws NoRootOutsideUnitDisk when every root has modulus at most 1.
Classification classify(const NumberField& field, const PrecisionPolicy& policy = {});

}  // namespace betadigits
