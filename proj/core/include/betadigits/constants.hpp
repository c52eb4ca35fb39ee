#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "betadigits/linear_forms.hpp"
#include "betadigits/roots.hpp"

namespace betadigits {

struct NamedConstant {
  Rational value;
  std::string formula;
  std::string provenance;
  double approx() const { return to_double(value); }
};

/// A minimal N from which one "N large" condition of the argument holds.
struct Threshold {
  std::string condition;
  std::int64_t minimal_N = 0;
};

/// Instance data the constants depend on.
struct ConstantsInputs {
  int degree = 1;      // d = [Q(beta):Q]
  int D = 1;
  std::int64_t T = 1;
  std::int64_t N0 = 1;
  bool real_base = true;
  Integer J = 1;                        // denominator_lcm(B_0)
  std::vector<Rational> sigma_bounds;   // max over other embeddings of |sigma_i(B_k)|, upper bounds
  std::vector<Rational> B_modulus;      // |B_k| upper bounds under beta itself
  Rational B_D_modulus_lower;
  Rational beta_modulus_lower;
  Rational beta_modulus_upper;
};

struct ConstantsRecord {
  ConstantsInputs inputs;
  NamedConstant J, C7, C8, C9, C10, C11, C12, c0, C5, C6;
  /// Bound for |Y_R| / N^D over R < N, used by the gap lemma.
  NamedConstant Y_bound;
  std::vector<Threshold> thresholds;

  /// K(N) = ceil((D+1) log N / log b_lo).
  std::int64_t K(std::int64_t N) const;
  /// Lower and upper bounds on log_|beta| N.
  double log_beta_lower(double N) const;
  double log_beta_upper(double N) const;
  /// C_5 (N / log N)^(1/D).
  double theorem_bound(double N) const;
};

/// Upper bounds on |sigma_i(B_k)| over all embeddings except beta (and its conjugate when beta is not real),
/// from enclosures refined to radius 2^-32.
std::vector<Rational> derive_sigma_bounds(const BCoefficients& B, const std::vector<RootEnclosure>& roots,
                                          int distinguished, std::optional<int> conjugate,
                                          const PrecisionPolicy& policy = {});

ConstantsInputs gather_inputs(const BCoefficients& B, const std::vector<RootEnclosure>& roots, int distinguished,
                              std::optional<int> conjugate, std::int64_t T, std::int64_t N0, Embedder& beta);

/// Explicit C_7, C_8 with |Y_R| > R^-C_7 for R >= C_8, from the norm inequality.
std::pair<NamedConstant, NamedConstant> derive_C7_C8(const ConstantsInputs& in);

/// Every constant of the argument, with the thresholds that make up C_6.
ConstantsRecord derive_final_constants(const ConstantsInputs& in);

struct LowerBoundCheck {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::optional<std::int64_t> first_failure;
};

/// Certified |Y_R| > R^-C_7 for C_8 <= R <= R_max (2 C_7 must be an integer).
LowerBoundCheck check_lower_bound_lemma(const std::vector<FieldElement>& Y, Embedder& beta, const Rational& C7,
                                        std::int64_t C8, std::int64_t R_max);

struct CountBoundCheck {
  std::int64_t N = 0;
  std::int64_t y_N = 0;
  std::int64_t lambda = 0;
  double bound = 0;  // C_12 (log N + lambda^D)
  bool pass = false;
};

CountBoundCheck check_count_bound(const std::vector<bool>& above, const std::vector<std::int64_t>& gamma,
                                  std::int64_t N, const ConstantsRecord& rec);

}  // namespace betadigits
