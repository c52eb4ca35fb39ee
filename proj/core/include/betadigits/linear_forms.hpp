#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "betadigits/beta_expansion.hpp"
#include "betadigits/exchange.hpp"
#include "betadigits/number_field.hpp"
#include "betadigits/roots.hpp"

namespace betadigits {

/// Where the digits of an instance come from.
struct DigitSource {
  enum class Kind { greedy, file };
  Kind kind = Kind::greedy;
  std::optional<FieldElement> xi;  // greedy
  std::filesystem::path path;      // file
};

/// One instance: xi with A_D xi^D + ... + A_0 = 0 over Q(beta), scaling pi, digit bound T.
struct InstanceConfig {
  FieldPtr field;
  int root_index = 0;
  int D = 1;
  std::vector<FieldElement> A;  // A_0..A_D
  FieldElement pi;
  std::optional<std::int64_t> T;
  DigitSource digits;
};

/// B_k = A_k (beta-1)^(D-k) / pi, k = 0..D.
struct BCoefficients {
  std::vector<FieldElement> B;
  int D() const { return static_cast<int>(B.size()) - 1; }
  const FieldElement& operator[](int k) const { return B.at(static_cast<std::size_t>(k)); }
};

/// Throws HypothesisIIViolated(k) for the first 1 <= k <= D with B_k outside Z[beta],
/// DivisionByZero for pi = 0, OutOfRange for A_D = 0.
BCoefficients compute_B(const std::vector<FieldElement>& A, const FieldElement& pi);

struct HypothesisIIIResult {
  bool holds = false;
  /// Least n >= 1 with B_0 beta^n in Z[beta], when (iii) fails.
  std::optional<std::int64_t> witness;
  /// B_0 itself lies in Z[beta] (the n = 0 case, reported separately).
  bool integral_at_zero = false;
  Integer modulus;               // q = denominator_lcm(B_0)
  std::uint64_t steps = 0;       // companion steps taken
};

/// Exact decision: iterate multiplication by beta on q B_0 modulo q until the orbit closes.
HypothesisIIIResult check_hypothesis_iii(const FieldElement& B0);

/// rho(k; m) for 1 <= k <= D and 0 <= m < length: k-fold convolution of s restricted to Gamma.
class RhoTable {
 public:
  /// Throws HorizonExceeded if length exceeds the s-sequence, std::overflow_error past 64 bits.
  RhoTable(const ExchangeData& e, int order, std::int64_t length);

  int order() const { return static_cast<int>(rows_.size()); }
  std::int64_t length() const { return length_; }
  std::int64_t digit_bound() const { return digit_bound_; }
  /// Throws HorizonExceeded for m outside [0, length).
  std::int64_t operator()(int k, std::int64_t m) const;

 private:
  std::int64_t length_;
  std::int64_t digit_bound_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Y_0..Y_{count-1} by the recurrence Y_R = beta Y_{R-1} - sum_k B_k rho(k; R).
std::vector<FieldElement> Y_table(const BCoefficients& B, const RhoTable& rho, std::int64_t count);

/// Y_R = -B_0 beta^R - sum_k B_k sum_{j=0}^{R} beta^{R-j} rho(k; j), evaluated term by term.
FieldElement Y_R_exact(std::int64_t R, const BCoefficients& B, const RhoTable& rho);

inline bool assert_Y_nonzero(const FieldElement& y) { return !y.is_zero(); }

struct ZeroScan {
  std::vector<std::int64_t> zeros;  // R with Y_R = 0
};

/// Finds vanishing Y_R. Each zero must come with B_0 beta^R in Z[beta]; throws IdentityFailure otherwise.
ZeroScan scan_Y_zeros(const std::vector<FieldElement>& Y, const BCoefficients& B);

struct SeriesCheck {
  bool ok = false;
  Rational difference_upper;  // |Y_R - truncated series|
  Rational tail_bound;
};

/// Compares Y_R with sum_k B_k sum_{m=1}^{terms} beta^-m rho(k; m+R) under a rigorous tail bound.
SeriesCheck series_consistency(std::int64_t R, std::int64_t terms, const FieldElement& Y_R, const BCoefficients& B,
                               const RhoTable& rho, Embedder& beta);

/// Points i(0) = 0 < ... < i(tau-1) of [0,N) intersect (D-1)Gamma, closed by i(tau) = N.
/// Interval I_h = [i(h-1), i(h)) for h = 1..tau.
struct GapStructure {
  std::vector<std::int64_t> points;  // i(0..tau)
  std::int64_t horizon = 0;

  std::int64_t tau() const { return static_cast<std::int64_t>(points.size()) - 1; }
  std::pair<std::int64_t, std::int64_t> interval(std::int64_t h) const {
    return {points.at(static_cast<std::size_t>(h - 1)), points.at(static_cast<std::size_t>(h))};
  }
  /// h with R in I_h.
  std::int64_t interval_of(std::int64_t R) const;
};

GapStructure gap_structure(const Sumset& top, std::int64_t N);

/// Exact check of Y_{R-1} = (B_D/beta) rho(D; R) + Y_R / beta and rho(k; R) = 0 for k < D,
/// with both Y values evaluated by the closed form. Throws NotInGapInterior.
bool verify_recursion(std::int64_t R, std::int64_t h, const BCoefficients& B, const RhoTable& rho,
                      const GapStructure& G);

/// above[R] is true iff |sigma(Y_R)| >= C_9 = |B_D| / (2|beta|); decided by certified comparison.
std::vector<bool> threshold_flags(const std::vector<FieldElement>& Y, const BCoefficients& B, Embedder& beta);

/// Card{R < N : |Y_R| >= C_9}.
std::int64_t y_N_count(const std::vector<bool>& above, std::int64_t N);

struct GapLemmaCheck {
  std::int64_t admissible = 0;      // R tested
  std::int64_t violations = 0;
  std::int64_t worst_distance = 0;  // max of R - R_1 over admissible R
  double allowed = 0;               // 2 C_10 log_|beta| N
};

/// For R in I_h with i(h-1) + 3 C_10 L < R, checks R - max{R' < R : |Y_R'| >= C_9} <= 2 C_10 L,
/// where L = log_|beta| N is passed as a lower bound.
GapLemmaCheck check_gap_lemma(const GapStructure& G, const std::vector<bool>& above, double c10, double log_beta_N);

}  // namespace betadigits
