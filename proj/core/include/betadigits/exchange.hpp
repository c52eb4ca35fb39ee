#pragma once

#include <cstdint>
#include <vector>

#include "betadigits/beta_expansion.hpp"
#include "betadigits/number_field.hpp"
#include "betadigits/roots.hpp"

namespace betadigits {

/// Digits shifted so that t_1 != 0, with the minimal-polynomial coefficients rescaled to match.
struct Reduction {
  DigitData digits;
  std::vector<FieldElement> coefficients;  // A~_0..A~_D
  std::size_t first_nonzero = 1;           // N_0
};

/// t~_n = t_{n-1+N0} and A~_k = A_k beta^{(D-k)(N0-1)}. Throws AllZero.
Reduction reduce_to_N0(const DigitData& d, const std::vector<FieldElement>& coefficients);

/// Difference sequence of a reduced digit prefix.
struct ExchangeData {
  std::vector<std::int64_t> s;              // s_0..s_{N-1}
  std::vector<std::int64_t> support;        // Gamma: indices with s_n != 0, ascending
  std::vector<std::int64_t> exchanges;      // v(1) < v(2) < ...: n >= 1 with t_n != t_{n+1}
  std::int64_t bound = 0;                   // T of the digits
};

/// s_0 = t_1, s_n = t_{n+1} - t_n. Throws NotReduced when t_1 = 0.
ExchangeData exchange_sequence(const DigitData& d);

/// Checks sum_{n<M} s_n beta^-n - (beta-1) sum_{n<=M} t_n beta^-n = t_M beta^-M in Q(beta).
bool telescoping_identity_holds(const FieldPtr& field, const DigitData& d, const ExchangeData& e, std::size_t M);

struct EtaCheck {
  bool ok = false;
  Rational gap_upper;  // certified upper bound on |(beta-1) sum t - sum s|
  Rational allowed;    // tail bound 2T |beta|^{1-M} / (|beta| - 1)
};

/// Ball comparison of (beta-1) sum_{n<=M} t_n beta^-n with sum_{n<M} s_n beta^-n.
EtaCheck verify_eta_identity(const FieldPtr& field, Embedder& beta, const DigitData& d, const ExchangeData& e,
                             std::size_t M);

/// k Gamma restricted to [0, N), ascending.
struct Sumset {
  int order = 0;
  std::vector<std::int64_t> members;
};

Sumset sumset(const std::vector<std::int64_t>& gamma, int order, std::int64_t horizon);
/// 0 Gamma, 1 Gamma, ..., max_order Gamma.
std::vector<Sumset> sumset_chain(const std::vector<std::int64_t>& gamma, int max_order, std::int64_t horizon);

/// Card(S intersect [0, N)) for an ascending index set.
std::int64_t lambda_count(const std::vector<std::int64_t>& members, std::int64_t N);
inline std::int64_t lambda_count(const Sumset& s, std::int64_t N) { return lambda_count(s.members, N); }

}  // namespace betadigits
