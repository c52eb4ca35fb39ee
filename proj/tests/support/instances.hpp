#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "betadigits/config.hpp"
#include "betadigits/exchange.hpp"
#include "betadigits/linear_forms.hpp"
#include "betadigits/roots.hpp"

namespace fixtures {

using namespace betadigits;

/// n/d in canonical form (the two-argument mpq constructor does not reduce).
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

FieldPtr field_of(const std::string& poly);
inline FieldPtr golden_field() { return field_of("-1,-1,1"); }
inline FieldPtr gaussian_field() { return field_of("2,2,1"); }

/// Embedder for root `index` in descending-modulus order.
Embedder embedder(const FieldPtr& field, int index = 0);
FieldElement element(const FieldPtr& field, const std::vector<std::string>& coords);

/// Golden ratio base, xi = 1/2, A = (-1, 2), T = 1, greedy digits.
RunConfig golden_run(std::int64_t n_max, std::int64_t horizon, const std::string& pi = "2");
/// beta = -1 + i, xi = (sqrt 21 - 3)/6 with the committed digit file.
RunConfig gaussian_run(std::int64_t n_max, std::int64_t horizon);

/// D = 2 over the golden field with B = ((1 + beta)/3, beta - 1, 1) and sparse 0/1 digits.
struct SyntheticInstance {
  BCoefficients B;
  DigitData digits;
  ExchangeData exchange;
};
SyntheticInstance synthetic_d2(std::uint64_t seed, std::size_t length);

/// Golden digits 1,0,0,1,0,0,... (xi = beta^-1 + beta^-4) with coefficients satisfying (i) and (ii);
/// B_0 is integral, so (iii) fails.
struct ForgedInstance {
  BCoefficients B;
  DigitData digits;
  ExchangeData exchange;
};
ForgedInstance forged_constant_tail(std::size_t length);

}  // namespace fixtures
