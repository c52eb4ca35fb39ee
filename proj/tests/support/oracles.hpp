#pragma once

// Reference computations written without the library's arithmetic shortcuts.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "betadigits/number_field.hpp"

namespace oracles {

/// Greedy digits of xi = (a + b sqrt5) / c in base (1 + sqrt5)/2, by exact integer sign tests.
std::vector<std::int64_t> golden_greedy(mpz_class a, mpz_class b, mpz_class c, std::size_t count);

/// rho(k; m) for k = 1..order, m < length, as explicit k-fold convolutions in big integers.
std::vector<std::vector<mpz_class>> rho(const std::vector<std::int64_t>& s, int order, std::size_t length);

/// All sums of `order` elements of gamma (with repetition) below horizon; {0} for order 0.
std::set<std::int64_t> sumset(const std::vector<std::int64_t>& gamma, int order, std::int64_t horizon);

/// Least 1 <= n <= limit with B0 beta^n in Z[beta], by multiplying out powers of beta.
std::optional<std::int64_t> integral_power(const betadigits::FieldElement& B0, std::int64_t limit);

/// Golden-field product (a + b beta)(c + d beta) from beta^2 = beta + 1, coordinates only.
std::pair<mpq_class, mpq_class> golden_product(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                               const mpq_class& d);

}  // namespace oracles
