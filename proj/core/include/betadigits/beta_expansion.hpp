#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "betadigits/number_field.hpp"
#include "betadigits/roots.hpp"

namespace betadigits {

enum class DigitOrigin { greedy, user };

/// Finite digit prefix t_1..t_N with a bound |t_n| <= T.
struct DigitData {
  std::vector<std::int64_t> digits;  // digits[n-1] holds t_n
  std::int64_t bound = 0;
  DigitOrigin origin = DigitOrigin::user;

  std::size_t size() const { return digits.size(); }
  /// t_n for 1-based n.
  std::int64_t t(std::size_t n) const { return digits.at(n - 1); }
  /// 1-based index of the first nonzero digit.
  std::optional<std::size_t> first_nonzero() const;
};

/// Greedy expansion together with its exact remainder and detected period.
struct GreedyExpansion {
  DigitData data;
  /// T_beta^N(xi); satisfies xi = sum t_n beta^-n + beta^-N * final_state.
  FieldElement final_state;
  /// Set when a state repeated: states from `preperiod` on repeat with `period`.
  std::optional<std::size_t> preperiod;
  std::optional<std::size_t> period;
};

/// Greedy beta-expansion of xi in [0, 1] for real beta > 1, in exact field arithmetic.
/// Throws OutOfRange when xi lies outside the domain or beta is not real and > 1.
GreedyExpansion greedy_digits(const FieldElement& xi, Embedder& beta, std::size_t count);

/// ceil(beta) - 1, the greedy digit bound.
std::int64_t greedy_digit_bound(Embedder& beta, const NumberField& field);

/// Number of n <= N with t_n != t_{n+1}. Throws InsufficientDigits unless N+1 digits exist.
std::int64_t gamma_count(const DigitData& d, std::size_t N);
/// Number of n <= N with t_n != 0. Throws InsufficientDigits unless N digits exist.
std::int64_t nu_count(const DigitData& d, std::size_t N);
/// nu(N) >= gamma(N)/2 - 1.
bool check_gamma_nu_relation(const DigitData& d, std::size_t N);

/// gamma(n) for n = 0..size()-1 (entry n needs t_{n+1}).
std::vector<std::int64_t> gamma_prefix(const DigitData& d);
/// nu(n) for n = 0..size().
std::vector<std::int64_t> nu_prefix(const DigitData& d);

/// Reads one integer per line with an optional "# T=<bound>" header. Without a header
/// the bound is max |t_n|. Throws ParseError on malformed lines or a violated header.
DigitData read_digit_file(const std::filesystem::path& path);
void write_digit_file(const std::filesystem::path& path, const DigitData& d);

/// Throws ParseError if some |t_n| exceeds the bound.
void validate_bound(const DigitData& d);

}  // namespace betadigits
