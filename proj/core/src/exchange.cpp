#include "betadigits/exchange.hpp"

#include <algorithm>
#include <bit>

#include "betadigits/errors.hpp"

namespace betadigits {

Reduction reduce_to_N0(const DigitData& d, const std::vector<FieldElement>& coefficients) {
  const auto n0 = d.first_nonzero();
  if (!n0) throw AllZero("digit sequence is identically zero");
  if (coefficients.empty()) throw ParseError("no coefficients A_k given");
  Reduction r;
  r.first_nonzero = *n0;
  r.digits = d;
  r.digits.digits.erase(r.digits.digits.begin(), r.digits.digits.begin() + static_cast<long>(*n0 - 1));
  const auto D = static_cast<std::int64_t>(coefficients.size()) - 1;
  const auto shift = static_cast<std::int64_t>(*n0 - 1);
  for (std::int64_t k = 0; k <= D; ++k) {
    const FieldElement& a = coefficients[static_cast<std::size_t>(k)];
    r.coefficients.push_back(shift == 0 ? a : a * a.field()->beta().pow((D - k) * shift));
  }
  return r;
}

ExchangeData exchange_sequence(const DigitData& d) {
  if (d.size() == 0 || d.t(1) == 0) throw NotReduced("exchange transform needs t_1 != 0");
  ExchangeData e;
  e.bound = d.bound;
  const std::size_t N = d.size();
  e.s.resize(N);
  e.s[0] = d.t(1);
  e.support.push_back(0);
  for (std::size_t n = 1; n < N; ++n) {
    e.s[n] = d.t(n + 1) - d.t(n);
    if (e.s[n] != 0) {
      e.support.push_back(static_cast<std::int64_t>(n));
      e.exchanges.push_back(static_cast<std::int64_t>(n));
    }
  }
  return e;
}

namespace {

// Horner: sum_{i} c_i beta^{len-1-i} for integer c.
template <typename Get>
FieldElement horner(const FieldPtr& field, std::size_t len, Get get) {
  FieldElement acc = field->zero();
  for (std::size_t i = 0; i < len; ++i) acc = acc.times_beta() + field->from_rational(Rational(get(i)));
  return acc;
}

}  // namespace

bool telescoping_identity_holds(const FieldPtr& field, const DigitData& d, const ExchangeData& e, std::size_t M) {
  if (M == 0 || M > d.size() || M > e.s.size()) {
    throw InsufficientDigits("telescoping check at M = " + std::to_string(M) + " exceeds the prefix");
  }
  // Multiply through by beta^M: beta * sum_{n<M} s_n beta^{M-1-n} - (beta-1) sum_{n=1}^M t_n beta^{M-n} = t_M.
  const FieldElement s_part = horner(field, M, [&](std::size_t i) { return e.s[i]; }).times_beta();
  const FieldElement t_part = horner(field, M, [&](std::size_t i) { return d.digits[i]; });
  const FieldElement lhs = s_part - (field->beta() - field->one()) * t_part;
  return lhs == field->from_rational(Rational(d.t(M)));
}

EtaCheck verify_eta_identity(const FieldPtr& field, Embedder& beta, const DigitData& d, const ExchangeData& e,
                             std::size_t M) {
  if (M == 0 || M > d.size() || M > e.s.size()) {
    throw InsufficientDigits("eta check at M = " + std::to_string(M) + " exceeds the prefix");
  }
  const FieldElement inv_pow = field->beta().pow(-static_cast<std::int64_t>(M));
  const FieldElement t_sum = horner(field, M, [&](std::size_t i) { return d.digits[i]; }) * inv_pow;
  const FieldElement s_sum = horner(field, M, [&](std::size_t i) { return e.s[i]; }).times_beta() * inv_pow;
  const FieldElement diff = (field->beta() - field->one()) * t_sum - s_sum;

  const long bits = beta.policy().initial_bits * 2;
  const ComplexBall b = beta.embed(field->beta(), bits);
  const Rational modulus = b.modulus_lower(64);
  EtaCheck out;
  out.gap_upper = beta.embed(diff, bits).modulus_upper(static_cast<unsigned>(bits));
  if (modulus <= 1) throw OutOfRange("eta check needs |beta| > 1");
  Rational scale = 1;
  for (std::size_t i = 1; i < M; ++i) scale /= modulus;
  out.allowed = Rational(2 * d.bound) * scale / (modulus - 1);
  out.ok = out.gap_upper <= out.allowed;
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

// One round of set addition with Gamma, pruned at the horizon.
Bits add_gamma(const Bits& cur, const std::vector<std::int64_t>& gamma, std::int64_t horizon) {
  const std::size_t words = cur.size();
  Bits next(words, 0);
  for (std::int64_t g : gamma) {
    if (g < 0 || g >= horizon) continue;
    const auto word_shift = static_cast<std::size_t>(g / 64);
    const auto bit_shift = static_cast<unsigned>(g % 64);
    for (std::size_t w = words; w-- > word_shift;) {
      std::uint64_t v = cur[w - word_shift] << bit_shift;
      if (bit_shift && w > word_shift) v |= cur[w - word_shift - 1] >> (64 - bit_shift);
      next[w] |= v;
    }
  }
  if (horizon % 64) next.back() &= (std::uint64_t{1} << (horizon % 64)) - 1;
  return next;
}

std::vector<std::int64_t> members_of(const Bits& bits) {
  std::vector<std::int64_t> out;
  for (std::size_t w = 0; w < bits.size(); ++w) {
    for (std::uint64_t v = bits[w]; v; v &= v - 1) {
      out.push_back(static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(v))));
    }
  }
  return out;
}

}  // namespace

std::vector<Sumset> sumset_chain(const std::vector<std::int64_t>& gamma, int max_order, std::int64_t horizon) {
  std::vector<Sumset> chain;
  if (horizon <= 0) {
    for (int k = 0; k <= max_order; ++k) chain.push_back({k, {}});
    return chain;
  }
  Bits cur(static_cast<std::size_t>((horizon + 63) / 64), 0);
  cur[0] = 1;
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) cur = add_gamma(cur, gamma, horizon);
    chain.push_back({k, members_of(cur)});
  }
  return chain;
}

Sumset sumset(const std::vector<std::int64_t>& gamma, int order, std::int64_t horizon) {
  return std::move(sumset_chain(gamma, order, horizon).back());
}

std::int64_t lambda_count(const std::vector<std::int64_t>& members, std::int64_t N) {
  return std::lower_bound(members.begin(), members.end(), N) - members.begin();
}

}  // namespace betadigits
