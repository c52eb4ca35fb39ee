#include "betadigits/constants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

constexpr double kPad = 1e-12;

Rational pow_q(Rational base, unsigned long e) {
  Rational r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

Rational up(double x) { return rational_above(x * (1 + kPad) + std::numeric_limits<double>::min()); }
Rational down(double x) { return rational_below(x * (1 - kPad)); }

std::string fmt(const Rational& q) { return to_string(q); }

// Smallest N >= start with pred(N), assuming pred is monotone from there on.
std::int64_t first_holding(const std::function<bool(double)>& pred, std::int64_t start = 3) {
  if (pred(static_cast<double>(start))) return start;
  std::int64_t lo = start, hi = start;
  while (!pred(static_cast<double>(hi))) {
    lo = hi;
    if (hi > (std::int64_t{1} << 61)) throw PrecisionExhausted("threshold search exceeded 2^62");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (pred(static_cast<double>(mid)) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

std::vector<Rational> derive_sigma_bounds(const BCoefficients& B, const std::vector<RootEnclosure>& roots,
                                          int distinguished, std::optional<int> conjugate,
                                          const PrecisionPolicy& policy) {
  std::vector<Rational> bounds(B.B.size(), Rational(0));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (idx == distinguished || (conjugate && idx == *conjugate)) continue;
    Embedder sigma(roots[i].refined(32, policy.cap_bits), policy);
    for (std::size_t k = 0; k < B.B.size(); ++k) {
      bounds[k] = std::max(bounds[k], sigma.embed(B.B[k], 48).modulus_upper(48));
    }
  }
  return bounds;
}

ConstantsInputs gather_inputs(const BCoefficients& B, const std::vector<RootEnclosure>& roots, int distinguished,
                              std::optional<int> conjugate, std::int64_t T, std::int64_t N0, Embedder& beta) {
  ConstantsInputs in;
  in.degree = B[0].degree();
  in.D = B.D();
  in.T = T;
  in.N0 = N0;
  in.real_base = beta.root().is_real();
  in.J = B[0].denominator_lcm();
  in.sigma_bounds = derive_sigma_bounds(B, roots, distinguished, conjugate, beta.policy());
  for (const auto& b : B.B) in.B_modulus.push_back(beta.embed(b, 64).modulus_upper(64));
  in.B_D_modulus_lower = beta.embed(B[B.D()], 64).modulus_lower(64);
  const ComplexBall bb = beta.embed(B[0].field()->beta(), 64);
  in.beta_modulus_lower = bb.modulus_lower(64);
  in.beta_modulus_upper = bb.modulus_upper(64);
  if (in.beta_modulus_lower <= 1) throw OutOfRange("the constants need |beta| > 1");
  return in;
}

std::pair<NamedConstant, NamedConstant> derive_C7_C8(const ConstantsInputs& in) {
  // Other embeddings satisfy |sigma_i(Y_R)| <= c (R+1)^(D+1).
  Rational c = in.sigma_bounds.at(0);
  const Rational twoT(2 * in.T);
  for (int k = 1; k <= in.D; ++k) c += in.sigma_bounds.at(static_cast<std::size_t>(k)) * pow_q(twoT, static_cast<unsigned long>(k));
  const int others = in.real_base ? in.degree - 1 : in.degree - 2;
  const unsigned long e = static_cast<unsigned long>(others * (in.D + 1));
  const Rational scale = pow_q(Rational(in.J), static_cast<unsigned long>(in.degree)) *
                         pow_q(c, static_cast<unsigned long>(others)) * pow_q(Rational(2), e);
  NamedConstant C7, C8;
  C8.value = Rational(floor(scale) + 1);
  if (in.real_base) {
    C7.value = Rational(static_cast<long>(e) + 1);
    C7.formula = "(d-1)(D+1) + 1, with e = (d-1)(D+1) = " + std::to_string(e);
    C8.formula = "floor(J^d c^(d-1) 2^e) + 1, c = " + fmt(c) + " = sigma(B_0) + sum_k sigma(B_k) (2T)^k";
  } else {
    C7.value = Rational(static_cast<long>(e) + 1, 2);
    C7.value.canonicalize();
    C7.formula = "((d-2)(D+1) + 1) / 2, with e = (d-2)(D+1) = " + std::to_string(e);
    C8.formula = "floor(J^d c^(d-2) 2^e) + 1, c = " + fmt(c) + " = sigma(B_0) + sum_k sigma(B_k) (2T)^k";
  }
  C7.provenance = "lower bound for |Y_R| from the norm of J*Y_R";
  C8.provenance = C7.provenance;
  return {C7, C8};
}

ConstantsRecord derive_final_constants(const ConstantsInputs& in) {
  ConstantsRecord rec;
  rec.inputs = in;
  const int D = in.D;
  const Rational b_lo = in.beta_modulus_lower;
  const double ln_b_lo = std::log(std::nextafter(to_double(b_lo), 0.0));
  const double ln_b_hi = std::log(std::nextafter(to_double(in.beta_modulus_upper), 10.0));

  rec.J = {Rational(in.J), "least J >= 1 with J*B_0 in Z[beta]", "denominator of B_0"};
  std::tie(rec.C7, rec.C8) = derive_C7_C8(in);

  rec.C9.value = in.B_D_modulus_lower / (2 * in.beta_modulus_upper);
  rec.C9.formula = "|B_D| / (2|beta|) (value is a certified lower bound; comparisons with it are exact)";
  rec.C9.provenance = "threshold defining y_N";

  rec.C10.value = 1 + D + rec.C7.value;
  rec.C10.formula = "1 + D + C7";
  rec.C10.provenance = "gap lemma";

  const Rational c10 = rec.C10.value;
  rec.C11.value = std::max<Rational>(4 * c10 + 1, 6 * c10);
  rec.C11.formula = "max(4 C10 + 1, 6 C10): an interval of length x >= C11 log N holds at least "
                    "(x - 1 - 3 C10 L) / (2 C10 L + 1) >= x / (C11 L) hits once C10 L >= 2";
  rec.C11.provenance = "hit counting per gap interval";

  // S_1(k) <= a_k lambda^D and S_2(k) <= c_k with a_k = (4T)^k/(b-1), c_k = 2 (4T)^k/(b-1).
  Rational weighted = 0, y_bound = 0;
  const Rational fourT(4 * in.T);
  for (int k = 1; k <= D; ++k) {
    const Rational p = pow_q(fourT, static_cast<unsigned long>(k));
    const Rational a_k = p / (b_lo - 1);
    const Rational c_k = 2 * p / (b_lo - 1);
    weighted += in.B_modulus.at(static_cast<std::size_t>(k)) * (a_k + c_k);
    y_bound += in.B_modulus.at(static_cast<std::size_t>(k)) * c_k;
  }
  const Rational from_sums = weighted / rec.C9.value;
  const Rational from_K = up((D + 1) / ln_b_lo + 1);
  rec.C12.value = std::max(from_K, from_sums);
  rec.C12.formula = "max((D+1)/log b + 1, sum_k |B_k| (a_k + c_k) / C9), a_k = (4T)^k/(b-1), c_k = 2(4T)^k/(b-1), "
                    "b a lower bound for |beta|; here " + std::to_string(to_double(from_K)) + " vs " +
                    std::to_string(to_double(from_sums));
  rec.C12.provenance = "upper bound y_N <= C12 (log N + lambda^D)";

  rec.Y_bound.value = y_bound;
  rec.Y_bound.formula = "sum_k |B_k| 2 (4T)^k / (b-1)";
  rec.Y_bound.provenance = "|Y_R| <= Y_bound N^D for R < N";

  const double C11 = to_double(rec.C11.value), C12 = to_double(rec.C12.value);
  const double c0 = std::pow(ln_b_lo / (2 * C11 * (1 + C12)), 1.0 / D);
  rec.c0.value = down(c0);
  rec.c0.formula = "(log b / (2 C11 (1 + C12)))^(1/D)";
  rec.c0.provenance = "lambda(Gamma;N) >= c0 (N / log N)^(1/D) for the reduced sequence";
  rec.C5.value = down(c0 * std::pow(2.0, -1.0 / D) / 2);
  rec.C5.formula = "c0 2^(-1/D) / 2: undoes the shift by N0 and absorbs gamma >= lambda - 1";
  rec.C5.provenance = "final lower bound for gamma";

  const double C8 = to_double(rec.C8.value), C10 = to_double(c10), Ybd = to_double(y_bound);
  const double half_one_plus_b = (1 + to_double(b_lo)) / 2;
  auto L_lo = [&](double n) { return std::log(n) / ln_b_hi; };
  auto L_hi = [&](double n) { return std::log(n) / ln_b_lo; };
  auto K = [&](double n) { return std::ceil((D + 1) * L_hi(n)); };
  struct Named {
    const char* condition;
    std::function<bool(double)> pred;
  };
  const std::vector<Named> lemma_conditions{
      {"N >= 3", [](double n) { return n >= 3; }},
      {"(1 + 1/(N+1))^D <= (1+|beta|)/2", [&](double n) { return std::pow(1 + 1 / (n + 1), D) <= half_one_plus_b; }},
      {"K(N) + 2 <= N", [&](double n) { return K(n) + 2 <= n; }},
      {"N > Y_bound, so |Y_R| < N^(D+1)", [&](double n) { return n > Ybd; }},
      {"2 C10 log_|beta| N - 2 >= C8", [&](double n) { return 2 * C10 * L_lo(n) - 2 >= C8; }},
      {"C10 log_|beta| N >= 2", [&](double n) { return C10 * L_lo(n) >= 2; }},
      {"C12 log N <= N / (2 C11 log_|beta| N)", [&](double n) { return C12 * std::log(n) <= n / (2 * C11 * L_hi(n)); }},
  };
  std::int64_t c6 = std::max<std::int64_t>(2 * in.N0, static_cast<std::int64_t>(std::ceil(C8)));
  rec.thresholds.push_back({"N >= 2 N0 (shift back to the original digits)", 2 * in.N0});
  rec.thresholds.push_back({"N >= C8", static_cast<std::int64_t>(std::ceil(C8))});
  for (const auto& cond : lemma_conditions) {
    const std::int64_t t = first_holding(cond.pred);
    rec.thresholds.push_back({std::string(cond.condition) + " (applied at N/2)", 2 * t});
    c6 = std::max(c6, 2 * t);
  }
  const double c5x2 = 2 * to_double(rec.C5.value);
  const std::int64_t absorb =
      first_holding([&](double n) { return c5x2 * std::pow(n / std::log(n), 1.0 / D) >= 2 * (1 + kPad); });
  rec.thresholds.push_back({"c0 2^(-1/D) (N / log N)^(1/D) >= 2", absorb});
  c6 = std::max(c6, absorb);
  rec.C6.value = Rational(c6);
  rec.C6.formula = "maximum of the listed thresholds";
  rec.C6.provenance = "all large-N conditions of the argument";
  return rec;
}

std::int64_t ConstantsRecord::K(std::int64_t N) const {
  const double ln_b_lo = std::log(std::nextafter(to_double(inputs.beta_modulus_lower), 0.0));
  return static_cast<std::int64_t>(std::ceil((inputs.D + 1) * std::log(static_cast<double>(N)) / ln_b_lo));
}

double ConstantsRecord::log_beta_lower(double N) const {
  return std::log(N) / std::log(std::nextafter(to_double(inputs.beta_modulus_upper), 10.0));
}

double ConstantsRecord::log_beta_upper(double N) const {
  return std::log(N) / std::log(std::nextafter(to_double(inputs.beta_modulus_lower), 0.0));
}

double ConstantsRecord::theorem_bound(double N) const {
  return to_double(C5.value) * std::pow(N / std::log(N), 1.0 / inputs.D);
}

LowerBoundCheck check_lower_bound_lemma(const std::vector<FieldElement>& Y, Embedder& beta, const Rational& C7,
                                        std::int64_t C8, std::int64_t R_max) {
  const Rational twice = 2 * C7;
  if (twice.get_den() != 1 || !twice.get_num().fits_ulong_p()) {
    throw std::invalid_argument("check_lower_bound_lemma: 2 C7 must be a nonnegative integer");
  }
  const unsigned long p = twice.get_num().get_ui();
  LowerBoundCheck out;
  const std::int64_t last = std::min<std::int64_t>(R_max, static_cast<std::int64_t>(Y.size()) - 1);
  for (std::int64_t R = std::max<std::int64_t>(C8, 1); R <= last; ++R) {
    ++out.checked;
    Integer Rp;
    mpz_ui_pow_ui(Rp.get_mpz_t(), static_cast<unsigned long>(R), p);
    bool ok = false;
    for (long bits = 64; bits <= 1024 && !ok; bits *= 4) {
      const Rational lo = beta.embed(Y[static_cast<std::size_t>(R)], bits).modulus_lower(static_cast<unsigned>(bits));
      ok = lo * lo * Rational(Rp) > 1;
    }
    if (!ok) {
      ++out.failures;
      if (!out.first_failure) out.first_failure = R;
    }
  }
  return out;
}

CountBoundCheck check_count_bound(const std::vector<bool>& above, const std::vector<std::int64_t>& gamma,
                                  std::int64_t N, const ConstantsRecord& rec) {
  CountBoundCheck out;
  out.N = N;
  out.y_N = y_N_count(above, N);
  out.lambda = lambda_count(gamma, N);
  out.bound = to_double(rec.C12.value) *
              (std::log(static_cast<double>(N)) + std::pow(static_cast<double>(out.lambda), rec.inputs.D));
  out.pass = static_cast<double>(out.y_N) <= out.bound * (1 - kPad);
  return out;
}

}  // namespace betadigits
