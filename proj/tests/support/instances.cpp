#include "instances.hpp"

#include <random>

#include "betadigits/classifier.hpp"

namespace fixtures {

FieldPtr field_of(const std::string& poly) { return NumberField::create(parse_int_poly(poly)); }

Embedder embedder(const FieldPtr& field, int index) {
  return Embedder(isolate_roots(*field).at(static_cast<std::size_t>(index)));
}

FieldElement element(const FieldPtr& field, const std::vector<std::string>& coords) { return field->parse(coords); }

RunConfig golden_run(std::int64_t n_max, std::int64_t horizon, const std::string& pi) {
  RunConfig cfg;
  InstanceConfig& inst = cfg.instance;
  inst.field = golden_field();
  inst.D = 1;
  inst.A = {element(inst.field, {"-1"}), element(inst.field, {"2"})};
  inst.pi = element(inst.field, {pi});
  inst.T = 1;
  inst.digits.kind = DigitSource::Kind::greedy;
  inst.digits.xi = element(inst.field, {"1/2"});
  cfg.n_max = n_max;
  cfg.lemma_horizon = horizon;
  cfg.schedule = {100, 1000, 10000};
  return cfg;
}

RunConfig gaussian_run(std::int64_t n_max, std::int64_t horizon) {
  RunConfig cfg;
  InstanceConfig& inst = cfg.instance;
  inst.field = gaussian_field();
  inst.D = 2;
  inst.A = {element(inst.field, {"-1"}), element(inst.field, {"3"}), element(inst.field, {"3"})};
  inst.pi = element(inst.field, {"3"});
  inst.T = 2;
  inst.digits.kind = DigitSource::Kind::file;
  inst.digits.path = std::string(BETADIGITS_TEST_DATA) + "/gaussian_digits.txt";
  cfg.n_max = n_max;
  cfg.lemma_horizon = horizon;
  cfg.schedule = {100, 1000, 10000};
  return cfg;
}

SyntheticInstance synthetic_d2(std::uint64_t seed, std::size_t length) {
  const FieldPtr F = golden_field();
  SyntheticInstance out;
  out.B.B = {element(F, {"1/3", "1/3"}), element(F, {"-1", "1"}), F->one()};
  std::mt19937_64 rng(seed);
  std::geometric_distribution<int> run(1.0 / 25);
  std::int64_t digit = 1;
  out.digits.bound = 1;
  while (out.digits.digits.size() < length) {
    const int len = 1 + run(rng);
    for (int i = 0; i < len && out.digits.digits.size() < length; ++i) out.digits.digits.push_back(digit);
    digit = 1 - digit;
  }
  out.exchange = exchange_sequence(out.digits);
  return out;
}

ForgedInstance forged_constant_tail(std::size_t length) {
  const FieldPtr F = golden_field();
  const FieldElement beta = F->beta();
  const FieldElement xi = beta.pow(-1) + beta.pow(-4);
  const FieldElement pi = element(F, {"2"});
  const FieldElement A1 = pi * beta.pow(4);
  const FieldElement A0 = -(A1 * xi);
  ForgedInstance out;
  out.B = compute_B({A0, A1}, pi);
  out.digits.bound = 1;
  out.digits.digits.assign(length, 0);
  out.digits.digits.at(0) = 1;
  out.digits.digits.at(3) = 1;
  out.exchange = exchange_sequence(out.digits);
  return out;
}

}  // namespace fixtures
