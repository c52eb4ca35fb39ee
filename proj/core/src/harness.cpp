#include "betadigits/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "betadigits/errors.hpp"

namespace betadigits {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kSeriesTerms = 256;
constexpr std::int64_t kSeriesMaxR = 200;
constexpr std::int64_t kRhoMargin = kSeriesTerms + 64;
constexpr std::int64_t kRecursionSamples = 100;
constexpr std::int64_t kRecursionMaxR = 2000;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Fixed-point decimal of q rounded toward -inf (up = false) or +inf.
std::string decimal(const Rational& q, bool up, int places = 15) {
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Rational scaled = q * Rational(scale);
  const Integer n = up ? ceil(scaled) : floor(scaled);
  std::string digits = to_string(Integer(abs(n)));
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return (n < 0 ? "-" : "") + digits;
}

Json element_json(const FieldElement& x) { return x.serialize(); }

Json constant_json(const NamedConstant& c) {
  return Json{{"value", to_string(c.value)}, {"approx", c.approx()}, {"formula", c.formula}, {"provenance", c.provenance}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::input: return 2;
    case ErrorCategory::domain: return 3;
    case ErrorCategory::hypothesis: return 4;
    case ErrorCategory::identity: return 5;
    case ErrorCategory::numeric: break;
  }
  return 1;
}

std::string Table::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

std::string Table::to_json() const {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) obj[header[i]] = r[i];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw ParseError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

Classification classify_or_describe(const NumberField& field, const PrecisionPolicy& policy) {
  try {
    return classify(field, policy);
  } catch (const NoRootOutsideUnitDisk&) {
    Classification c;
    c.roots = isolate_roots(field, policy);
    c.unit_circle_count = unit_circle_root_count(field.poly());
    c.kind = NumberKind::None;
    return c;
  }
}

}  // namespace

std::string classify_json(const IntPoly& p, const PrecisionPolicy& policy) {
  const auto field = NumberField::create(p);
  const Classification c = classify(*field, policy);
  Json moduli = Json::array();
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    const auto& m = c.moduli[i];
    moduli.push_back(Json{{"root", {c.roots[i].approx_re(), c.roots[i].approx_im()}},
                          {"interval", {decimal(m.lower, false), decimal(m.upper, true)}},
                          {"versus_one", m.versus_one}});
  }
  Json out{{"polynomial", pretty(p)},
           {"kind", to_string(c.kind)},
           {"distinguished_root", c.distinguished_root},
           {"moduli", moduli},
           {"unit_circle_count", c.unit_circle_count}};
  return out.dump(2) + "\n";
}

Table classify_table(const IntPoly& p, const PrecisionPolicy& policy) {
  const auto field = NumberField::create(p);
  const Classification c = classify(*field, policy);
  Table t{{"polynomial", "kind", "unit_circle_count", "root", "re", "im", "modulus_lower", "modulus_upper", "versus_one"}, {}};
  for (std::size_t i = 0; i < c.roots.size(); ++i) {
    t.rows.push_back({pretty(p), to_string(c.kind), std::to_string(c.unit_circle_count), std::to_string(i),
                      num(c.roots[i].approx_re()), num(c.roots[i].approx_im()), decimal(c.moduli[i].lower, false),
                      decimal(c.moduli[i].upper, true), std::to_string(c.moduli[i].versus_one)});
  }
  return t;
}

Session::Session(RunConfig config, PrecisionPolicy policy) : config_(std::move(config)), policy_(policy) {
  classification_ = classify_or_describe(field(), policy_);
  const int idx = config_.instance.root_index;
  if (idx < 0 || idx >= static_cast<int>(classification_.roots.size())) {
    throw ParseError("field.root = " + std::to_string(idx) + " is out of range (degree " +
                     std::to_string(field().degree()) + ")");
  }
  beta_.emplace(classification_.roots[static_cast<std::size_t>(idx)], policy_);
}

std::int64_t Session::lemma_horizon() const { return config_.lemma_horizon; }

std::size_t Session::digits_needed(std::size_t first_nonzero) const {
  const auto n0 = static_cast<std::int64_t>(first_nonzero);
  const std::int64_t need = std::max({config_.n_max + 1, config_.n_max + n0 - 1,
                                      std::max<std::int64_t>(config_.lemma_horizon, kSeriesMaxR + 1) + kRhoMargin + n0});
  return static_cast<std::size_t>(need);
}

const DigitData& Session::digits() {
  if (digits_) return *digits_;
  const InstanceConfig& inst = config_.instance;
  DigitData d;
  if (inst.digits.kind == DigitSource::Kind::greedy) {
    constexpr std::size_t slack = 64;
    d = greedy_digits(*inst.digits.xi, *beta_, digits_needed(1) + slack).data;
    const auto n0 = d.first_nonzero();
    if (n0 && *n0 > slack + 1) d = greedy_digits(*inst.digits.xi, *beta_, digits_needed(*n0)).data;
  } else {
    d = read_digit_file(inst.digits.path);
    const std::size_t need = digits_needed(d.first_nonzero().value_or(1));
    if (d.size() < need) {
      throw InsufficientDigits("digit file " + inst.digits.path.string() + " has " + std::to_string(d.size()) +
                               " digits, the run needs " + std::to_string(need));
    }
  }
  if (inst.T) {
    d.bound = *inst.T;
    validate_bound(d);
  }
  digits_ = std::move(d);
  return *digits_;
}

const Reduction& Session::reduction() {
  if (!reduction_) reduction_ = reduce_to_N0(digits(), config_.instance.A);
  return *reduction_;
}

const ExchangeData& Session::exchange() {
  if (!exchange_) exchange_ = exchange_sequence(reduction().digits);
  return *exchange_;
}

const BCoefficients& Session::B() {
  if (!B_) B_ = compute_B(reduction().coefficients, config_.instance.pi);
  return *B_;
}

const HypothesisIIIResult& Session::hypothesis_iii() {
  if (!hyp3_) hyp3_ = check_hypothesis_iii(B()[0]);
  return *hyp3_;
}

void Session::require_hypotheses() {
  const Classification& c = classification_;
  if (c.kind == NumberKind::None) {
    throw HypothesisViolated("beta is neither quasi-Pisot nor quasi-Salem (" + pretty(field().poly()) + ")");
  }
  const int idx = config_.instance.root_index;
  if (idx != c.distinguished_root && !(c.conjugate_root && idx == *c.conjugate_root)) {
    throw HypothesisViolated("field.root = " + std::to_string(idx) + " is not the root of modulus > 1 (index " +
                             std::to_string(c.distinguished_root) + ")");
  }
  const InstanceConfig& inst = config_.instance;
  for (std::size_t k = 0; k < inst.A.size(); ++k) {
    if (!inst.A[k].is_integral()) throw HypothesisViolated("A_" + std::to_string(k) + " is not in Z[beta]");
  }
  if (!inst.pi.is_integral()) throw HypothesisViolated("pi is not in Z[beta]");
  if (inst.digits.kind == DigitSource::Kind::greedy) {
    const FieldElement& xi = *inst.digits.xi;
    FieldElement value = field().zero();
    for (std::size_t k = inst.A.size(); k-- > 0;) value = value * xi + inst.A[k];
    if (!value.is_zero()) throw HypothesisViolated("xi is not a root of sum_k A_k X^k (value " + value.to_string() + ")");
  }
  B();
  const HypothesisIIIResult& h = hypothesis_iii();
  if (!h.holds) throw HypothesisIIIViolated(h.witness.value_or(1));
}

const RhoTable& Session::rho() {
  if (!rho_) {
    const auto available = static_cast<std::int64_t>(exchange().s.size());
    const std::int64_t want = std::max<std::int64_t>(config_.lemma_horizon, kSeriesMaxR + 1) + kRhoMargin;
    rho_.emplace(exchange(), B().D(), std::min(available, want));
  }
  return *rho_;
}

const std::vector<FieldElement>& Session::Y() {
  if (!Y_) Y_ = Y_table(B(), rho(), std::min(config_.lemma_horizon, rho().length()));
  return *Y_;
}

const std::vector<bool>& Session::above_threshold() {
  if (!above_) above_ = threshold_flags(Y(), B(), *beta_);
  return *above_;
}

const ConstantsRecord& Session::constants() {
  if (!constants_) {
    const Classification& c = classification_;
    const ConstantsInputs in =
        gather_inputs(B(), c.roots, c.distinguished_root, c.conjugate_root, digits().bound,
                      static_cast<std::int64_t>(reduction().first_nonzero), *beta_);
    constants_ = derive_final_constants(in);
  }
  return *constants_;
}

Table expand_table(Session& s, std::int64_t N) {
  const DigitData& d = s.digits();
  if (N < 1 || static_cast<std::size_t>(N) + 1 > d.size()) {
    throw InsufficientDigits("expand needs N+1 = " + std::to_string(N + 1) + " digits, have " + std::to_string(d.size()));
  }
  const auto gamma = gamma_prefix(d);
  const auto nu = nu_prefix(d);
  Table t{{"n", "t_n", "gamma", "nu"}, {}};
  for (std::int64_t n = 1; n <= N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.rows.push_back({std::to_string(n), std::to_string(d.t(i)), std::to_string(gamma[i]), std::to_string(nu[i])});
  }
  return t;
}

Table transform_table(Session& s, std::int64_t N) {
  const ExchangeData& e = s.exchange();
  const DigitData& rd = s.reduction().digits;
  N = std::min<std::int64_t>(N, static_cast<std::int64_t>(e.s.size()));
  Table t{{"n", "t_reduced", "s_n", "in_gamma"}, {}};
  for (std::int64_t n = 0; n < N; ++n) {
    const auto i = static_cast<std::size_t>(n);
    t.rows.push_back({std::to_string(n), std::to_string(rd.t(i + 1)), std::to_string(e.s[i]), e.s[i] ? "1" : "0"});
  }
  return t;
}

std::string transform_json(Session& s, std::int64_t N) {
  const ExchangeData& e = s.exchange();
  const Reduction& r = s.reduction();
  N = std::min<std::int64_t>(N, static_cast<std::int64_t>(e.s.size()));
  Json reduced = Json::array();
  for (const auto& a : r.coefficients) reduced.push_back(element_json(a));
  Json gamma = Json::array();
  for (auto g : e.support) {
    if (g >= N) break;
    gamma.push_back(g);
  }
  Json out{{"N0", r.first_nonzero},
           {"A_reduced", reduced},
           {"s", std::vector<std::int64_t>(e.s.begin(), e.s.begin() + N)},
           {"gamma_indices", gamma},
           {"T", e.bound}};
  return out.dump(2) + "\n";
}

Table linear_forms_table(Session& s, std::int64_t N) {
  const auto& Y = s.Y();
  const auto& above = s.above_threshold();
  N = std::min<std::int64_t>(N, static_cast<std::int64_t>(Y.size()));
  const int d = s.field().degree();
  Table t;
  t.header.push_back("R");
  for (int i = 0; i < d; ++i) t.header.push_back("y" + std::to_string(i));
  for (const char* h : {"abs_lower", "abs_upper", "at_least_C9"}) t.header.push_back(h);
  for (std::int64_t R = 0; R < N; ++R) {
    const auto i = static_cast<std::size_t>(R);
    std::vector<std::string> row{std::to_string(R)};
    for (const auto& c : Y[i].coords()) row.push_back(to_string(c));
    const ComplexBall b = s.beta().embed(Y[i], 64);
    row.push_back(num(to_double(b.modulus_lower(64))));
    row.push_back(num(to_double(b.modulus_upper(64))));
    row.push_back(above[i] ? "1" : "0");
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

Json constants_object(const ConstantsRecord& rec) {
  Json sigma = Json::array();
  for (const auto& b : rec.inputs.sigma_bounds) sigma.push_back(Json{{"value", to_string(b)}, {"approx", to_double(b)}});
  Json thresholds = Json::array();
  for (const auto& t : rec.thresholds) thresholds.push_back(Json{{"condition", t.condition}, {"N", t.minimal_N}});
  return Json{{"inputs",
               {{"d", rec.inputs.degree},
                {"D", rec.inputs.D},
                {"T", rec.inputs.T},
                {"N0", rec.inputs.N0},
                {"real_base", rec.inputs.real_base},
                {"beta_modulus", {to_double(rec.inputs.beta_modulus_lower), to_double(rec.inputs.beta_modulus_upper)}},
                {"sigma_bounds", sigma}}},
              {"J", constant_json(rec.J)},
              {"C7", constant_json(rec.C7)},
              {"C8", constant_json(rec.C8)},
              {"C9", constant_json(rec.C9)},
              {"C10", constant_json(rec.C10)},
              {"C11", constant_json(rec.C11)},
              {"C12", constant_json(rec.C12)},
              {"Y_bound", constant_json(rec.Y_bound)},
              {"c0", constant_json(rec.c0)},
              {"C5", constant_json(rec.C5)},
              {"C6", constant_json(rec.C6)},
              {"K", {{"formula", "ceil((D+1) log N / log b), b a lower bound for |beta|"},
                     {"provenance", "split point of the sum over Y_R"}}},
              {"thresholds", thresholds},
              {"note", "C11, C12 and the thresholds are this program's explicit instances of constants whose "
                       "existence the argument asserts"}};
}

}  // namespace

std::string constants_json(Session& s) {
  s.require_hypotheses();
  return constants_object(s.constants()).dump(2) + "\n";
}

VerifyOutcome run_verify(Session& s, const std::optional<std::filesystem::path>& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  s.require_hypotheses();
  const RunConfig& cfg = s.config();
  const FieldPtr& field = cfg.instance.field;
  const DigitData& digits = s.digits();
  const Reduction& red = s.reduction();
  const ExchangeData& ex = s.exchange();
  const BCoefficients& B = s.B();
  const RhoTable& rho = s.rho();
  const auto& Y = s.Y();
  const auto H = static_cast<std::int64_t>(Y.size());

  // Exact identities; any failure aborts before output is written.
  Json identities;
  {
    std::int64_t checked = 0;
    for (std::size_t M : {std::size_t{1}, std::size_t{2}, std::size_t{10}, std::size_t{100}, std::size_t{1000}}) {
      if (M > red.digits.size()) break;
      if (!telescoping_identity_holds(field, red.digits, ex, M)) {
        throw IdentityFailure("telescoping identity fails at M = " + std::to_string(M));
      }
      ++checked;
    }
    identities["telescoping"] = Json{{"checked", checked}};
  }
  {
    const EtaCheck eta = verify_eta_identity(field, s.beta(), red.digits, ex, std::min<std::size_t>(30, red.digits.size()));
    if (!eta.ok) throw IdentityFailure("eta identity exceeds its tail bound");
    identities["eta_M30"] = Json{{"gap_upper", to_double(eta.gap_upper)}, {"allowed", to_double(eta.allowed)}};
  }
  {
    const ZeroScan zs = scan_Y_zeros(Y, B);
    if (!zs.zeros.empty()) {
      throw IdentityFailure("Y_" + std::to_string(zs.zeros.front()) + " vanishes although hypothesis (iii) holds");
    }
    identities["Y_nonzero"] = Json{{"checked", H}};
  }
  {
    std::int64_t checked = 0;
    for (std::int64_t R = 0; R < std::min<std::int64_t>(H, kRecursionMaxR); R = R < 16 ? R + 1 : R * 2) {
      if (!(Y_R_exact(R, B, rho) == Y[static_cast<std::size_t>(R)])) {
        throw IdentityFailure("closed form and recurrence disagree at R = " + std::to_string(R));
      }
      ++checked;
    }
    identities["closed_form"] = Json{{"checked", checked}};
  }
  std::vector<Sumset> chain = sumset_chain(ex.support, B.D() - 1, H);
  const GapStructure G = gap_structure(chain.back(), H);
  {
    std::mt19937_64 rng(20240229);
    const std::int64_t limit = std::min(H, kRecursionMaxR);
    std::vector<std::int64_t> candidates;
    for (std::int64_t R = 1; R < limit; ++R) {
      const std::int64_t h = G.interval_of(R);
      if (G.interval(h).first < R) candidates.push_back(R);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    if (static_cast<std::int64_t>(candidates.size()) > kRecursionSamples) candidates.resize(kRecursionSamples);
    std::sort(candidates.begin(), candidates.end());
    for (std::int64_t R : candidates) {
      if (!verify_recursion(R, G.interval_of(R), B, rho, G)) {
        throw IdentityFailure("recursion between Y_{R-1} and Y_R fails at R = " + std::to_string(R));
      }
    }
    identities["recursion"] = Json{{"checked", candidates.size()}};
  }
  {
    std::int64_t checked = 0;
    double worst = 0;
    for (std::int64_t R = 0; R <= kSeriesMaxR && R < H && R + kSeriesTerms < rho.length(); ++R) {
      const SeriesCheck sc = series_consistency(R, kSeriesTerms, Y[static_cast<std::size_t>(R)], B, rho, s.beta());
      if (!sc.ok) throw IdentityFailure("Y_" + std::to_string(R) + " disagrees with its series beyond the tail bound");
      worst = std::max(worst, to_double(sc.difference_upper / sc.tail_bound));
      ++checked;
    }
    identities["series"] = Json{{"checked", checked}, {"worst_fraction_of_tail", worst}};
  }

  const ConstantsRecord& rec = s.constants();
  const auto& above = s.above_threshold();

  Json lemmas;
  {
    const LowerBoundCheck lb = check_lower_bound_lemma(Y, s.beta(), rec.C7.value,
                                                       static_cast<std::int64_t>(floor(rec.C8.value).get_si()), H - 1);
    lemmas["lower_bound"] = Json{{"R_range", {to_string(rec.C8.value), H - 1}},
                                 {"checked", lb.checked},
                                 {"failures", lb.failures},
                                 {"first_failure", lb.first_failure ? Json(*lb.first_failure) : Json(nullptr)}};
  }
  Json count_rows = Json::array(), gap_rows = Json::array();
  for (std::int64_t N : cfg.schedule) {
    if (N > H || N < 3) continue;
    const CountBoundCheck cb = check_count_bound(above, ex.support, N, rec);
    count_rows.push_back(Json{{"N", N}, {"y_N", cb.y_N}, {"lambda", cb.lambda}, {"bound", cb.bound}, {"pass", cb.pass}});
    const GapStructure GN = gap_structure(chain.back(), N);
    const GapLemmaCheck gl = check_gap_lemma(GN, above, to_double(rec.C10.value), rec.log_beta_lower(static_cast<double>(N)));
    gap_rows.push_back(Json{{"N", N},
                            {"tau", GN.tau()},
                            {"admissible", gl.admissible},
                            {"violations", gl.violations},
                            {"worst_distance", gl.worst_distance},
                            {"allowed", gl.allowed}});
  }
  lemmas["count_bound"] = count_rows;
  lemmas["gap"] = gap_rows;

  // Bound rows for every N.
  const auto gamma = gamma_prefix(digits);
  const auto nu = nu_prefix(digits);
  const std::int64_t C6 = floor(rec.C6.value).get_si();
  Table bounds{{"N", "gamma", "nu", "lambda", "bound", "pass", "prior_curve"}, {}};
  std::int64_t failures_from_C6 = 0, failures_from_3 = 0;
  std::optional<std::int64_t> first_failure;
  Json schedule_rows = Json::array();
  for (std::int64_t N = 3; N <= cfg.n_max; ++N) {
    const auto i = static_cast<std::size_t>(N);
    const double bound = rec.theorem_bound(static_cast<double>(N));
    const bool pass = static_cast<double>(gamma[i]) >= bound;
    const std::int64_t lambda = lambda_count(ex.support, N);
    const double lnN = std::log(static_cast<double>(N));
    const double prior = std::pow(lnN, 1.5) / std::sqrt(std::log(lnN));
    if (!pass) {
      ++failures_from_3;
      if (N >= C6) ++failures_from_C6;
      if (!first_failure) first_failure = N;
    }
    bounds.rows.push_back({std::to_string(N), std::to_string(gamma[i]), std::to_string(nu[i]), std::to_string(lambda),
                           num(bound), pass ? "1" : "0", num(prior)});
    if (std::find(cfg.schedule.begin(), cfg.schedule.end(), N) != cfg.schedule.end() || N == cfg.n_max) {
      schedule_rows.push_back(Json{{"N", N}, {"gamma", gamma[i]}, {"nu", nu[i]}, {"lambda", lambda}, {"bound", bound}, {"pass", pass}});
    }
  }

  const Classification& cls = s.classification();
  Json instance{{"polynomial", pretty(field->poly())},
                {"root_index", cfg.instance.root_index},
                {"beta", {s.beta().root().approx_re(), s.beta().root().approx_im()}},
                {"kind", to_string(cls.kind)},
                {"D", B.D()},
                {"pi", element_json(cfg.instance.pi)},
                {"T", digits.bound},
                {"N0", red.first_nonzero},
                {"digit_source", cfg.instance.digits.kind == DigitSource::Kind::greedy ? "greedy" : "file"}};
  Json A = Json::array(), Ared = Json::array(), Bj = Json::array();
  for (const auto& a : cfg.instance.A) A.push_back(element_json(a));
  for (const auto& a : red.coefficients) Ared.push_back(element_json(a));
  for (const auto& b : B.B) Bj.push_back(element_json(b));
  instance["A"] = A;
  instance["A_reduced"] = Ared;
  instance["B"] = Bj;
  if (cfg.instance.digits.xi) instance["xi"] = element_json(*cfg.instance.digits.xi);

  const HypothesisIIIResult& h3 = s.hypothesis_iii();
  Json report{{"instance", instance},
              {"hypotheses",
               {{"ii", true},
                {"iii", {{"holds", h3.holds}, {"modulus", to_string(h3.modulus)}, {"steps", h3.steps},
                         {"B0_integral", h3.integral_at_zero}}}}},
              {"identities", identities},
              {"constants", constants_object(rec)},
              {"lemmas", lemmas},
              {"bound",
               {{"C5", rec.C5.approx()},
                {"C6", C6},
                {"n_max", cfg.n_max},
                {"range_empty", C6 > cfg.n_max},
                {"failures_from_C6", failures_from_C6},
                {"failures_from_3", failures_from_3},
                {"first_failure", first_failure ? Json(*first_failure) : Json(nullptr)},
                {"rows", schedule_rows}}}};
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["wall_time_seconds"] = seconds;

  VerifyOutcome out;
  out.report_json = report.dump(2) + "\n";
  out.all_identities_hold = true;
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    Table yr = linear_forms_table(s, H);
    write_atomically(*out_dir / "bounds.csv", bounds.to_csv());
    write_atomically(*out_dir / "yr.csv", yr.to_csv());
    write_atomically(*out_dir / "constants.json", constants_object(rec).dump(2) + "\n");
    write_atomically(*out_dir / "report.json", out.report_json);
  }
  return out;
}

}  // namespace betadigits
