#include "betadigits/beta_expansion.hpp"

#include <charconv>
#include <fstream>
#include <unordered_map>

#include "betadigits/errors.hpp"

namespace betadigits {

std::optional<std::size_t> DigitData::first_nonzero() const {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) return i + 1;
  }
  return std::nullopt;
}

namespace {

std::string state_key(const FieldElement& x) {
  std::string key;
  for (const auto& c : x.coords()) {
    key += c.get_str(16);
    key += ',';
  }
  return key;
}

void require_real_base(Embedder& beta, const NumberField& field) {
  if (!beta.root().is_real() || beta.sign_real(field.beta() - field.one()) <= 0) {
    throw OutOfRange("greedy digits need a real base beta > 1");
  }
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw OutOfRange("digit does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

std::int64_t greedy_digit_bound(Embedder& beta, const NumberField& field) {
  const FieldElement b = field.beta();
  const Integer fl = beta.floor_real(b);
  const bool integral = b == field.from_rational(Rational(fl));
  return to_int64(integral ? Integer(fl - 1) : fl);
}

GreedyExpansion greedy_digits(const FieldElement& xi, Embedder& beta, std::size_t count) {
  const NumberField& field = *xi.field();
  require_real_base(beta, field);
  const bool integer_base = field.degree() == 1;
  if (beta.sign_real(xi) < 0 || beta.sign_real(xi - field.one()) > 0 ||
      (integer_base && xi == field.one())) {
    throw OutOfRange("xi = " + xi.to_string() + " lies outside the greedy domain");
  }

  GreedyExpansion out;
  out.data.origin = DigitOrigin::greedy;
  out.data.bound = greedy_digit_bound(beta, field);
  out.data.digits.reserve(count);

  std::unordered_map<std::string, std::size_t> seen;
  FieldElement state = xi;
  std::size_t n = 0;
  for (; n < count; ++n) {
    if (!out.period) {
      auto [it, inserted] = seen.emplace(state_key(state), n);
      if (!inserted) {
        out.preperiod = it->second;
        out.period = n - it->second;
        break;
      }
    }
    const FieldElement x = state.times_beta();
    const Integer t = beta.floor_real(x);
    out.data.digits.push_back(to_int64(t));
    state = x - field.from_rational(Rational(t));
  }
  if (out.period) {
    // Periodic from here on: copy digits and land on the matching state.
    const std::size_t start = *out.preperiod;
    const std::size_t p = *out.period;
    for (; n < count; ++n) out.data.digits.push_back(out.data.digits[start + (n - start) % p]);
    FieldElement s = xi;
    const std::size_t target = count < start ? count : start + (count - start) % p;
    for (std::size_t i = 0; i < target; ++i) {
      s = s.times_beta() - field.from_rational(Rational(out.data.digits[i]));
    }
    state = s;
  }
  out.final_state = state;
  return out;
}

std::int64_t gamma_count(const DigitData& d, std::size_t N) {
  if (N + 1 > d.size()) {
    throw InsufficientDigits("gamma(" + std::to_string(N) + ") needs " + std::to_string(N + 1) + " digits, have " +
                             std::to_string(d.size()));
  }
  std::int64_t c = 0;
  for (std::size_t n = 1; n <= N; ++n) c += d.t(n) != d.t(n + 1);
  return c;
}

std::int64_t nu_count(const DigitData& d, std::size_t N) {
  if (N > d.size()) {
    throw InsufficientDigits("nu(" + std::to_string(N) + ") needs " + std::to_string(N) + " digits, have " +
                             std::to_string(d.size()));
  }
  std::int64_t c = 0;
  for (std::size_t n = 1; n <= N; ++n) c += d.t(n) != 0;
  return c;
}

bool check_gamma_nu_relation(const DigitData& d, std::size_t N) {
  return 2 * nu_count(d, N) >= gamma_count(d, N) - 2;
}

std::vector<std::int64_t> gamma_prefix(const DigitData& d) {
  std::vector<std::int64_t> g(d.size(), 0);
  for (std::size_t n = 1; n < d.size(); ++n) g[n] = g[n - 1] + (d.t(n) != d.t(n + 1));
  return g;
}

std::vector<std::int64_t> nu_prefix(const DigitData& d) {
  std::vector<std::int64_t> v(d.size() + 1, 0);
  for (std::size_t n = 1; n <= d.size(); ++n) v[n] = v[n - 1] + (d.t(n) != 0);
  return v;
}

void validate_bound(const DigitData& d) {
  for (std::size_t i = 0; i < d.digits.size(); ++i) {
    const std::int64_t t = d.digits[i];
    if (t > d.bound || t < -d.bound) {
      throw ParseError("digit t_" + std::to_string(i + 1) + " = " + std::to_string(t) + " violates |t| <= " +
                       std::to_string(d.bound));
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int64(std::string_view s, const std::string& where) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(where + ": not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

DigitData read_digit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open digit file " + path.string());
  DigitData d;
  std::optional<std::int64_t> header;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (s.front() == '#') {
      s = trim(s.substr(1));
      if (s.substr(0, 2) == "T=") {
        if (header || !d.digits.empty()) throw ParseError(where + ": misplaced T header");
        header = parse_int64(trim(s.substr(2)), where);
        if (*header <= 0) throw ParseError(where + ": T must be positive");
      }
      continue;
    }
    d.digits.push_back(parse_int64(s, where));
  }
  if (header) {
    d.bound = *header;
    validate_bound(d);
  } else {
    for (auto t : d.digits) d.bound = std::max(d.bound, t < 0 ? -t : t);
  }
  return d;
}

void write_digit_file(const std::filesystem::path& path, const DigitData& d) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write digit file " + path.string());
  out << "# T=" << d.bound << '\n';
  for (auto t : d.digits) out << t << '\n';
}

}  // namespace betadigits
