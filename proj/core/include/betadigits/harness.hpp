#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "betadigits/classifier.hpp"
#include "betadigits/config.hpp"
#include "betadigits/constants.hpp"
#include "betadigits/errors.hpp"
#include "betadigits/exchange.hpp"
#include "betadigits/linear_forms.hpp"

namespace betadigits {

/// Process exit code for a failure category: input 2, domain 3, hypothesis 4, identity 5, numeric 1.
int exit_code(ErrorCategory category);

/// Rows of strings; rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  std::string to_json() const;
};

/// Writes via a temporary file in the same directory and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// JSON object {polynomial, kind, moduli, unit_circle_count}.
std::string classify_json(const IntPoly& p, const PrecisionPolicy& policy = {});
Table classify_table(const IntPoly& p, const PrecisionPolicy& policy = {});

/// Staged evaluation of one instance; each stage is computed on first use.
class Session {
 public:
  Session(RunConfig config, PrecisionPolicy policy = {});

  const RunConfig& config() const { return config_; }
  const NumberField& field() const { return *config_.instance.field; }
  const Classification& classification() const { return classification_; }
  Embedder& beta() { return *beta_; }

  /// Original digits t_1.. (enough for n_max and the lemma horizon).
  const DigitData& digits();
  const Reduction& reduction();
  const ExchangeData& exchange();
  /// Throws HypothesisIIViolated.
  const BCoefficients& B();
  const HypothesisIIIResult& hypothesis_iii();
  /// Checks every standing assumption; throws the matching hypothesis error.
  void require_hypotheses();

  const RhoTable& rho();
  const std::vector<FieldElement>& Y();
  const std::vector<bool>& above_threshold();
  const ConstantsRecord& constants();

  std::int64_t lemma_horizon() const;

 private:
  std::size_t digits_needed(std::size_t first_nonzero) const;

  RunConfig config_;
  PrecisionPolicy policy_;
  Classification classification_;
  std::optional<Embedder> beta_;
  std::optional<DigitData> digits_;
  std::optional<Reduction> reduction_;
  std::optional<ExchangeData> exchange_;
  std::optional<BCoefficients> B_;
  std::optional<HypothesisIIIResult> hyp3_;
  std::optional<RhoTable> rho_;
  std::optional<std::vector<FieldElement>> Y_;
  std::optional<std::vector<bool>> above_;
  std::optional<ConstantsRecord> constants_;
};

/// (n, t_n, gamma(n), nu(n)) for n = 1..N.
Table expand_table(Session& s, std::int64_t N);
/// (n, t~_{n+1}, s_n, in_gamma) for n = 0..N-1 of the reduced sequence.
Table transform_table(Session& s, std::int64_t N);
std::string transform_json(Session& s, std::int64_t N);
/// (R, coordinates of Y_R, |Y_R| bracket, |Y_R| >= C_9) for R < N.
Table linear_forms_table(Session& s, std::int64_t N);
std::string constants_json(Session& s);

struct VerifyOutcome {
  std::string report_json;
  bool all_identities_hold = false;
};

/// Full pipeline. Writes report.json, bounds.csv, yr.csv and constants.json into out_dir when given.
/// Throws IdentityFailure after writing nothing if an exact identity fails.
VerifyOutcome run_verify(Session& s, const std::optional<std::filesystem::path>& out_dir);

}  // namespace betadigits
