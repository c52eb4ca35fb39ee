#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "betadigits/errors.hpp"
#include "betadigits/harness.hpp"

namespace bd = betadigits;

namespace {

struct Options {
  std::string poly;
  std::string config;
  std::optional<std::int64_t> n_max;
  std::string out;
  std::string format;  // empty: csv for tables, json for classify
  long precision_cap = bd::PrecisionPolicy{}.cap_bits;
};

bd::PrecisionPolicy policy_of(const Options& o) {
  bd::PrecisionPolicy p;
  p.cap_bits = o.precision_cap;
  if (p.initial_bits > p.cap_bits) p.initial_bits = p.cap_bits;
  return p;
}

bd::RunConfig config_of(const Options& o) {
  if (o.config.empty()) throw bd::ParseError("--config is required");
  bd::RunConfig cfg = bd::load_config(o.config);
  if (o.n_max) {
    if (*o.n_max < 3) throw bd::ParseError("--n-max must be at least 3");
    cfg.n_max = *o.n_max;
  }
  return cfg;
}

// Writes to DIR/stem.ext when --out is given, stdout otherwise.
void emit(const Options& o, const std::string& stem, const std::string& ext, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(o.out);
  bd::write_atomically(std::filesystem::path(o.out) / (stem + "." + ext), text);
}

void emit_table(const Options& o, const std::string& stem, const bd::Table& t) {
  if (o.format == "json") {
    emit(o, stem, "json", t.to_json());
  } else {
    emit(o, stem, "csv", t.to_csv());
  }
}

int run(const std::string& command, const Options& o) {
  if (command == "classify") {
    if (o.poly.empty()) throw bd::ParseError("classify needs a polynomial (--poly \"c0,c1,...\")");
    const bd::IntPoly p = bd::parse_int_poly(o.poly);
    if (o.format == "csv") {
      emit_table(o, "classify", bd::classify_table(p, policy_of(o)));
    } else {
      emit(o, "classify", "json", bd::classify_json(p, policy_of(o)));
    }
    return 0;
  }

  bd::RunConfig cfg = config_of(o);
  bd::Session session(std::move(cfg), policy_of(o));
  const std::int64_t n = session.config().n_max;
  if (command == "expand") {
    emit_table(o, "expand", bd::expand_table(session, n));
  } else if (command == "transform") {
    if (o.format == "json") {
      emit(o, "transform", "json", bd::transform_json(session, n));
    } else {
      emit_table(o, "transform", bd::transform_table(session, n));
    }
  } else if (command == "linearforms") {
    session.require_hypotheses();
    emit_table(o, "linearforms", bd::linear_forms_table(session, std::min(n, session.lemma_horizon())));
  } else if (command == "constants") {
    emit(o, "constants", "json", bd::constants_json(session));
  } else if (command == "verify") {
    const std::optional<std::filesystem::path> dir =
        o.out.empty() ? std::nullopt : std::optional<std::filesystem::path>(o.out);
    const bd::VerifyOutcome outcome = bd::run_verify(session, dir);
    if (dir) {
      std::cout << "wrote report.json, bounds.csv, yr.csv, constants.json to " << dir->string() << "\n";
    } else {
      std::cout << outcome.report_json;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digit exchanges in beta-expansions: classification, transforms and explicit lower bounds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision-cap", o.precision_cap, "Maximum working precision in bits")
      ->check(CLI::Range(64L, 1L << 24));
  app.add_option("--out", o.out, "Directory for output files (stdout when omitted)");
  app.add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "YAML run description")->required();
    sub->add_option("--n-max", o.n_max, "Largest N (overrides run.n_max)");
  };
  CLI::App* classify = app.add_subcommand("classify", "Classify the root of largest modulus of a polynomial");
  classify->add_option("poly,--poly", o.poly, "Coefficients, constant term first, e.g. \"-1,-1,1\"")->required();
  add_config(app.add_subcommand("expand", "Digits t_n with exchange counts gamma(n) and nu(n)"));
  add_config(app.add_subcommand("transform", "Reduced digits and the exchange sequence s"));
  add_config(app.add_subcommand("linearforms", "Y_R in the power basis with certified |Y_R|"));
  add_config(app.add_subcommand("constants", "Effective constants for the instance"));
  add_config(app.add_subcommand("verify", "Run every check and the bound up to n_max"));
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--out", o.out, "Directory for output files (stdout when omitted)");
    sub->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--precision-cap", o.precision_cap, "Maximum working precision in bits")
        ->check(CLI::Range(64L, 1L << 24));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, o);
  } catch (const bd::HypothesisIIIViolated& e) {
    std::cerr << "hypothesis (iii) violated: witness n=" << e.witness() << " (" << e.what() << ")\n";
    return bd::exit_code(e.category());
  } catch (const bd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bd::exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
