#include "betadigits/config.hpp"

#include <yaml-cpp/yaml.h>

#include "betadigits/errors.hpp"

namespace betadigits {

namespace {

std::string scalar_text(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsScalar()) throw ParseError(what + ": expected a scalar");
  return n.Scalar();
}

IntPoly read_polynomial(const YAML::Node& n) {
  if (!n) throw ParseError("field.polynomial is missing");
  if (n.IsScalar()) return parse_int_poly(n.Scalar());
  if (!n.IsSequence()) throw ParseError("field.polynomial: expected a list or a comma-separated string");
  std::string joined;
  for (const auto& c : n) {
    if (!joined.empty()) joined += ',';
    joined += scalar_text(c, "field.polynomial entry");
  }
  return parse_int_poly(joined);
}

// An element is a list of power-basis coordinates, or a single scalar for a rational.
FieldElement read_element(const YAML::Node& n, const NumberField& field, const std::string& what) {
  if (!n) throw ParseError(what + " is missing");
  std::vector<std::string> coords;
  if (n.IsScalar()) {
    coords.push_back(n.Scalar());
  } else if (n.IsSequence()) {
    for (const auto& c : n) coords.push_back(scalar_text(c, what + " coordinate"));
  } else {
    throw ParseError(what + ": expected a coordinate list");
  }
  if (coords.size() > static_cast<std::size_t>(field.degree())) {
    throw ParseError(what + ": more coordinates than the field degree");
  }
  return field.parse(coords);
}

std::int64_t read_int(const YAML::Node& n, const std::string& what) {
  try {
    return n.as<std::int64_t>();
  } catch (const YAML::Exception&) {
    throw ParseError(what + ": expected an integer");
  }
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
  YAML::Node root;
  try {
    root = YAML::LoadFile(path.string());
  } catch (const YAML::Exception& e) {
    throw ParseError("cannot read config " + path.string() + ": " + e.what());
  }
  RunConfig cfg;
  InstanceConfig& inst = cfg.instance;

  const YAML::Node field = root["field"];
  if (!field) throw ParseError("config has no 'field' section");
  inst.field = NumberField::create(read_polynomial(field["polynomial"]));
  if (field["root"]) inst.root_index = static_cast<int>(read_int(field["root"], "field.root"));

  const YAML::Node in = root["instance"];
  if (!in) throw ParseError("config has no 'instance' section");
  const YAML::Node A = in["A"];
  if (!A || !A.IsSequence() || A.size() < 2) throw ParseError("instance.A must list A_0..A_D with D >= 1");
  for (std::size_t k = 0; k < A.size(); ++k) {
    inst.A.push_back(read_element(A[k], *inst.field, "instance.A[" + std::to_string(k) + "]"));
  }
  inst.D = static_cast<int>(inst.A.size()) - 1;
  if (in["D"] && read_int(in["D"], "instance.D") != inst.D) {
    throw ParseError("instance.D disagrees with the number of coefficients A_k");
  }
  inst.pi = read_element(in["pi"], *inst.field, "instance.pi");
  if (in["T"]) {
    inst.T = read_int(in["T"], "instance.T");
    if (*inst.T <= 0) throw ParseError("instance.T must be positive");
  }

  const YAML::Node digits = root["digits"];
  if (!digits) throw ParseError("config has no 'digits' section");
  const std::string source = scalar_text(digits["source"], "digits.source");
  if (source == "greedy") {
    inst.digits.kind = DigitSource::Kind::greedy;
    inst.digits.xi = read_element(digits["xi"], *inst.field, "digits.xi");
  } else if (source == "file") {
    inst.digits.kind = DigitSource::Kind::file;
    std::filesystem::path p = scalar_text(digits["path"], "digits.path");
    if (p.is_relative()) p = path.parent_path() / p;
    inst.digits.path = p;
  } else {
    throw ParseError("digits.source must be 'greedy' or 'file', got '" + source + "'");
  }

  if (const YAML::Node run = root["run"]) {
    if (run["n_max"]) cfg.n_max = read_int(run["n_max"], "run.n_max");
    if (run["lemma_horizon"]) cfg.lemma_horizon = read_int(run["lemma_horizon"], "run.lemma_horizon");
    if (run["schedule"]) {
      cfg.schedule.clear();
      for (const auto& n : run["schedule"]) cfg.schedule.push_back(read_int(n, "run.schedule entry"));
    }
  }
  if (cfg.n_max < 3) throw ParseError("run.n_max must be at least 3");
  if (cfg.lemma_horizon < 2) throw ParseError("run.lemma_horizon must be at least 2");
  return cfg;
}

}  // namespace betadigits
