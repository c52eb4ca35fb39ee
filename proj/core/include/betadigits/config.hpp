#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "betadigits/linear_forms.hpp"

namespace betadigits {

/// One run: an instance plus the horizons to check it on.
struct RunConfig {
  InstanceConfig instance;
  std::int64_t n_max = 10000;
  /// Y_R tables, lemma checks and series checks run for R below this horizon.
  std::int64_t lemma_horizon = 10000;
  /// N values reported individually.
  std::vector<std::int64_t> schedule{100, 1000, 10000};
};

/// Loads a YAML run description. Relative digit-file paths resolve against the config's directory.
/// Throws ParseError (and the NumberField errors for a bad polynomial).
RunConfig load_config(const std::filesystem::path& path);

}  // namespace betadigits
