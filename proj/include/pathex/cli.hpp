#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace pathex {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
  kExitEnvelopeViolation = 4,
};

/// A command plus flat parameters keyed by flag name ("n", "restarts", "n-list", ...).
struct ExperimentManifest {
  std::string command;
  nlohmann::json params = nlohmann::json::object();

  static ExperimentManifest from_json(const nlohmann::json& j);
};

/// Executes the manifest and writes the report to params["out"] (or `out`).
int run(const ExperimentManifest& manifest, std::ostream& out, std::ostream& err);

/// Command-line entry point; flags override values from --manifest.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathex
