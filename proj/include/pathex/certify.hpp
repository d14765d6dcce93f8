#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pathex {

struct EnvelopeOptions {
  int n_max = 7;
  int restarts = 8;
  std::uint64_t seed = 1;
  int threads = 1;
  /// Slack on upper envelopes.
  double eps = 1e-6;
  /// Bound on KKT violation and identity residuals at converged measures.
  double certificate_tol = 1e-5;
};

struct EnvelopeCheck {
  std::string name;
  std::string pattern;
  int n = 0;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool pass = false;
};

/// Optimizes every pattern of the bound suite and checks each value against
/// its envelope: path densities, anchored path pairs, the rho transfer bound
/// and degree cap, rho(3), first-order certificates, and blow-up path counts.
std::vector<EnvelopeCheck> run_envelope_suite(const EnvelopeOptions& options);

nlohmann::json to_json(const EnvelopeCheck& check);
std::string envelope_csv(const std::vector<EnvelopeCheck>& checks);

}  // namespace pathex
