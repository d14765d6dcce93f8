#include "pathex/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "pathex/constructions.hpp"
#include "pathex/io.hpp"
#include "pathex/optimizer.hpp"
#include "pathex/oracle.hpp"

namespace pathex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Suite {
 public:
  explicit Suite(const EnvelopeOptions& o) : opt_(o) {}

  OptimizeResult optimize(const PatternSpec& p, int n) {
    SolverConfig cfg;
    cfg.n = n;
    cfg.restarts = opt_.restarts;
    cfg.seed = opt_.seed;
    cfg.threads = opt_.threads;
    return maximize(p, cfg);
  }

  void check(std::string name, const PatternSpec& p, int n, double value, double lower, double upper) {
    checks_.push_back({std::move(name), to_string(p), n, value, lower, upper,
                       value >= lower && value <= upper});
  }

  void certificates(const OptimizeResult& r, const PatternSpec& p, int n) {
    if (!r.converged) return;
    check("kkt-violation", p, n, r.kkt.max_violation, 0.0, opt_.certificate_tol);
    if (const auto* path = std::get_if<PathPattern>(&p)) {
      const Vector<double> res = mass_identity_residual(r.measure, path->vertices);
      check("mass-identity-residual", p, n, res.cwiseAbs().maxCoeff(), 0.0, opt_.certificate_tol);
    }
  }

  std::vector<EnvelopeCheck> take() { return std::move(checks_); }

 private:
  EnvelopeOptions opt_;
  std::vector<EnvelopeCheck> checks_;
};

}  // namespace

std::vector<EnvelopeCheck> run_envelope_suite(const EnvelopeOptions& o) {
  Suite suite(o);
  const double e2 = std::exp(2.0);
  std::map<std::pair<int, int>, double> best_path;

  for (int m = 3; m <= 5; ++m)
    for (int n = m; n <= o.n_max; ++n) {
      const PatternSpec p = PathPattern{m};
      const OptimizeResult r = suite.optimize(p, n);
      const double scale = std::pow(m, m - 2);
      suite.check("path-envelope", p, n, r.value, 1.0 / scale - 1e-4, 2.0 * e2 / scale);
      suite.certificates(r, p, n);
      best_path[{m, n}] = r.value;
    }

  for (int m = 2; m <= 4; ++m)
    for (int l = 0; l <= m; ++l)
      for (int n = m + 2; n <= o.n_max; ++n) {
        const PatternSpec p = AnchoredPairPattern{l, m - l, n, 1};
        const OptimizeResult r = suite.optimize(p, n);
        suite.check("anchored-envelope", p, n, r.value, -kInf, std::pow(m, -m) + o.eps);
        suite.certificates(r, p, n);
      }

  const int rho_n = std::min(o.n_max, 6);
  for (int m = 2; m <= 4 && m <= rho_n; ++m) {
    const PatternSpec p = RhoPattern{m};
    const OptimizeResult r = suite.optimize(p, rho_n);
    double beta = 0.0;
    if (auto it = best_path.find({m, rho_n}); it != best_path.end()) {
      beta = it->second;
    } else {
      beta = suite.optimize(PathPattern{m}, rho_n).value;
    }
    const double lower = m >= 3 ? 8.0 * std::pow(m, -m) - 1e-4 : -kInf;
    suite.check("rho-transfer", p, rho_n, r.value, lower, 1152.0 / (m * m) * beta + o.eps);
    if (r.converged && r.kkt.max_violation <= o.certificate_tol) {
      suite.check("rho-degree-cap", p, rho_n, weighted_degrees(r.measure).maxCoeff(), 0.0,
                  12.0 / (m - 1) + o.eps);
    }
    suite.certificates(r, p, rho_n);
  }

  if (o.n_max >= 6) {
    SolverConfig cfg;
    cfg.n = 6;
    cfg.restarts = std::max(o.restarts, 20);
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    const PatternSpec p = RhoPattern{3};
    const OptimizeResult r = maximize(p, cfg);
    suite.check("rho3-value", p, 6, r.value, 8.0 / 27.0 - 1e-3, 8.0 / 27.0 + 1e-6);
    suite.certificates(r, p, 6);
  }

  for (const auto& [m, ns] : std::vector<std::pair<int, std::vector<int>>>{{2, {6, 10, 14, 18}}, {3, {9, 12}}}) {
    for (const GapRow& row : conjecture_gap_report(m, ns)) {
      const PatternSpec p = PathPattern{2 * m + 1};
      const double bound = 1e4 * std::pow(m, -m) * std::pow(row.n, m + 1);
      suite.check("blowup-count-envelope", p, row.n, static_cast<double>(row.count), 1.0, bound);
    }
  }
  return suite.take();
}

nlohmann::json to_json(const EnvelopeCheck& c) {
  auto bound = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {{"name", c.name}, {"pattern", c.pattern}, {"n", c.n},         {"value", c.value},
          {"lower", bound(c.lower)}, {"upper", bound(c.upper)}, {"pass", c.pass}};
}

std::string envelope_csv(const std::vector<EnvelopeCheck>& checks) {
  std::ostringstream out;
  out << "name,pattern,n,value,lower,upper,pass\n";
  for (const auto& c : checks)
    out << c.name << ",\"" << c.pattern << "\"," << c.n << ',' << format_double(c.value) << ','
        << format_double(c.lower) << ',' << format_double(c.upper) << ',' << (c.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace pathex
