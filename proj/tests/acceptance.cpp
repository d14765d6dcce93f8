// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pathex/cli.hpp"
#include "pathex/constructions.hpp"
#include "pathex/density.hpp"
#include "pathex/optimizer.hpp"
#include "pathex/oracle.hpp"

using namespace pathex;

namespace {

struct Converged {
  std::string label;
  PatternSpec pattern;
  EdgeMeasure<double> measure;
};

// Measures the optimizer reported as converged, re-certified in criterion 6.
std::vector<Converged> certified;

OptimizeResult solve(const PatternSpec& pattern, int n, int restarts, std::uint64_t seed = 1) {
  SolverConfig cfg;
  cfg.n = n;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.threads = 0;
  OptimizeResult r = maximize(pattern, cfg);
  if (r.converged) certified.push_back({to_string(pattern) + " n=" + std::to_string(n), pattern, r.measure});
  return r;
}

Rational rpow(int base, int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s  %2d  %-40s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "rho(3) = 8/27", 60, [] {
    const auto r = solve(RhoPattern{3}, 6, 20, 7);
    const double target = 8.0 / 27.0;
    return Outcome{r.value >= target - 1e-3 && r.value <= target + 1e-6,
                   fmt("value %.12f, target %.12f", r.value, target)};
  });

  criterion(2, "uniform cycle fixtures (exact)", 10, [] {
    int checked = 0;
    bool ok = true;
    for (int m = 3; m <= 5; ++m)
      for (int n = m; n <= m + 3; ++n) {
        const auto mu = uniform_cycle_measure<Rational>(m, n);
        ok = ok && beta_density(mu, PathPattern{m}) == Rational(1) / rpow(m, m - 2);
        ok = ok && beta_density(mu, CyclePattern{m}) == Rational(1) / rpow(m, m);
        ok = ok && rho_density(mu, m) == Rational(8) / rpow(m, m);
        checked += 3;
      }
    return Outcome{ok, std::to_string(checked) + " equalities"};
  });

  criterion(3, "anchored pair envelope", 300, [] {
    double worst = -1;
    std::string where;
    int runs = 0;
    bool ok = true;
    for (int m = 2; m <= 4; ++m)
      for (int l = 0; l <= m; ++l)
        for (int n = m + 2; n <= 8; ++n) {
          const AnchoredPairPattern p{l, m - l, n, 1};
          const auto r = solve(p, n, 8);
          const double slack = r.value - std::pow(m, -m);
          ++runs;
          if (slack > worst) worst = slack, where = to_string(PatternSpec{p}) + " n=" + std::to_string(n);
          ok = ok && r.value <= std::pow(m, -m) + 1e-6;
        }
    return Outcome{ok, std::to_string(runs) + " runs, max(value - m^-m) = " + fmt("%.3g", worst) + " at " + where};
  });

  std::vector<double> best_path(6, 0.0);
  criterion(4, "path density envelope", 300, [&] {
    bool ok = true;
    std::string detail;
    for (int m = 3; m <= 5; ++m) {
      const double lower = std::pow(m, -(m - 2)) - 1e-4;
      const double upper = 2 * std::numbers::e * std::numbers::e * std::pow(m, -(m - 2));
      double lo = 1e300, hi = 0;
      for (int n = m; n <= 8; ++n) {
        const auto r = solve(PathPattern{m}, n, 8);
        lo = std::min(lo, r.value);
        hi = std::max(hi, r.value);
        ok = ok && r.value >= lower && r.value <= upper;
      }
      best_path[m] = hi;
      detail += fmt("m=%g [%.6g, %.6g] ", m, lo, hi);
    }
    return Outcome{ok, detail};
  });

  criterion(5, "rho versus path transfer", 300, [&] {
    bool ok = true;
    std::string detail;
    for (int m = 2; m <= 4; ++m) {
      double rho = 0;
      double beta = m == 2 ? 1.0 : best_path[m];
      double max_degree = 0;
      for (int n = std::max(m, 3); n <= 8; ++n) {
        const auto r = solve(RhoPattern{m}, n, 8);
        rho = std::max(rho, r.value);
        if (m == 2 || best_path[m] == 0) beta = std::max(beta, solve(PathPattern{m}, n, 8).value);
        if (r.converged) max_degree = std::max(max_degree, weighted_degrees(r.measure).maxCoeff());
        ok = ok && (!r.converged || weighted_degrees(r.measure).maxCoeff() <= 12.0 / (m - 1) + 1e-6);
      }
      ok = ok && rho <= 1152.0 / (m * m) * beta + 1e-6;
      detail += fmt("m=%g rho %.6g beta %.6g ", m, rho, beta) + fmt("max wdeg %.3g; ", max_degree);
    }
    return Outcome{ok, detail};
  });

  criterion(6, "KKT and vertex identity certificates", 0, [] {
    bool ok = true;
    double worst_kkt = 0, worst_identity = 0;
    int paths = 0;
    for (const auto& c : certified) {
      const auto kkt = kkt_check(c.measure, c.pattern, 1e-5);
      worst_kkt = std::max({worst_kkt, kkt.max_violation, kkt.max_inactive_excess});
      ok = ok && kkt.max_violation < 1e-5 && kkt.max_inactive_excess < 1e-5;
      if (const auto* p = std::get_if<PathPattern>(&c.pattern)) {
        const double res = mass_identity_residual(c.measure, p->vertices).cwiseAbs().maxCoeff();
        worst_identity = std::max(worst_identity, res);
        ok = ok && res < 1e-5;
        ++paths;
      }
    }
    return Outcome{ok, std::to_string(certified.size()) + " converged measures (" + std::to_string(paths) +
                           " path), worst KKT " + fmt("%.2g, worst identity residual %.2g", worst_kkt, worst_identity)};
  });

  criterion(7, "analytic gradient vs finite differences", 0, [] {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_n(3, 6);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = pick_n(rng);
      const int m = std::uniform_int_distribution<int>(3, std::min(5, n))(rng);
      PatternSpec pattern;
      switch (trial % 4) {
        case 0: pattern = PathPattern{m}; break;
        case 1: pattern = CyclePattern{m}; break;
        case 2: pattern = RhoPattern{m}; break;
        default: {
          const int s = std::uniform_int_distribution<int>(0, std::min(m, n - 2))(rng);
          pattern = AnchoredPairPattern{s, std::min(m - s, n - 2 - s), n, 1};
        }
      }
      Vector<double> x(complete_edge_count(n));
      for (Eigen::Index e = 0; e < x.size(); ++e) x[e] = unit(rng) < 0.2 ? 0.0 : unit(rng);
      x /= x.sum();
      const CopyTable table(pattern, n);
      Vector<double> g;
      table.value_and_gradient(x, g);
      const double h = 1e-6;
      const double scale = std::max(g.cwiseAbs().maxCoeff(), 1e-12);
      for (Eigen::Index e = 0; e < x.size(); ++e) {
        Vector<double> up = x, down = x;
        up[e] += h;
        down[e] -= h;
        const double fd = (table.value(up) - table.value(down)) / (2 * h);
        worst = std::max(worst, std::abs(fd - g[e]) / std::max(std::abs(g[e]), 1e-3 * scale));
      }
    }
    return Outcome{worst < 1e-5, fmt("100 measures, worst relative error %.2g", worst)};
  });

  criterion(8, "weight shift monotonicity (exact)", 0, [] {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(0, 6);
    int moved = 0;
    bool ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = std::uniform_int_distribution<int>(3, 6)(rng);
      EdgeMeasure<Rational> mu(n);
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) mu.set(i, j, Rational(num(rng)));
      if (mu.mass() > 0) mu = mu.scaled(Rational(1) / mu.mass());
      const int s = std::uniform_int_distribution<int>(1, 4)(rng);
      const int t = std::uniform_int_distribution<int>(0, 4 - s)(rng);
      const Vertex a = std::uniform_int_distribution<int>(1, n)(rng);
      Vertex b = std::uniform_int_distribution<int>(1, n - 1)(rng);
      if (b >= a) ++b;
      const AnchoredPairPattern p{s, t, a, b};
      const auto step = weight_shift_step(mu, p);
      const Rational before = beta_star_density(mu, p);
      const Rational after = beta_star_density(step.measure, p);
      ok = ok && after >= before && step.measure.mass() == mu.mass();
      if (step.moved) {
        ++moved;
        ok = ok && after - before == step.donor_weight * (step.winner_score - step.donor_score);
      } else {
        ok = ok && after == before;
      }
    }
    return Outcome{ok, "1000 measures, " + std::to_string(moved) + " moved"};
  });

  criterion(9, "planar oracle ground truth", 60, [] {
    auto query = [](int n) {
      OracleQuery q;
      q.n = n;
      q.pattern = PathPattern{3};
      return max_copies_planar(q).max_count;
    };
    const auto n3 = query(3), n4 = query(4), n5 = query(5);
    const bool ok = n3 == 3 && n4 == 12 && n5 == 24 && n4 == 4 * 4 + 3 * 4 - 16 && n5 == 5 * 5 + 3 * 5 - 16;
    return Outcome{ok, fmt("n=3: %g, n=4: %g, n=5: %g", double(n3), double(n4), double(n5))};
  });

  criterion(10, "blow-up construction envelope", 120, [] {
    const auto rows = conjecture_gap_report(2, {6, 10, 14, 18});
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double n = rows[i].n;
      const double ratio = static_cast<double>(rows[i].count) / (n * n * n);
      ok = ok && rows[i].count > 0 && rows[i].count <= 1e4 * 0.25 * n * n * n && ratio < 1.0;
      if (i > 0) ok = ok && rows[i].count > rows[i - 1].count && rows[i].ratio > rows[i - 1].ratio;
      detail += fmt("n=%g: %g (%.4f) ", n, double(rows[i].count), ratio);
    }
    return Outcome{ok, detail};
  });

  criterion(11, "byte-identical reports", 0, [] {
    const std::vector<nlohmann::json> manifests = {
        {{"command", "optimize"}, {"pattern", "rho"}, {"m", 3}, {"n", 6}, {"restarts", 20}, {"seed", 7}},
        {{"command", "optimize"}, {"pattern", "anchored"}, {"s", 1}, {"t", 2}, {"n", 7}, {"seed", 11}},
        {{"command", "optimize"}, {"pattern", "path"}, {"m", 4}, {"n", 7}, {"method", "frank-wolfe"}, {"max-iterations", 2000}, {"seed", 3}},
        {{"command", "evaluate"}, {"measure", "uniform-cycle"}, {"m", 4}, {"n", 6}, {"pattern", "path"}},
        {{"command", "construct"}, {"m", 2}, {"n-list", {6, 10, 14, 18}}},
        {{"command", "oracle"}, {"n", 6}, {"pattern", "path4"}},
        {{"command", "certify"}, {"n-max", 6}},
    };
    bool ok = true;
    for (const auto& j : manifests) {
      std::ostringstream first, second, err;
      const int c1 = run(ExperimentManifest::from_json(j), first, err);
      const int c2 = run(ExperimentManifest::from_json(j), second, err);
      ok = ok && c1 == 0 && c2 == 0 && first.str() == second.str() && !first.str().empty();
    }
    return Outcome{ok, std::to_string(manifests.size()) + " manifests run twice"};
  });

  std::printf("%s: %d criterion failures\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
