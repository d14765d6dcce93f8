#include "pathex/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace pathex {

std::string to_string(StepRule rule) {
  return rule == StepRule::Fixed ? "fixed" : "line-search";
}

std::string to_string(SolverMethod method) {
  return method == SolverMethod::FrankWolfe ? "frank-wolfe" : "projected-gradient";
}

void SolverConfig::validate() const {
  if (n < 2 || n > kMaxVertices) throw Error(ErrorKind::InvalidSpec, "n must be in [2, 64]");
  if (restarts < 1) throw Error(ErrorKind::InvalidSpec, "restarts must be >= 1");
  if (!(mass >= 0) || !std::isfinite(mass)) throw Error(ErrorKind::InvalidSpec, "mass must be >= 0");
  if (!(convergence_tol > 0)) throw Error(ErrorKind::InvalidSpec, "convergence-tol must be > 0");
  if (max_iterations < 0) throw Error(ErrorKind::InvalidSpec, "max-iterations must be >= 0");
  if (step_rule == StepRule::Fixed && !(fixed_step > 0))
    throw Error(ErrorKind::InvalidSpec, "fixed step must be > 0");
  if (threads < 0) throw Error(ErrorKind::InvalidSpec, "threads must be >= 0");
}

Vector<double> project_to_simplex(const Vector<double>& y, double mass) {
  const Eigen::Index d = y.size();
  if (d == 0) return y;
  if (mass <= 0) return Vector<double>::Zero(d);
  std::vector<double> sorted(y.data(), y.data() + d);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - mass) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0) threshold = candidate;
  }
  Vector<double> x = (y.array() - threshold).max(0.0).matrix();
  // Push the rounding residue onto the largest coordinate so the sum is exact to ulp.
  Eigen::Index top = 0;
  x.maxCoeff(&top);
  x[top] += mass - x.sum();
  if (x[top] < 0) x[top] = 0;
  return x;
}

namespace {

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct RestartOutcome {
  Vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

double simplex_gap(const Vector<double>& x, const Vector<double>& grad, double mass) {
  // Frank-Wolfe gap: max linear improvement over the simplex.
  return mass * grad.maxCoeff() - x.dot(grad);
}

/// Largest first-order violation: spread of the gradient over the support
/// around its weighted mean, or excess of an unused edge above that mean.
double stationarity(const Vector<double>& x, const Vector<double>& grad, double mass) {
  if (mass <= 0) return 0.0;
  const double lambda = x.dot(grad) / mass;
  double worst = 0.0;
  for (Eigen::Index e = 0; e < x.size(); ++e) {
    const double gap = grad[e] - lambda;
    worst = std::max(worst, x[e] > 0 ? std::abs(gap) : gap);
  }
  return worst;
}

RestartOutcome projected_gradient(const CopyTable& table, Vector<double> x, const SolverConfig& cfg) {
  RestartOutcome out;
  Vector<double> grad;
  double f = table.value_and_gradient(x, grad);
  double step = 1.0 / std::max(grad.cwiseAbs().maxCoeff(), 1e-12);
  constexpr double kArmijo = 1e-4;
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    if (stationarity(x, grad, cfg.mass) <= cfg.convergence_tol) {
      out.converged = true;
      break;
    }
    if (cfg.step_rule == StepRule::Fixed) {
      x = project_to_simplex(x + cfg.fixed_step * grad, cfg.mass);
      f = table.value_and_gradient(x, grad);
      continue;
    }
    // Armijo on values; once value differences reach rounding level, a step is
    // also accepted if the value holds and the slope at the new point still
    // points forward, which keeps the iterates converging on gradients alone.
    bool accepted = false;
    Vector<double> y;
    Vector<double> grad_y;
    double fy = f;
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(f), 1e-300);
    // Projection ignores constant shifts; centering keeps x + step * g well scaled.
    const Vector<double> centered = (grad.array() - x.dot(grad) / cfg.mass).matrix();
    for (int tries = 0; tries < 80 && !accepted; ++tries) {
      y = project_to_simplex(x + step * centered, cfg.mass);
      const Vector<double> d = y - x;
      fy = table.value_and_gradient(y, grad_y);
      accepted = fy >= f + kArmijo * grad.dot(d) || (fy >= f - noise && grad_y.dot(d) >= 0.0);
      if (!accepted) step *= 0.5;
    }
    if (!accepted) {
      out.converged = stationarity(x, grad, cfg.mass) <= std::sqrt(cfg.convergence_tol);
      break;
    }
    x = std::move(y);
    grad = std::move(grad_y);
    f = fy;
    step = std::min(step * 2.0, 1e8);
  }
  if (it == cfg.max_iterations) out.converged = stationarity(x, grad, cfg.mass) <= cfg.convergence_tol;
  out.x = std::move(x);
  out.value = f;
  out.iterations = it;
  return out;
}

/// Exact-enough line search for f(x + g d) on [0, 1]: golden section plus the endpoints.
double best_step(const CopyTable& table, const Vector<double>& x, const Vector<double>& d, double f0,
                 double& f_best) {
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = 0.0;
  double hi = 1.0;
  double a = hi - kInvPhi * (hi - lo);
  double b = lo + kInvPhi * (hi - lo);
  double fa = table.value(Vector<double>(x + a * d));
  double fb = table.value(Vector<double>(x + b * d));
  for (int k = 0; k < 40; ++k) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + kInvPhi * (hi - lo);
      fb = table.value(Vector<double>(x + b * d));
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - kInvPhi * (hi - lo);
      fa = table.value(Vector<double>(x + a * d));
    }
  }
  double gamma = 0.0;
  f_best = f0;
  const double mid = 0.5 * (lo + hi);
  for (double cand : {mid, 1.0}) {
    const double fc = table.value(Vector<double>(x + cand * d));
    if (fc > f_best) {
      f_best = fc;
      gamma = cand;
    }
  }
  return gamma;
}

RestartOutcome frank_wolfe(const CopyTable& table, Vector<double> x, const SolverConfig& cfg) {
  RestartOutcome out;
  Vector<double> grad;
  double f = table.value_and_gradient(x, grad);
  int it = 0;
  for (; it < cfg.max_iterations; ++it) {
    Eigen::Index best = 0;
    grad.maxCoeff(&best);
    Vector<double> d = -x;
    d[best] += cfg.mass;
    if (grad.dot(d) <= cfg.convergence_tol) {
      out.converged = true;
      break;
    }
    double gamma = 0.0;
    double f_new = f;
    if (cfg.step_rule == StepRule::Fixed) {
      gamma = 2.0 / (it + 2.0);
      f_new = table.value(Vector<double>(x + gamma * d));
    } else {
      gamma = best_step(table, x, d, f, f_new);
      if (gamma == 0.0) {
        out.converged = simplex_gap(x, grad, cfg.mass) <= std::sqrt(cfg.convergence_tol);
        break;
      }
    }
    x = project_to_simplex(x + gamma * d, cfg.mass);
    f = table.value_and_gradient(x, grad);
  }
  out.x = std::move(x);
  out.value = f;
  out.iterations = it;
  return out;
}

}  // namespace

Vector<double> restart_start(int n, double mass, int restart, std::uint64_t seed) {
  const int edges = complete_edge_count(n);
  Vector<double> x = Vector<double>::Zero(edges);
  if (mass <= 0) return x;
  std::mt19937_64 rng(restart_seed(seed, restart));
  if (restart == 0 || n < 3) {
    x.setConstant(mass / edges);
    return x;
  }
  if (restart % 2 == 1) {
    // Cycle lengths rotate through 3..n; the vertex set and order are random.
    const int length = 3 + ((restart - 1) / 2) % (n - 2);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 0; k < length; ++k)
      x[edge_index(n, order[k], order[(k + 1) % length])] = mass / length;
    return x;
  }
  std::exponential_distribution<double> draw(1.0);
  for (Eigen::Index e = 0; e < edges; ++e) x[e] = draw(rng);
  x *= mass / x.sum();
  return x;
}

OptimizeResult maximize(const PatternSpec& pattern, const SolverConfig& config) {
  config.validate();
  validate(pattern, config.n);
  if (std::holds_alternative<RhoPattern>(pattern) && std::abs(config.mass - 1.0) > 1e-9)
    throw Error(ErrorKind::InvalidSpec, "rho is maximized over probability measures (mass 1)");

  const int n = config.n;
  const CopyTable table(pattern, n);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));

  auto run_restart = [&](int r) {
    Vector<double> start = restart_start(n, config.mass, r, config.seed);
    outcomes[r] = config.method == SolverMethod::FrankWolfe
                      ? frank_wolfe(table, std::move(start), config)
                      : projected_gradient(table, std::move(start), config);
  };

  int workers = config.threads == 0 ? static_cast<int>(std::thread::hardware_concurrency())
                                    : config.threads;
  workers = std::clamp(workers, 1, config.restarts);
  if (workers == 1) {
    for (int r = 0; r < config.restarts; ++r) run_restart(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int r = next++; r < config.restarts; r = next++) run_restart(r);
      });
  }

  OptimizeResult result;
  int best = 0;
  for (int r = 0; r < config.restarts; ++r) {
    result.restart_values.push_back(outcomes[r].value);
    if (outcomes[r].value > outcomes[best].value) best = r;
  }
  const RestartOutcome& winner = outcomes[best];
  result.measure = EdgeMeasure<double>(n, winner.x);
  result.best_restart = best;
  result.iterations = winner.iterations;
  result.converged = winner.converged;
  result.value = density(result.measure, pattern);
  if (result.measure.mass() > 0) {
    result.kkt = kkt_check(result.measure, pattern, 1e-5);
  } else {
    result.kkt.stationary = true;
  }
  return result;
}

}  // namespace pathex
