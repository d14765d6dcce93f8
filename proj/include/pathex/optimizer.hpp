#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathex/density.hpp"

namespace pathex {

enum class StepRule { Fixed, LineSearch };
enum class SolverMethod { ProjectedGradient, FrankWolfe };

std::string to_string(StepRule rule);
std::string to_string(SolverMethod method);

struct SolverConfig {
  int n = 4;
  double mass = 1.0;
  int restarts = 8;
  int max_iterations = 20000;
  StepRule step_rule = StepRule::LineSearch;
  SolverMethod method = SolverMethod::ProjectedGradient;
  double convergence_tol = 1e-9;
  double fixed_step = 0.05;
  std::uint64_t seed = 0;
  /// Worker threads for restarts; 0 means one per restart up to hardware concurrency.
  int threads = 1;

  void validate() const;
};

template <class S>
struct BasicKKTReport {
  S lambda{0};
  S max_violation{0};
  S max_inactive_excess{0};
  int support_size = 0;
  bool stationary = false;
};

using KKTReport = BasicKKTReport<double>;

struct OptimizeResult {
  EdgeMeasure<double> measure;
  double value = 0.0;
  KKTReport kkt;
  int iterations = 0;
  int best_restart = 0;
  bool converged = false;
  /// Objective reached by each restart, indexed by restart.
  std::vector<double> restart_values;
};

/// Euclidean projection onto {x >= 0, sum x = mass}.
Vector<double> project_to_simplex(const Vector<double>& y, double mass);

/// Initial point of a given restart: 0 is uniform over all edges, odd restarts
/// are uniform on a cycle, the rest are Dirichlet(1) samples.
Vector<double> restart_start(int n, double mass, int restart, std::uint64_t seed);

OptimizeResult maximize(const PatternSpec& pattern, const SolverConfig& config);

/// First-order optimality on the simplex: lambda is the weight-averaged
/// gradient over the support; violations are measured against it.
template <class S>
BasicKKTReport<S> kkt_check(const EdgeMeasure<S>& mu, const PatternSpec& pattern, const S& tol) {
  const S mass = mu.mass();
  if (!(mass > 0)) throw Error(ErrorKind::DegenerateMeasure, "measure has empty support");
  const Vector<S> grad = gradient(mu, pattern);
  const Vector<S>& w = mu.weights();
  BasicKKTReport<S> report;
  report.lambda = w.dot(grad) / mass;
  bool first_inactive = true;
  for (Eigen::Index e = 0; e < w.size(); ++e) {
    const S gap = grad[e] - report.lambda;
    if (w[e] > 0) {
      ++report.support_size;
      const S violation = gap < 0 ? S(-gap) : gap;
      if (violation > report.max_violation) report.max_violation = violation;
    } else if (first_inactive || gap > report.max_inactive_excess) {
      report.max_inactive_excess = gap;
      first_inactive = false;
    }
  }
  report.stationary = report.max_violation <= tol && report.max_inactive_excess <= tol;
  return report;
}

/// Per-vertex residual of  wdeg(x) (m-1) beta(mu; P_m) = sum_{P ∋ x} deg_P(x) mu(P).
/// Entry x - 1 belongs to vertex x.
template <class S>
Vector<S> mass_identity_residual(const EdgeMeasure<S>& mu, int m) {
  if (!is_probability(mu))
    throw Error(ErrorKind::NonProbabilityMeasure, "the identity is stated for probability measures");
  validate(PathPattern{m});
  const int n = mu.order();
  const Vector<S> deg = weighted_degrees(mu);
  Vector<S> incident = Vector<S>::Zero(n);
  S beta(0);
  for_each_path_copy(mu.support(), m, [&](std::span<const Vertex> path) {
    const S w = walk_weight(mu, path);
    beta += w;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const bool end = k == 0 || k + 1 == path.size();
      incident[path[k] - 1] += end ? w : S(2) * w;
    }
  });
  Vector<S> residual(n);
  for (int x = 0; x < n; ++x) residual[x] = deg[x] * S(m - 1) * beta - incident[x];
  return residual;
}

template <class S>
struct WeightShiftResult {
  EdgeMeasure<S> measure;
  /// False when the pivot had fewer than two positive edges.
  bool moved = false;
  bool isolated = false;
  Vertex donor = 0;
  Vertex winner = 0;
  S donor_weight{0};
  S donor_score{0};
  S winner_score{0};
};

/// Score of routing the s-edge path of P_(s,t) through the edge {a, q}:
/// the weight of copies of P_(s-1,t) avoiding a, starting at q and b.
template <class S>
S continuation_weight(const EdgeMeasure<S>& mu, const AnchoredPairPattern& p, Vertex q) {
  if (q == p.b) return S(0);
  S total(0);
  for_each_anchored_pair(
      mu.support(), p.s - 1, p.t, q, p.b,
      [&](std::span<const Vertex> first, std::span<const Vertex> second) {
        total += walk_weight(mu, first) * walk_weight(mu, second);
      },
      bit(p.a));
  return total;
}

/// One weight-shifting move at the pivot p.a. The heaviest pivot edge is
/// compared with the best-scoring other positive pivot edge; all mass of the
/// lower-scoring one moves onto the higher-scoring one (ties go to the smaller
/// partner label). The density rises by donor_weight * (winner_score - donor_score).
template <class S>
WeightShiftResult<S> weight_shift_step(const EdgeMeasure<S>& mu, const AnchoredPairPattern& p) {
  validate(p, mu.order());
  if (p.s < 1) throw Error(ErrorKind::InvalidPattern, "weight shifting needs s >= 1");
  const int n = mu.order();
  const Vertex pivot = p.a;
  std::vector<Vertex> partners;
  for (Vertex q = 1; q <= n; ++q)
    if (q != pivot && mu(pivot, q) > 0) partners.push_back(q);

  WeightShiftResult<S> out{mu};
  if (partners.empty()) {
    out.isolated = true;
    return out;
  }
  if (partners.size() == 1) return out;

  Vertex heavy = partners.front();
  for (Vertex q : partners)
    if (mu(pivot, q) > mu(pivot, heavy)) heavy = q;

  std::vector<S> score(static_cast<std::size_t>(n) + 1, S(0));
  for (Vertex q : partners) score[q] = continuation_weight(mu, p, q);

  Vertex rival = 0;
  for (Vertex q : partners)
    if (q != heavy && (rival == 0 || score[q] > score[rival])) rival = q;

  Vertex winner = heavy;
  Vertex donor = rival;
  if (score[rival] > score[heavy] || (score[rival] == score[heavy] && rival < heavy)) {
    winner = rival;
    donor = heavy;
  }
  out.moved = true;
  out.donor = donor;
  out.winner = winner;
  out.donor_weight = mu(pivot, donor);
  out.donor_score = score[donor];
  out.winner_score = score[winner];
  out.measure.set(pivot, winner, mu(pivot, winner) + mu(pivot, donor));
  out.measure.set(pivot, donor, S(0));
  return out;
}

}  // namespace pathex
