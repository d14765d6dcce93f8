#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pathex/measure.hpp"
#include "pathex/pattern.hpp"

namespace pathex {

template <class S>
S weighted_degree(const EdgeMeasure<S>& mu, Vertex x) {
  const int n = mu.order();
  if (x < 1 || x > n) throw Error(ErrorKind::InvalidVertex, "vertex outside [1, n]");
  S total(0);
  for (Vertex y = 1; y <= n; ++y)
    if (y != x) total += mu.weights()[edge_index(n, x, y)];
  return total;
}

/// Weighted degrees of all vertices; entry x - 1 belongs to vertex x.
template <class S>
Vector<S> weighted_degrees(const EdgeMeasure<S>& mu) {
  const int n = mu.order();
  Vector<S> deg = Vector<S>::Zero(n);
  Eigen::Index e = 0;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j, ++e) {
      deg[i - 1] += mu.weights()[e];
      deg[j - 1] += mu.weights()[e];
    }
  return deg;
}

/// Product of the weights along consecutive vertices of `walk`.
template <class S>
S walk_weight(const EdgeMeasure<S>& mu, std::span<const Vertex> walk) {
  S w(1);
  for (std::size_t k = 1; k < walk.size(); ++k)
    w *= mu.weights()[edge_index(mu.order(), walk[k - 1], walk[k])];
  return w;
}

// The evaluators below walk the copies of the pattern inside the support of mu.

template <class S>
S beta_density(const EdgeMeasure<S>& mu, const PathPattern& p) {
  validate(p);
  S total(0);
  for_each_path_copy(mu.support(), p.vertices,
                     [&](std::span<const Vertex> path) { total += walk_weight(mu, path); });
  return total;
}

template <class S>
S beta_density(const EdgeMeasure<S>& mu, const CyclePattern& c) {
  validate(c);
  S total(0);
  const int n = mu.order();
  for_each_cycle_copy(mu.support(), c.length, [&](std::span<const Vertex> cyc) {
    total += walk_weight(mu, cyc) * mu.weights()[edge_index(n, cyc.back(), cyc.front())];
  });
  return total;
}

template <class S>
S beta_star_density(const EdgeMeasure<S>& mu, const AnchoredPairPattern& p) {
  validate(p, mu.order());
  S total(0);
  for_each_anchored_pair(mu.support(), p.s, p.t, p.a, p.b,
                         [&](std::span<const Vertex> first, std::span<const Vertex> second) {
                           total += walk_weight(mu, first) * walk_weight(mu, second);
                         });
  return total;
}

/// Each unlabeled path contributes both of its orientations.
template <class S>
S rho_polynomial(const EdgeMeasure<S>& mu, int m) {
  validate(RhoPattern{m});
  const Vector<S> deg = weighted_degrees(mu);
  S total(0);
  for_each_path_copy(mu.support(), m, [&](std::span<const Vertex> path) {
    total += walk_weight(mu, path) * deg[path.front() - 1] * deg[path.back() - 1];
  });
  return S(2) * total;
}

template <class S>
S rho_density(const EdgeMeasure<S>& mu, int m) {
  if (!is_probability(mu))
    throw Error(ErrorKind::NonProbabilityMeasure, "rho is defined for probability measures");
  return rho_polynomial(mu, m);
}

template <class S>
S density(const EdgeMeasure<S>& mu, const PatternSpec& pattern) {
  return std::visit(
      [&](const auto& p) -> S {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, AnchoredPairPattern>) {
          return beta_star_density(mu, p);
        } else if constexpr (std::is_same_v<P, RhoPattern>) {
          return rho_density(mu, p.m);
        } else {
          return beta_density(mu, p);
        }
      },
      pattern);
}

/// Every copy of a pattern in K_n, flattened to edge indices, so the density
/// and its gradient can be evaluated at any weight vector without walking the
/// graph again. Used by the optimizer and for analytic gradients.
class CopyTable {
 public:
  CopyTable(const PatternSpec& pattern, int n);

  int order() const { return n_; }
  std::size_t copy_count() const { return copies_; }
  int edges_per_copy() const { return width_; }

  template <class S>
  S value(const Vector<S>& x) const {
    check_size(x.size());
    const Vector<S> deg = rho_ ? vertex_sums(x) : Vector<S>();
    S total(0);
    for (std::size_t c = 0; c < copies_; ++c) {
      S w(1);
      for (int k = 0; k < width_; ++k) w *= x[edges_[c * width_ + k]];
      if (rho_) w *= S(2) * deg[ends_[2 * c] - 1] * deg[ends_[2 * c + 1] - 1];
      total += w;
    }
    return total;
  }

  template <class S>
  S value_and_gradient(const Vector<S>& x, Vector<S>& grad) const {
    check_size(x.size());
    grad = Vector<S>::Zero(x.size());
    const Vector<S> deg = rho_ ? vertex_sums(x) : Vector<S>();
    Vector<S> vertex_grad = Vector<S>::Zero(rho_ ? n_ : 0);
    std::vector<S> prefix(static_cast<std::size_t>(width_) + 1);
    S total(0);
    for (std::size_t c = 0; c < copies_; ++c) {
      const int* e = edges_.data() + c * width_;
      prefix[0] = S(1);
      for (int k = 0; k < width_; ++k) prefix[k + 1] = prefix[k] * x[e[k]];
      S outer(1);
      if (rho_) {
        const Vertex u = ends_[2 * c];
        const Vertex v = ends_[2 * c + 1];
        outer = S(2) * deg[u - 1] * deg[v - 1];
        vertex_grad[u - 1] += S(2) * prefix[width_] * deg[v - 1];
        vertex_grad[v - 1] += S(2) * prefix[width_] * deg[u - 1];
      }
      total += prefix[width_] * outer;
      S suffix = outer;
      for (int k = width_ - 1; k >= 0; --k) {
        grad[e[k]] += prefix[k] * suffix;
        suffix *= x[e[k]];
      }
    }
    if (rho_) {
      Eigen::Index idx = 0;
      for (Vertex i = 1; i <= n_; ++i)
        for (Vertex j = i + 1; j <= n_; ++j, ++idx) grad[idx] += vertex_grad[i - 1] + vertex_grad[j - 1];
    }
    return total;
  }

 private:
  void check_size(Eigen::Index size) const;

  template <class S>
  Vector<S> vertex_sums(const Vector<S>& x) const {
    Vector<S> deg = Vector<S>::Zero(n_);
    Eigen::Index idx = 0;
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = i + 1; j <= n_; ++j, ++idx) {
        deg[i - 1] += x[idx];
        deg[j - 1] += x[idx];
      }
    return deg;
  }

  int n_ = 0;
  int width_ = 0;
  bool rho_ = false;
  std::size_t copies_ = 0;
  std::vector<int> edges_;
  std::vector<Vertex> ends_;
};

/// Analytic partial derivatives of the density with respect to every edge of K_n.
template <class S>
Vector<S> gradient(const EdgeMeasure<S>& mu, const PatternSpec& pattern) {
  const CopyTable table(pattern, mu.order());
  Vector<S> grad;
  table.value_and_gradient(mu.weights(), grad);
  return grad;
}

}  // namespace pathex
