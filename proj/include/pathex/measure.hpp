#pragma once

#include <string>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "pathex/graph.hpp"

namespace pathex {

using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
inline constexpr bool is_exact_v = !std::is_floating_point_v<Scalar>;

/// Nonnegative weights on the edges of K_n, stored in edge_index order.
template <class Scalar>
class EdgeMeasure {
 public:
  using Scalar_t = Scalar;

  EdgeMeasure() = default;

  explicit EdgeMeasure(int n) : n_(n), weights_(Vector<Scalar>::Zero(complete_edge_count(n))) {
    if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::InvalidSpec, "measure order out of range");
  }

  EdgeMeasure(int n, Vector<Scalar> weights) : n_(n), weights_(std::move(weights)) {
    if (n < 1 || n > kMaxVertices) throw Error(ErrorKind::InvalidSpec, "measure order out of range");
    if (weights_.size() != complete_edge_count(n))
      throw Error(ErrorKind::InvalidSpec, "weight vector does not match K_n");
    for (Eigen::Index e = 0; e < weights_.size(); ++e)
      if (weights_[e] < 0) throw Error(ErrorKind::InvalidSpec, "edge weights must be nonnegative");
  }

  int order() const { return n_; }
  Eigen::Index edge_count() const { return weights_.size(); }

  const Vector<Scalar>& weights() const { return weights_; }

  Scalar operator()(Vertex i, Vertex j) const {
    check_pair(i, j);
    return weights_[edge_index(n_, i, j)];
  }

  void set(Vertex i, Vertex j, const Scalar& w) {
    check_pair(i, j);
    if (w < 0) throw Error(ErrorKind::InvalidSpec, "edge weights must be nonnegative");
    weights_[edge_index(n_, i, j)] = w;
  }

  Scalar mass() const { return weights_.sum(); }

  /// Graph of the edges carrying positive weight.
  SimpleGraph support() const {
    SimpleGraph g(n_);
    Eigen::Index e = 0;
    for (Vertex i = 1; i <= n_; ++i)
      for (Vertex j = i + 1; j <= n_; ++j, ++e)
        if (weights_[e] > 0) g.add_edge(i, j);
    return g;
  }

  EdgeMeasure scaled(const Scalar& c) const { return EdgeMeasure(n_, weights_ * c); }

  template <class To>
  EdgeMeasure<To> cast() const {
    Vector<To> w(weights_.size());
    for (Eigen::Index e = 0; e < weights_.size(); ++e) w[e] = static_cast<To>(weights_[e]);
    return EdgeMeasure<To>(n_, std::move(w));
  }

  friend bool operator==(const EdgeMeasure& a, const EdgeMeasure& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_;
  }

 private:
  void check_pair(Vertex i, Vertex j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw Error(ErrorKind::InvalidVertex, "vertex outside [1, n]");
    if (i == j) throw Error(ErrorKind::InvalidVertex, "an edge needs two distinct endpoints");
  }

  int n_ = 0;
  Vector<Scalar> weights_;
};

/// Probability measure spread evenly over the edges of g.
template <class Scalar>
EdgeMeasure<Scalar> uniform_on(const SimpleGraph& g) {
  const int m = g.size();
  if (m == 0) throw Error(ErrorKind::DegenerateMeasure, "graph has no edges");
  EdgeMeasure<Scalar> mu(g.order());
  for (auto [i, j] : g.edges()) mu.set(i, j, Scalar(1) / Scalar(m));
  return mu;
}

/// Mass-one check: exact for rationals, 1e-9 absolute for floats.
template <class Scalar>
bool is_probability(const EdgeMeasure<Scalar>& mu) {
  if constexpr (is_exact_v<Scalar>) {
    return mu.mass() == Scalar(1);
  } else {
    using std::abs;
    return abs(mu.mass() - Scalar(1)) <= Scalar(1e-9);
  }
}

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace pathex
