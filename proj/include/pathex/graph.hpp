#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pathex/error.hpp"

namespace pathex {

/// Vertices are labeled 1..n throughout.
using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << (v - 1); }

/// Number of edges of the complete graph on n vertices.
inline constexpr int complete_edge_count(int n) { return n * (n - 1) / 2; }

/// Position of the edge {i, j} in the lexicographic order of the edges of K_n.
inline constexpr int edge_index(int n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  const int a = i - 1;
  return a * (2 * n - a - 1) / 2 + (j - i - 1);
}

/// Inverse of edge_index, as a table indexed by edge position.
std::vector<std::pair<Vertex, Vertex>> complete_edge_list(int n);

/// Undirected simple graph on the vertex set {1..n} backed by adjacency masks.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  static SimpleGraph complete(int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph path(int n);
  static SimpleGraph complete_bipartite(int left, int right);
  static SimpleGraph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  int size() const;

  void add_edge(Vertex i, Vertex j);
  void remove_edge(Vertex i, Vertex j);
  bool has_edge(Vertex i, Vertex j) const;

  VertexMask neighbors(Vertex v) const { return adj_[v - 1]; }
  int degree(Vertex v) const;

  /// Edges as pairs (i, j) with i < j, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Graph obtained by mapping vertex v to perm[v - 1].
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// An unlabeled copy of a path, stored in the orientation whose first vertex
/// is smaller than its last.
struct PathCopy {
  std::vector<Vertex> vertices;
  bool canonical = true;

  friend bool operator==(const PathCopy&, const PathCopy&) = default;
};

/// A copy of P_(s,t): a path with s edges from the first anchor and a
/// vertex-disjoint path with t edges from the second anchor.
struct AnchoredPairCopy {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

namespace detail {

template <class Fn>
void extend_paths(const SimpleGraph& g, std::vector<Vertex>& walk, VertexMask used,
                  VertexMask forbidden, int remaining, Fn& fn) {
  if (remaining == 0) {
    fn(static_cast<const std::vector<Vertex>&>(walk), used);
    return;
  }
  VertexMask next = g.neighbors(walk.back()) & ~used & ~forbidden;
  while (next) {
    const Vertex v = std::countr_zero(next) + 1;
    next &= next - 1;
    walk.push_back(v);
    extend_paths(g, walk, used | bit(v), forbidden, remaining - 1, fn);
    walk.pop_back();
  }
}

}  // namespace detail

/// Calls fn(span of k vertices) once per unlabeled copy of P_k in g, in a
/// deterministic order.
template <class Fn>
void for_each_path_copy(const SimpleGraph& g, int k, Fn&& fn) {
  if (k < 2) throw Error(ErrorKind::InvalidPattern, "path copies need k >= 2");
  if (k > g.order()) return;
  std::vector<Vertex> walk;
  walk.reserve(k);
  auto emit = [&](const std::vector<Vertex>& w, VertexMask) {
    if (w.front() < w.back()) fn(std::span<const Vertex>(w));
  };
  for (Vertex v = 1; v <= g.order(); ++v) {
    walk.assign(1, v);
    detail::extend_paths(g, walk, bit(v), 0, k - 1, emit);
  }
}

/// Calls fn(span of k vertices) once per copy of C_k in g. The cycle starts
/// at its smallest vertex and its second vertex is smaller than its last.
template <class Fn>
void for_each_cycle_copy(const SimpleGraph& g, int k, Fn&& fn) {
  if (k < 3) throw Error(ErrorKind::InvalidPattern, "cycle copies need k >= 3");
  if (k > g.order()) return;
  std::vector<Vertex> walk;
  walk.reserve(k);
  for (Vertex v = 1; v <= g.order(); ++v) {
    const VertexMask below = bit(v) - 1;
    auto emit = [&](const std::vector<Vertex>& w, VertexMask) {
      if (w[1] < w.back() && g.has_edge(w.back(), v)) fn(std::span<const Vertex>(w));
    };
    walk.assign(1, v);
    detail::extend_paths(g, walk, bit(v), below, k - 1, emit);
  }
}

/// Calls fn(first, second) for every copy of P_(s,t) whose s-edge path starts
/// at a and whose t-edge path starts at b. Vertices in `excluded` are never
/// used. For s = t = 0 the single copy {a}, {b} is reported.
template <class Fn>
void for_each_anchored_pair(const SimpleGraph& g, int s, int t, Vertex a, Vertex b, Fn&& fn,
                            VertexMask excluded = 0) {
  if (s < 0 || t < 0) throw Error(ErrorKind::InvalidPattern, "path lengths must be >= 0");
  if (a < 1 || a > g.order() || b < 1 || b > g.order())
    throw Error(ErrorKind::InvalidVertex, "anchor out of range");
  if (a == b) throw Error(ErrorKind::InvalidAnchor, "anchors must be distinct");
  if ((excluded & (bit(a) | bit(b))) != 0) return;
  std::vector<Vertex> first{a};
  std::vector<Vertex> second;
  auto on_first = [&](const std::vector<Vertex>& f, VertexMask used_first) {
    second.assign(1, b);
    auto on_second = [&](const std::vector<Vertex>& sec, VertexMask) {
      fn(std::span<const Vertex>(f), std::span<const Vertex>(sec));
    };
    detail::extend_paths(g, second, bit(b), used_first | excluded, t, on_second);
  };
  detail::extend_paths(g, first, bit(a), bit(b) | excluded, s, on_first);
}

std::vector<PathCopy> enumerate_path_copies(const SimpleGraph& g, int k);
std::vector<AnchoredPairCopy> enumerate_anchored_pair_copies(const SimpleGraph& g, int s, int t,
                                                             Vertex a, Vertex b);

bool is_planar(const SimpleGraph& g);

}  // namespace pathex
