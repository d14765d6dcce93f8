#include "pathex/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pathex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPattern: return "invalid-pattern";
    case ErrorKind::InvalidAnchor: return "invalid-anchor";
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::NonProbabilityMeasure: return "non-probability-measure";
    case ErrorKind::DegenerateMeasure: return "degenerate-measure";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

std::vector<std::pair<Vertex, Vertex>> complete_edge_list(int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(complete_edge_count(n));
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorKind::InvalidGraph,
                "vertex count must be in [0, " + std::to_string(kMaxVertices) + "]");
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n);
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidGraph, "cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (Vertex i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n);
  for (Vertex i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int left, int right) {
  SimpleGraph g(left + right);
  for (Vertex i = 1; i <= left; ++i)
    for (Vertex j = left + 1; j <= left + right; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  SimpleGraph g(n);
  for (auto [i, j] : edges) {
    if (g.has_edge(i, j)) throw Error(ErrorKind::InvalidGraph, "duplicate edge");
    g.add_edge(i, j);
  }
  return g;
}

int SimpleGraph::size() const {
  int twice = 0;
  for (VertexMask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

void SimpleGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_)
    throw Error(ErrorKind::InvalidVertex,
                "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
}

void SimpleGraph::add_edge(Vertex i, Vertex j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw Error(ErrorKind::InvalidGraph, "self-loops are not allowed");
  adj_[i - 1] |= bit(j);
  adj_[j - 1] |= bit(i);
}

void SimpleGraph::remove_edge(Vertex i, Vertex j) {
  check_vertex(i);
  check_vertex(j);
  adj_[i - 1] &= ~bit(j);
  adj_[j - 1] &= ~bit(i);
}

bool SimpleGraph::has_edge(Vertex i, Vertex j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) return false;
  return (adj_[i - 1] & bit(j)) != 0;
}

int SimpleGraph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[v - 1]);
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 1; i <= n_; ++i) {
    VertexMask above = adj_[i - 1] & ~((bit(i) << 1) - 1);
    while (above) {
      out.emplace_back(i, std::countr_zero(above) + 1);
      above &= above - 1;
    }
  }
  return out;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorKind::InvalidGraph, "permutation size mismatch");
  SimpleGraph out(n_);
  for (auto [i, j] : edges()) out.add_edge(perm[i - 1], perm[j - 1]);
  return out;
}

std::vector<PathCopy> enumerate_path_copies(const SimpleGraph& g, int k) {
  std::vector<PathCopy> out;
  for_each_path_copy(g, k, [&](std::span<const Vertex> p) {
    out.push_back(PathCopy{{p.begin(), p.end()}, true});
  });
  return out;
}

std::vector<AnchoredPairCopy> enumerate_anchored_pair_copies(const SimpleGraph& g, int s, int t,
                                                             Vertex a, Vertex b) {
  std::vector<AnchoredPairCopy> out;
  for_each_anchored_pair(g, s, t, a, b,
                         [&](std::span<const Vertex> first, std::span<const Vertex> second) {
                           out.push_back({{first.begin(), first.end()},
                                          {second.begin(), second.end()}});
                         });
  return out;
}

}  // namespace pathex
