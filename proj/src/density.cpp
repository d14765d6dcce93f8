#include "pathex/density.hpp"

#include <string>

namespace pathex {

namespace {

void append_walk_edges(std::vector<int>& out, int n, std::span<const Vertex> walk) {
  for (std::size_t k = 1; k < walk.size(); ++k) out.push_back(edge_index(n, walk[k - 1], walk[k]));
}

}  // namespace

CopyTable::CopyTable(const PatternSpec& pattern, int n) : n_(n) {
  validate(pattern, n);
  const SimpleGraph kn = SimpleGraph::complete(n);
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PathPattern>) {
          width_ = p.vertices - 1;
          for_each_path_copy(kn, p.vertices, [&](std::span<const Vertex> path) {
            append_walk_edges(edges_, n, path);
            ++copies_;
          });
        } else if constexpr (std::is_same_v<P, CyclePattern>) {
          width_ = p.length;
          for_each_cycle_copy(kn, p.length, [&](std::span<const Vertex> cyc) {
            append_walk_edges(edges_, n, cyc);
            edges_.push_back(edge_index(n, cyc.back(), cyc.front()));
            ++copies_;
          });
        } else if constexpr (std::is_same_v<P, AnchoredPairPattern>) {
          width_ = p.s + p.t;
          for_each_anchored_pair(kn, p.s, p.t, p.a, p.b,
                                 [&](std::span<const Vertex> first, std::span<const Vertex> second) {
                                   append_walk_edges(edges_, n, first);
                                   append_walk_edges(edges_, n, second);
                                   ++copies_;
                                 });
        } else {
          rho_ = true;
          width_ = p.m - 1;
          for_each_path_copy(kn, p.m, [&](std::span<const Vertex> path) {
            append_walk_edges(edges_, n, path);
            ends_.push_back(path.front());
            ends_.push_back(path.back());
            ++copies_;
          });
        }
      },
      pattern);
}

void CopyTable::check_size(Eigen::Index size) const {
  if (size != complete_edge_count(n_))
    throw Error(ErrorKind::InvalidSpec, "weight vector does not match K_" + std::to_string(n_));
}

}  // namespace pathex
