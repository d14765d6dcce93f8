#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathex/graph.hpp"
#include "pathex/pattern.hpp"

namespace pathex {

enum class OracleMode { AllGraphs, MaximalPlanarOnly };

/// Canonical: grow planar graphs edge by edge, deduplicated up to isomorphism.
/// LabeledFilter: test every labeled graph on n <= 6 vertices.
enum class OracleStrategy { Canonical, LabeledFilter };

inline constexpr int kDefaultOracleCap = 8;
inline constexpr int kLabeledFilterCap = 6;

struct OracleQuery {
  int n = 4;
  PatternSpec pattern = PathPattern{3};
  OracleMode mode = OracleMode::MaximalPlanarOnly;
  OracleStrategy strategy = OracleStrategy::Canonical;
  int cap = kDefaultOracleCap;
  int witness_cap = 10;
};

struct OracleResult {
  std::uint64_t max_count = 0;
  /// graph6 strings of canonical witnesses, ascending by canonical code.
  std::vector<std::string> witnesses;
  std::uint64_t graphs_examined = 0;
};

/// Exact number of unlabeled copies of a path or cycle pattern in g.
std::uint64_t count_copies(const SimpleGraph& g, const PatternSpec& pattern);

/// Isomorphism-invariant relabeling of g (n <= 11).
SimpleGraph canonical_form(const SimpleGraph& g);

/// All planar graphs on n vertices up to isomorphism, optionally only the
/// edge-maximal ones, in ascending canonical order.
std::vector<SimpleGraph> planar_graphs(int n, bool maximal_only);

OracleResult max_copies_planar(const OracleQuery& query);

std::string to_string(OracleMode mode);

}  // namespace pathex
