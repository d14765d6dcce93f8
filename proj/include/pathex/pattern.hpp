#pragma once

#include <string>
#include <variant>

#include "pathex/graph.hpp"

namespace pathex {

/// P_m: the path on m vertices.
struct PathPattern {
  int vertices = 2;
};

/// C_m.
struct CyclePattern {
  int length = 3;
};

/// P_(s,t) with the s-edge path anchored at `a` and the t-edge path at `b`.
struct AnchoredPairPattern {
  int s = 0;
  int t = 0;
  Vertex a = 1;
  Vertex b = 2;
};

/// The walk functional summed over ordered m-tuples of distinct vertices.
struct RhoPattern {
  int m = 2;
};

using PatternSpec = std::variant<PathPattern, AnchoredPairPattern, CyclePattern, RhoPattern>;

/// Throws InvalidPattern / InvalidAnchor / InvalidVertex. Pass n = 0 to skip
/// the anchor range check.
void validate(const PatternSpec& pattern, int n = 0);

/// Degree of the density polynomial (all patterns are homogeneous).
int polynomial_degree(const PatternSpec& pattern);

/// True for patterns whose density is multilinear in the edge weights.
bool is_multilinear(const PatternSpec& pattern);

std::string to_string(const PatternSpec& pattern);

}  // namespace pathex
