#include "pathex/pattern.hpp"

#include <string>
#include <type_traits>

namespace pathex {

void validate(const PatternSpec& pattern, int n) {
  std::visit(
      [n](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PathPattern>) {
          if (p.vertices < 2) throw Error(ErrorKind::InvalidPattern, "path(m) needs m >= 2");
        } else if constexpr (std::is_same_v<P, CyclePattern>) {
          if (p.length < 3) throw Error(ErrorKind::InvalidPattern, "cycle(m) needs m >= 3");
        } else if constexpr (std::is_same_v<P, AnchoredPairPattern>) {
          if (p.s < 0 || p.t < 0)
            throw Error(ErrorKind::InvalidPattern, "anchored pair needs s, t >= 0");
          if (p.a == p.b) throw Error(ErrorKind::InvalidAnchor, "anchors must be distinct");
          if (n > 0 && (p.a < 1 || p.a > n || p.b < 1 || p.b > n))
            throw Error(ErrorKind::InvalidVertex, "anchor outside [1, n]");
        } else {
          if (p.m < 2) throw Error(ErrorKind::InvalidPattern, "rho(m) needs m >= 2");
        }
      },
      pattern);
}

int polynomial_degree(const PatternSpec& pattern) {
  return std::visit(
      [](const auto& p) -> int {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PathPattern>) return p.vertices - 1;
        else if constexpr (std::is_same_v<P, CyclePattern>) return p.length;
        else if constexpr (std::is_same_v<P, AnchoredPairPattern>) return p.s + p.t;
        else return p.m + 1;
      },
      pattern);
}

bool is_multilinear(const PatternSpec& pattern) {
  return !std::holds_alternative<RhoPattern>(pattern);
}

std::string to_string(const PatternSpec& pattern) {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, PathPattern>) {
          return "path(" + std::to_string(p.vertices) + ")";
        } else if constexpr (std::is_same_v<P, CyclePattern>) {
          return "cycle(" + std::to_string(p.length) + ")";
        } else if constexpr (std::is_same_v<P, AnchoredPairPattern>) {
          return "anchored(" + std::to_string(p.s) + "," + std::to_string(p.t) +
                 ";a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b) + ")";
        } else {
          return "rho(" + std::to_string(p.m) + ")";
        }
      },
      pattern);
}

}  // namespace pathex
