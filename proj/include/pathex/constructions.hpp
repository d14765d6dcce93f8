#pragma once

#include <cstdint>
#include <vector>

#include "pathex/measure.hpp"

namespace pathex {

/// Parameters of the blown-up C_{2m}: hubs 1..m, then the m classes in order.
struct BlowupSpec {
  int m = 2;
  int n = 4;
  std::vector<int> class_sizes;

  static BlowupSpec balanced(int m, int n);
};

/// C_{2m} with every second vertex replaced by an independent set. Class i
/// is joined to hubs i and i+1 (mod m); class sizes differ by at most one.
SimpleGraph blowup_cycle(int m, int n);
SimpleGraph blowup_cycle(const BlowupSpec& spec);

/// Probability measure with weight 1/m on each edge of the cycle 1-2-...-m-1 in K_n.
template <class S>
EdgeMeasure<S> uniform_cycle_measure(int m, int n) {
  if (m < 3) throw Error(ErrorKind::InvalidSpec, "uniform cycle needs m >= 3");
  if (m > n) throw Error(ErrorKind::InvalidSpec, "uniform cycle needs m <= n");
  EdgeMeasure<S> mu(n);
  const S w = S(1) / S(m);
  for (Vertex i = 1; i <= m; ++i) mu.set(i, i % m + 1, w);
  return mu;
}

struct GapRow {
  int m = 0;
  int n = 0;
  std::uint64_t count = 0;
  /// 4 m^-m n^(m+1), the conjectured leading term.
  double target = 0.0;
  double ratio = 0.0;
};

/// Exact P_{2m+1} counts on the blow-up for each n, against the conjectured leading term.
std::vector<GapRow> conjecture_gap_report(int m, const std::vector<int>& ns);

}  // namespace pathex
