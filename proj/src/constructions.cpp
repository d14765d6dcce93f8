#include "pathex/constructions.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pathex/oracle.hpp"

namespace pathex {

BlowupSpec BlowupSpec::balanced(int m, int n) {
  if (m < 2) throw Error(ErrorKind::InvalidSpec, "blow-up needs m >= 2");
  if (n < 2 * m) throw Error(ErrorKind::InvalidSpec, "blow-up needs n >= 2m");
  BlowupSpec spec{m, n, {}};
  const int rest = n - m;
  for (int i = 0; i < m; ++i) spec.class_sizes.push_back(rest / m + (i < rest % m ? 1 : 0));
  return spec;
}

SimpleGraph blowup_cycle(const BlowupSpec& spec) {
  const int m = spec.m;
  if (m < 2 || static_cast<int>(spec.class_sizes.size()) != m)
    throw Error(ErrorKind::InvalidSpec, "blow-up needs m >= 2 and m class sizes");
  if (std::accumulate(spec.class_sizes.begin(), spec.class_sizes.end(), 0) != spec.n - m)
    throw Error(ErrorKind::InvalidSpec, "class sizes must sum to n - m");
  if (spec.n > kMaxVertices) throw Error(ErrorKind::ResourceLimit, "blow-up too large");
  SimpleGraph g(spec.n);
  Vertex next = m + 1;
  for (int i = 0; i < m; ++i) {
    const Vertex left = i + 1;
    const Vertex right = (i + 1) % m + 1;
    for (int k = 0; k < spec.class_sizes[i]; ++k, ++next) {
      g.add_edge(next, left);
      g.add_edge(next, right);
    }
  }
  return g;
}

SimpleGraph blowup_cycle(int m, int n) { return blowup_cycle(BlowupSpec::balanced(m, n)); }

std::vector<GapRow> conjecture_gap_report(int m, const std::vector<int>& ns) {
  std::vector<GapRow> rows;
  for (int n : ns) {
    GapRow row;
    row.m = m;
    row.n = n;
    row.count = count_copies(blowup_cycle(m, n), PathPattern{2 * m + 1});
    row.target = 4.0 * std::pow(static_cast<double>(m), -m) * std::pow(static_cast<double>(n), m + 1);
    row.ratio = static_cast<double>(row.count) / row.target;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace pathex
