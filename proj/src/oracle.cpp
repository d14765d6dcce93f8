#include "pathex/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>

#include "pathex/graph_io.hpp"

namespace pathex {

namespace {

constexpr int kCanonicalCap = 11;  // codes use n(n-1)/2 <= 64 bits

using Code = std::uint64_t;

Code encode(const SimpleGraph& g, const std::vector<Vertex>& order) {
  const int n = g.order();
  Code code = 0;
  int idx = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q, ++idx)
      if (g.has_edge(order[p], order[q])) code |= Code{1} << idx;
  return code;
}

SimpleGraph decode(int n, Code code) {
  SimpleGraph g(n);
  int idx = 0;
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j, ++idx)
      if ((code >> idx) & 1) g.add_edge(i, j);
  return g;
}

/// Color refinement; the new colors are ranks of (old color, sorted neighbor colors),
/// so they depend only on the isomorphism type of (g, initial coloring).
std::vector<int> refined_colors(const SimpleGraph& g, std::vector<int> color) {
  const int n = g.order();
  std::vector<int> ranks = color;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  int classes = static_cast<int>(ranks.size());
  for (int& c : color) c = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), c) - ranks.begin());
  // Signature: own color, then neighbor colors ascending, padded with -1 (n <= 11).
  using Signature = std::array<std::int8_t, kCanonicalCap + 1>;
  std::vector<Signature> signature(static_cast<std::size_t>(n));
  std::vector<Signature> distinct;
  while (true) {
    for (Vertex v = 1; v <= n; ++v) {
      Signature& sig = signature[v - 1];
      sig.fill(-1);
      sig[0] = static_cast<std::int8_t>(color[v - 1]);
      int k = 1;
      for (VertexMask rest = g.neighbors(v); rest; rest &= rest - 1)
        sig[k++] = static_cast<std::int8_t>(color[std::countr_zero(rest)]);
      std::sort(sig.begin() + 1, sig.begin() + k);
    }
    distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                  distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) return color;
    classes = static_cast<int>(distinct.size());
  }
}

/// Individualization-refinement without automorphism pruning: the largest code
/// over all leaves of the search tree.
void search_leaves(const SimpleGraph& g, const std::vector<int>& color, Code& best, bool& have) {
  const int n = g.order();
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : color) ++size[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
  if (target < 0) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) order[color[v - 1]] = v;
    const Code code = encode(g, order);
    if (!have || code > best) {
      best = code;
      have = true;
    }
    return;
  }
  VertexMask tried = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (color[v - 1] != target) continue;
    // Swapping v with an already tried twin is an automorphism fixing the coloring,
    // so its subtree has the same leaves.
    bool twin = false;
    for (VertexMask rest = tried; rest && !twin; rest &= rest - 1) {
      const Vertex w = std::countr_zero(rest) + 1;
      twin = (g.neighbors(v) & ~bit(w)) == (g.neighbors(w) & ~bit(v));
    }
    if (twin) continue;
    tried |= bit(v);
    std::vector<int> split(color.size());
    for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + 1;
    split[v - 1] = 2 * target;
    search_leaves(g, refined_colors(g, std::move(split)), best, have);
  }
}

Code canonical_code(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kCanonicalCap) throw Error(ErrorKind::ResourceLimit, "canonical form supports n <= 11");
  Code best = 0;
  bool have = false;
  search_leaves(g, refined_colors(g, std::vector<int>(static_cast<std::size_t>(n), 0)), best, have);
  return best;
}

bool is_edge_maximal_planar(const SimpleGraph& g) {
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      if (g.has_edge(i, j)) continue;
      SimpleGraph h = g;
      h.add_edge(i, j);
      if (is_planar(h)) return false;
    }
  return true;
}

std::vector<Code> generate_planar_codes(int n, bool maximal_only) {
  std::vector<Code> out;
  std::set<Code> level{0};
  while (!level.empty()) {
    std::set<Code> next;
    std::set<Code> rejected;
    for (Code code : level) {
      const SimpleGraph g = decode(n, code);
      bool extendable = false;
      for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) {
          if (g.has_edge(i, j)) continue;
          SimpleGraph h = g;
          h.add_edge(i, j);
          // Canonize first: most children repeat, and planarity is the costlier test.
          const Code child = canonical_code(h);
          if (next.contains(child)) {
            extendable = true;
            continue;
          }
          if (rejected.contains(child)) continue;
          if (!is_planar(h)) {
            rejected.insert(child);
            continue;
          }
          extendable = true;
          next.insert(child);
        }
      if (!maximal_only || !extendable) out.push_back(code);
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Enumeration is the expensive part of every query; keep the results per (n, maximal).
const std::vector<Code>& planar_codes(int n, bool maximal_only) {
  static std::mutex lock;
  static std::map<std::pair<int, bool>, std::vector<Code>> cache;
  const std::scoped_lock guard(lock);
  auto it = cache.find({n, maximal_only});
  if (it == cache.end()) it = cache.emplace(std::pair{n, maximal_only}, generate_planar_codes(n, maximal_only)).first;
  return it->second;
}

class Tracker {
 public:
  Tracker(int n, int witness_cap) : n_(n), cap_(witness_cap) {}

  void offer(const SimpleGraph& g, std::uint64_t count) {
    ++result_.graphs_examined;
    if (count < result_.max_count) return;
    if (count > result_.max_count || result_.graphs_examined == 1) {
      result_.max_count = count;
      codes_.clear();
    }
    codes_.insert(canonical_code(g));
  }

  OracleResult finish() {
    for (Code code : codes_) {
      if (static_cast<int>(result_.witnesses.size()) >= cap_) break;
      result_.witnesses.push_back(to_graph6(decode(n_, code)));
    }
    return result_;
  }

 private:
  int n_;
  int cap_;
  OracleResult result_;
  std::set<Code> codes_;
};

}  // namespace

std::string to_string(OracleMode mode) {
  return mode == OracleMode::AllGraphs ? "all-graphs" : "maximal-planar-only";
}

std::uint64_t count_copies(const SimpleGraph& g, const PatternSpec& pattern) {
  std::uint64_t count = 0;
  if (const auto* p = std::get_if<PathPattern>(&pattern)) {
    validate(*p);
    for_each_path_copy(g, p->vertices, [&](std::span<const Vertex>) { ++count; });
  } else if (const auto* c = std::get_if<CyclePattern>(&pattern)) {
    validate(*c);
    for_each_cycle_copy(g, c->length, [&](std::span<const Vertex>) { ++count; });
  } else {
    throw Error(ErrorKind::InvalidPattern, "copy counting supports path and cycle patterns");
  }
  return count;
}

SimpleGraph canonical_form(const SimpleGraph& g) { return decode(g.order(), canonical_code(g)); }

std::vector<SimpleGraph> planar_graphs(int n, bool maximal_only) {
  if (n < 1 || n > kCanonicalCap) throw Error(ErrorKind::ResourceLimit, "planar_graphs supports n <= 11");
  std::vector<SimpleGraph> out;
  for (Code code : planar_codes(n, maximal_only)) out.push_back(decode(n, code));
  return out;
}

OracleResult max_copies_planar(const OracleQuery& q) {
  if (q.n < 1) throw Error(ErrorKind::InvalidSpec, "oracle needs n >= 1");
  if (!std::holds_alternative<PathPattern>(q.pattern) && !std::holds_alternative<CyclePattern>(q.pattern))
    throw Error(ErrorKind::InvalidPattern, "oracle supports path and cycle patterns");
  validate(q.pattern);
  const int k = std::holds_alternative<PathPattern>(q.pattern) ? std::get<PathPattern>(q.pattern).vertices
                                                                : std::get<CyclePattern>(q.pattern).length;
  if (k > q.n) throw Error(ErrorKind::InvalidSpec, "pattern larger than host");
  const int cap = q.strategy == OracleStrategy::LabeledFilter ? std::min(q.cap, kLabeledFilterCap)
                                                              : std::min(q.cap, kCanonicalCap);
  if (q.n > cap)
    throw Error(ErrorKind::ResourceLimit,
                "oracle n=" + std::to_string(q.n) + " exceeds cap " + std::to_string(cap));

  Tracker tracker(q.n, q.witness_cap);
  const bool maximal_only = q.mode == OracleMode::MaximalPlanarOnly;
  if (q.strategy == OracleStrategy::Canonical) {
    for (Code code : planar_codes(q.n, maximal_only)) {
      const SimpleGraph g = decode(q.n, code);
      tracker.offer(g, count_copies(g, q.pattern));
    }
  } else {
    const int edges = complete_edge_count(q.n);
    const auto all = complete_edge_list(q.n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
      SimpleGraph g(q.n);
      for (int e = 0; e < edges; ++e)
        if ((mask >> e) & 1) g.add_edge(all[e].first, all[e].second);
      if (!is_planar(g)) continue;
      if (maximal_only && !is_edge_maximal_planar(g)) continue;
      tracker.offer(g, count_copies(g, q.pattern));
    }
  }
  return tracker.finish();
}

}  // namespace pathex
