#include <string>

#include "pathex/graph_io.hpp"

namespace pathex {

namespace {

constexpr int kOffset = 63;

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
  }
}

int read_sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Error(ErrorKind::Parse, "graph6: truncated input");
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > 126) throw Error(ErrorKind::Parse, "graph6: byte out of range");
  return c - kOffset;
}

}  // namespace

std::string to_graph6(const SimpleGraph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  int n = read_sextet(text, pos++);
  if (n == 63) {
    if (read_sextet(text, pos) == 63)
      throw Error(ErrorKind::Parse, "graph6: graphs beyond 258047 vertices are not supported");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | read_sextet(text, pos++);
  }
  if (n > kMaxVertices) throw Error(ErrorKind::ResourceLimit, "graph6: too many vertices");
  SimpleGraph g(n);
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) throw Error(ErrorKind::Parse, "graph6: length mismatch");
  int sextet = 0;
  int left = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      if (left == 0) {
        sextet = read_sextet(text, pos++);
        left = 6;
      }
      --left;
      if ((sextet >> left) & 1) g.add_edge(i, j);
    }
  }
  if (left > 0 && (sextet & ((1 << left) - 1)) != 0)
    throw Error(ErrorKind::Parse, "graph6: nonzero padding bits");
  return g;
}

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be [i, j]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("graph json: ") + ex.what());
  }
}

}  // namespace pathex
