#pragma once

// Fusion graphs of a generator: supertransitivity, spoke shapes, DOT output.

#include "fusion/extender.hpp"
#include "fusion/ring.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fusion {

/// Directed multigraph with adjacency(j, k) = n[gen][j][k]. For a self-dual
/// generator the adjacency is symmetric and the graph is read as undirected.
struct FusionGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<Integer>> adjacency;
  Index base = 0;
  Index generator = 0;
  bool self_dual = false;
  std::optional<std::vector<int>> degree;  // 0 even, 1 odd

  std::size_t size() const { return labels.size(); }

  // Undirected multiplicity: symmetric closure of the directed adjacency.
  Integer weight(Index j, Index k) const {
    return std::max(adjacency[j][k], adjacency[k][j]);
  }
};

inline FusionGraph fusion_graph(const FusionRing& ring, Index gen) {
  if (gen >= ring.rank()) throw std::out_of_range("generator index out of range");
  FusionGraph g;
  g.labels = ring.labels();
  g.base = ring.unit();
  g.generator = gen;
  g.self_dual = ring.dual(gen) == gen;
  const std::size_t r = ring.rank();
  g.adjacency.assign(r, std::vector<Integer>(r));
  for (Index j = 0; j < r; ++j)
    for (Index k = 0; k < r; ++k) g.adjacency[j][k] = ring.n(gen, j, k);
  return g;
}

inline FusionGraph fusion_graph(const GradedFusionRing& ring, Index gen) {
  FusionGraph g = fusion_graph(ring.full, gen);
  std::vector<int> deg(ring.full.rank());
  for (Index i = 0; i < deg.size(); ++i) deg[i] = ring.is_odd(i) ? 1 : 0;
  g.degree = std::move(deg);
  return g;
}

inline std::vector<long> distances_from(const FusionGraph& g, Index source) {
  std::vector<long> dist(g.size(), -1);
  std::deque<Index> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Index v = queue.front();
    queue.pop_front();
    for (Index w = 0; w < g.size(); ++w)
      if (dist[w] < 0 && g.weight(v, w) > 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

inline bool connected(const FusionGraph& g) {
  const auto d = distances_from(g, g.base);
  return std::all_of(d.begin(), d.end(), [](long x) { return x >= 0; });
}

/// Largest n such that the edges leaving vertices at distance < n from the
/// base form a simple path base - v1 - ... - vn with all multiplicities 1.
inline std::size_t supertransitivity(const FusionGraph& g) {
  if (!connected(g)) throw std::invalid_argument("supertransitivity of a disconnected graph");
  const auto dist = distances_from(g, g.base);
  std::vector<Index> path{g.base};
  for (;;) {
    const Index v = path.back();
    const long depth = static_cast<long>(path.size()) - 1;
    // v's neighbours must be its predecessor and exactly one new vertex.
    if (g.weight(v, v) != 0) break;
    std::vector<Index> forward;
    bool ok = true;
    for (Index w = 0; w < g.size() && ok; ++w) {
      const Integer wt = g.weight(v, w);
      if (wt == 0 || w == v) continue;
      if (wt != 1) ok = false;
      if (depth > 0 && w == path[path.size() - 2]) continue;
      if (dist[w] != depth + 1) ok = false;
      forward.push_back(w);
    }
    if (!ok || forward.size() != 1) break;
    path.push_back(forward.front());
  }
  return path.size() - 1;
}

enum class SpokeShape { spoke, path, other };

struct SpokeProfile {
  SpokeShape shape = SpokeShape::other;
  std::optional<Index> hub;
  std::vector<std::size_t> lengths;  // descending; only for spoke graphs
};

/// Tree with a single vertex of degree >= 3: the lengths of the paths from
/// that hub to each leaf. Paths are flagged separately; anything else is `other`.
inline SpokeProfile spoke_profile(const FusionGraph& g) {
  if (!connected(g)) throw std::invalid_argument("spoke profile of a disconnected graph");
  SpokeProfile out;
  const std::size_t v = g.size();
  std::size_t edges = 0;
  std::vector<std::size_t> degree(v, 0);
  for (Index j = 0; j < v; ++j) {
    if (g.weight(j, j) != 0) return out;
    for (Index k = j + 1; k < v; ++k) {
      const Integer w = g.weight(j, k);
      if (w == 0) continue;
      if (w != 1) return out;
      ++edges;
      ++degree[j];
      ++degree[k];
    }
  }
  if (edges + 1 != v) return out;
  std::vector<Index> hubs;
  for (Index j = 0; j < v; ++j)
    if (degree[j] >= 3) hubs.push_back(j);
  if (hubs.empty()) {
    out.shape = SpokeShape::path;
    return out;
  }
  if (hubs.size() != 1) return out;
  out.shape = SpokeShape::spoke;
  out.hub = hubs.front();
  for (Index first = 0; first < v; ++first) {
    if (first == *out.hub || g.weight(*out.hub, first) == 0) continue;
    Index prev = *out.hub, cur = first;
    std::size_t len = 1;
    while (degree[cur] == 2) {
      Index next = cur;
      for (Index w = 0; w < v; ++w)
        if (w != prev && w != cur && g.weight(cur, w) != 0) next = w;
      prev = cur;
      cur = next;
      ++len;
    }
    out.lengths.push_back(len);
  }
  std::sort(out.lengths.rbegin(), out.lengths.rend());
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// DOT text: nodes in basis order, degree classes as rank groups, one edge
/// line per unit of multiplicity. Undirected for self-dual generators.
inline std::string emit_dot(const FusionGraph& g) {
  std::ostringstream os;
  const bool undirected = g.self_dual;
  const char* arrow = undirected ? " -- " : " -> ";
  os << (undirected ? "graph" : "digraph") << " \"fusion_"
     << detail::dot_escape(g.labels[g.generator]) << "\" {\n";
  for (Index i = 0; i < g.size(); ++i) {
    os << "  n" << i << " [label=\"" << detail::dot_escape(g.labels[i]) << "\"";
    if (i == g.base) os << ", shape=doublecircle";
    os << "];\n";
  }
  if (g.degree) {
    for (int part = 0; part < 2; ++part) {
      os << "  { rank=same;";
      for (Index i = 0; i < g.size(); ++i)
        if ((*g.degree)[i] == part) os << " n" << i << ";";
      os << " }\n";
    }
  }
  for (Index j = 0; j < g.size(); ++j)
    for (Index k = undirected ? j : 0; k < g.size(); ++k)
      for (Integer c = 0; c < g.adjacency[j][k]; ++c)
        os << "  n" << j << arrow << "n" << k << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fusion
