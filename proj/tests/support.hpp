#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"

namespace ivg::testing {

inline VertexOrdering ord(std::initializer_list<Vertex> ids) { return VertexOrdering(std::vector<Vertex>(ids)); }

inline Graph make(Vertex n, const EdgeList& edges) { return Graph::from_edges(n, edges); }

inline Graph complete(Vertex n) {
  EdgeList edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return make(n, edges);
}

// Graph whose edge set is given by the bits of `mask` over pairs
// (1,2), (1,3), ..., (n-1,n).
inline Graph from_mask(Vertex n, std::uint64_t mask) {
  EdgeList edges;
  int b = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v, ++b)
      if (mask >> b & 1) edges.emplace_back(u, v);
  return make(n, edges);
}

// First triple (i, j, k) by plain O(n^3) scan, positions 1-based.
inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> naive_interval_violation(
    const Graph& g, const VertexOrdering& s) {
  const auto n = s.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        if (g.adjacent(s.at(i), s.at(k)) && !g.adjacent(s.at(i), s.at(j))) return std::make_tuple(i, j, k);
  return std::nullopt;
}

inline bool naive_is_umbrella(const Graph& g, const VertexOrdering& s) {
  const auto n = s.size();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        if (g.adjacent(s.at(i), s.at(k)) && (!g.adjacent(s.at(i), s.at(j)) || !g.adjacent(s.at(j), s.at(k))))
          return false;
  return true;
}

// Exhaustive permutation search; only for tiny n.
inline bool naive_has_ordering(const Graph& g, bool umbrella) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.vertex_count()));
  std::iota(p.begin(), p.end(), 1);
  do {
    VertexOrdering s(p);
    if (umbrella ? naive_is_umbrella(g, s) : !naive_interval_violation(g, s)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      if (!g.adjacent(set[a], set[b])) return false;
  return true;
}

inline VertexOrdering random_permutation(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return VertexOrdering(std::move(p));
}

// Vertices sorted by left endpoint; an interval ordering of the drawn graph.
inline VertexOrdering left_order(const IntervalRepresentation& rep) {
  std::vector<Vertex> p(static_cast<std::size_t>(rep.size()));
  std::iota(p.begin(), p.end(), 1);
  std::stable_sort(p.begin(), p.end(), [&](Vertex a, Vertex b) { return rep.at(a).left < rep.at(b).left; });
  return VertexOrdering(std::move(p));
}

// Same graph with vertex v renamed to perm[v - 1].
inline Graph rename(const Graph& g, const std::vector<Vertex>& perm) {
  EdgeList edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u - 1], perm[v - 1]);
  return make(g.vertex_count(), edges);
}

}  // namespace ivg::testing
