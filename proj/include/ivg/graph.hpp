#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ivg {

/// Vertex ids are 1-based; 0 is reserved as "no vertex".
using Vertex = std::int32_t;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: bad ids, self-loops, broken file lines.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Simple undirected graph stored as CSR with every adjacency list sorted by id.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates parallel edges; rejects self-loops and out-of-range ids.
  static Graph from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Adopts a CSR whose lists are already sorted, duplicate-free and symmetric.
  /// `offsets` has n + 2 entries; list of v is targets[offsets[v], offsets[v+1]).
  static Graph from_sorted_csr(Vertex n, std::vector<std::size_t> offsets,
                               std::vector<Vertex> targets);

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::int32_t degree(Vertex v) const {
    return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  /// Edges with u < v, sorted lexicographically.
  EdgeList edges() const;

  /// Subgraph induced by `vertices`, relabelled 1..k in the given order.
  /// The i-th entry of `vertices` becomes vertex i + 1.
  Graph induced(std::span<const Vertex> vertices) const;

  std::span<const std::size_t> offsets() const { return offsets_; }
  std::span<const Vertex> targets() const { return targets_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0, 0};
  std::vector<Vertex> targets_;
};

inline Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  return Graph::from_edges(n, edges);
}

/// Connected components, each sorted by id, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

bool is_connected(const Graph& g);

/// g.induced(part) for every part of components(g), built in one O(n + m) pass.
/// Parts must be sorted by id.
std::vector<Graph> component_subgraphs(const Graph& g, const std::vector<std::vector<Vertex>>& parts);

}  // namespace ivg
