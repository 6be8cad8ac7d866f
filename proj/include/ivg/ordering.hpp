#pragma once

#include <span>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

/// A bijection between a vertex set and positions 1..k. The vertex set is
/// usually all of V(G), but restrictions produce orderings of subsets.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  /// Throws Error on non-positive or repeated ids.
  explicit VertexOrdering(std::vector<Vertex> order);

  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  /// Vertex at 1-based position `pos`.
  Vertex at(std::size_t pos) const { return order_[pos - 1]; }
  /// 1-based position of v, or 0 when v is not ordered.
  std::size_t position(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < position_.size() ? position_[v] : 0;
  }
  bool contains(Vertex v) const { return position(v) != 0; }
  bool before(Vertex u, Vertex v) const { return position(u) < position(v); }

  Vertex first() const { return order_.front(); }
  Vertex last() const { return order_.back(); }
  std::span<const Vertex> vertices() const { return order_; }

  VertexOrdering reversed() const;

  /// True when the ordered set is exactly {1..g.vertex_count()}.
  bool is_permutation_of(const Graph& g) const;

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> position_;
};

/// sigma|_S: members of S in sigma order. Throws Error if S has a vertex sigma lacks.
VertexOrdering restrict(const VertexOrdering& sigma, std::span<const Vertex> subset);

/// Maps an ordering of a relabelled subgraph back to original ids.
VertexOrdering relabel(const VertexOrdering& local, std::span<const Vertex> to_original);

/// g with vertex sigma.at(i) renamed to i. Lists come out sorted without a
/// comparison sort, O(n + m). sigma must be a permutation of V(g).
Graph renumber(const Graph& g, const VertexOrdering& sigma);

}  // namespace ivg
