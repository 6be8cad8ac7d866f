#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"

namespace ivg {

/// Per-position snapshot record of an LBFS-type sweep.
///
/// A snapshot S_sigma(v) is the head class when v is chosen. It is always
/// visited contiguously, so it is stored as the last position it covers:
/// the snapshot at position i spans positions i..snapshot_end[i - 1].
struct SweepTrace {
  std::vector<std::uint32_t> snapshot_end;

  std::span<const Vertex> snapshot(const VertexOrdering& order, std::size_t pos) const {
    auto all = order.vertices();
    return all.subspan(pos - 1, snapshot_end[pos - 1] - pos + 1);
  }
};

/// N_sigma(v): neighbors of v placed earlier in `order`, in order of position.
std::vector<Vertex> earlier_neighbors(const Graph& g, const VertexOrdering& order, Vertex v);

struct Sweep {
  VertexOrdering ordering;
  SweepTrace trace;
};

/// Raised when a sweep that needs an LBFS ordering receives something else.
class InvalidOrdering : public Error {
 public:
  InvalidOrdering(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Lexicographic BFS; ties go to the smallest id. With `start`, the first
/// vertex is forced and later choices follow the same rule.
Sweep lbfs(const Graph& g, std::optional<Vertex> start = std::nullopt);

/// LBFS+: every tie is broken by the vertex that comes last in `sigma`.
/// Throws InvalidOrdering unless sigma is an LBFS ordering of g.
Sweep lbfs_plus(const Graph& g, const VertexOrdering& sigma);

/// LBFS-up: anchors each snapshot at an exposed vertex when the reference
/// LBFS+ ordering can see one. Throws InvalidOrdering like lbfs_plus.
Sweep lbfs_up(const Graph& g, const VertexOrdering& tau_plus);

/// LBFS-delta: starts at u, then always takes a minimum-degree vertex of the
/// snapshot (ties by smallest id).
Sweep lbfs_delta(const Graph& g, Vertex u);

/// MCS-delta: starts at u, then takes a vertex with the most visited
/// neighbors; ties by minimum degree, then smallest id.
VertexOrdering mcs_delta(const Graph& g, Vertex u);

/// Minimum-degree vertex of the last BFS level from vertex 1 (ties by id).
/// Throws Error on a disconnected graph.
Vertex bfs_min_degree_end_vertex(const Graph& g);

struct LbfsCheck {
  bool ok = false;
  /// First position whose vertex is outside the head class (0 when ok).
  std::size_t violation_position = 0;
  /// Snapshots of the replay; meaningful only when ok.
  SweepTrace trace;
};

/// Replays LBFS with choices forced by sigma. O(n + m).
LbfsCheck is_lbfs_ordering(const Graph& g, const VertexOrdering& sigma);

}  // namespace ivg
