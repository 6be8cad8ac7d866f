#pragma once

#include <optional>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"
#include "ivg/search.hpp"

namespace ivg {

/// Exhaustive-search guard exceeded.
class GuardError : public Error {
 public:
  using Error::Error;
};

inline constexpr Vertex kDefaultOracleLimit = 9;

/// True iff some ordering of V(g) is an interval ordering. Exhaustive search
/// over prefixes, memoized on (placed set, still-open set).
bool brute_force_interval(const Graph& g, Vertex max_n = kDefaultOracleLimit);

/// True iff some ordering of V(g) is an umbrella ordering. Hard limit n <= 12.
bool brute_force_umbrella(const Graph& g, Vertex max_n = kDefaultOracleLimit);

/// Every LBFS ordering of g, lexicographically sorted. Labels are explicit
/// position sets; no partition refinement involved.
std::vector<VertexOrdering> enumerate_lbfs(const Graph& g, Vertex max_n = kDefaultOracleLimit);

/// Vertices that end some LBFS ordering of g, ascending. Hard limit n <= 64.
std::vector<Vertex> enumerate_end_vertices(const Graph& g, Vertex max_n = kDefaultOracleLimit);

struct StructureReport {
  std::vector<Vertex> splitters;
  bool is_module = false;
  bool is_clique = false;
};

/// Splitters of S: vertices outside S adjacent to some but not all of S.
StructureReport structure(const Graph& g, std::span<const Vertex> subset);

/// Members of S with a neighbor placed after every vertex of S in sigma.
std::vector<Vertex> exposed_vertices(const Graph& g, const VertexOrdering& sigma, std::span<const Vertex> subset);

struct AnchorViolation {
  std::size_t position = 0;
  /// The snapshot, in ordering order.
  std::vector<Vertex> snapshot;
  Vertex first = 0;
  /// Exposed members; empty when the failure is "first is not an end vertex".
  std::vector<Vertex> exposed;
};

/// First snapshot of pi whose first vertex breaks (A1) or (A2). `max_n`
/// bounds the snapshots that need end-vertex enumeration.
std::optional<AnchorViolation> check_well_anchored(const Graph& g, const VertexOrdering& pi, const SweepTrace& trace,
                                                   Vertex max_n = kDefaultOracleLimit);

bool is_simplicial(const Graph& g, Vertex v);

}  // namespace ivg
