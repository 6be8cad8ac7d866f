#pragma once

#include <optional>
#include <vector>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"

namespace ivg {

/// For each position i, the positions of v_i's neighbors in decreasing order.
/// Built by bucket filling, O(n + m).
std::vector<std::vector<std::size_t>> descending_position_lists(const Graph& g, const VertexOrdering& sigma);

/// nullopt when sigma is an interval ordering, otherwise the lexicographically
/// first violating triple. Throws Error unless sigma is a permutation of V(g).
std::optional<OrderingViolation> verify_interval_ordering(const Graph& g, const VertexOrdering& sigma);

enum class Side { forward, reversed };

struct UmbrellaViolation {
  /// Positions refer to sigma on the forward side and to reverse(sigma) on
  /// the reversed side.
  OrderingViolation triple;
  Side side = Side::forward;
};

/// Tests sigma and then its reversal as interval orderings.
std::optional<UmbrellaViolation> verify_umbrella_ordering(const Graph& g, const VertexOrdering& sigma);

/// Checks clique-ness, maximality, consecutiveness and coverage; the clique
/// count is cross-checked against a perfect-elimination clique count.
std::optional<Defect> verify_clique_path(const Graph& g, const CliquePath& cp);

/// Compares the intersection pattern of rep with E(g) by an endpoint sweep.
/// In unit mode, proper containment is also a defect.
std::optional<Defect> verify_representation(const Graph& g, const IntervalRepresentation& rep,
                                            bool unit_mode = false);

/// Number of maximal cliques of a chordal graph, from the reverse of an LBFS
/// ordering. Meaningless on non-chordal input.
std::size_t chordal_maximal_clique_count(const Graph& g);

}  // namespace ivg
