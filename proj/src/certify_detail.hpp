#pragma once

#include <vector>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"

// Certificate builders without the precondition check, for callers that have
// already verified the ordering.
namespace ivg::detail {

// reach[v]: position of v's last neighbor in sigma, or v's own position.
std::vector<std::size_t> reach_positions(const Graph& g, const VertexOrdering& sigma);

IntervalRepresentation representation_from_reach(const VertexOrdering& sigma, const std::vector<std::size_t>& reach);
IntervalRepresentation unit_representation_from_reach(const VertexOrdering& sigma,
                                                      const std::vector<std::size_t>& reach);
CliquePath clique_path_from_reach(const VertexOrdering& sigma, const std::vector<std::size_t>& reach);

}  // namespace ivg::detail
