#pragma once

#include "ivg/search.hpp"

// Sweeps that trust their reference ordering to be an LBFS, for pipelines
// feeding one sweep's output into the next.
namespace ivg::detail {

Sweep lbfs_plus_unchecked(const Graph& g, const VertexOrdering& sigma);
Sweep lbfs_up_unchecked(const Graph& g, const VertexOrdering& tau_plus);

}  // namespace ivg::detail
