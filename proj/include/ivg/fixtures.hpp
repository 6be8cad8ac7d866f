#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"

namespace ivg {

/// fig2, bull, claw, gstar, c4, p3, subdivided-claw.
const std::vector<std::string>& fixture_names();

/// Throws Error on an unknown name.
Graph fixture_graph(std::string_view name);

/// Integer interval representation of the fig2 graph, one clique per point.
IntervalRepresentation fig2_representation();

/// The 22 intervals G* is built from, endpoints are clique indices 1..16.
IntervalRepresentation gstar_representation();
CliquePath gstar_clique_path();

/// Named LBFS orderings of G*: sigma1, sigma1_plus, sigma2, sigma2_plus,
/// sigma3, sigma3_plus, sigma_prime.
VertexOrdering gstar_ordering(std::string_view name);

/// S*: the snapshot of vertex 19 in sigma1.
std::vector<Vertex> gstar_s_star();

}  // namespace ivg
