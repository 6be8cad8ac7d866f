#pragma once

#include <optional>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"
#include "ivg/verify.hpp"

namespace ivg {

/// Raised when a conversion gets an input that fails its verifier.
class CertificateError : public Error {
 public:
  CertificateError(const std::string& what, std::optional<OrderingViolation> violation = std::nullopt)
      : Error(what), violation_(violation) {}
  const std::optional<OrderingViolation>& violation() const { return violation_; }

 private:
  std::optional<OrderingViolation> violation_;
};

/// I(v_i) = [i, j] with v_j the last neighbor of v_i (j = i when none is later).
IntervalRepresentation ordering_to_representation(const Graph& g, const VertexOrdering& sigma);

/// Maximal cliques as the stab sets of ordering_to_representation, in order.
CliquePath ordering_to_clique_path(const Graph& g, const VertexOrdering& sigma);

/// I(v) = [sigma(v), sigma(u) + sigma(v)/n], u the last vertex of sigma|N[v].
/// Intervals are pairwise non-nested.
IntervalRepresentation umbrella_to_unit_representation(const Graph& g, const VertexOrdering& sigma);

/// I(v) = [lp(v), rp(v)]. Throws CertificateError when a vertex is missing or
/// its cliques are not consecutive.
IntervalRepresentation clique_path_to_representation(const CliquePath& cp);

/// Intersection graph of rep.
Graph representation_to_graph(const IntervalRepresentation& rep);

}  // namespace ivg
