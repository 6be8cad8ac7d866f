#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"

namespace ivg {

struct Generated {
  Graph graph;
  /// The intervals the graph was drawn from, when there are any.
  std::optional<IntervalRepresentation> witness;
};

/// n integer intervals [a, a + len], a uniform in [0, n), len uniform in
/// [0, max_length]. Edges come from bucketing left endpoints, O(n * max_length + m).
Generated random_interval(Vertex n, std::uint64_t seed, std::int64_t max_length = 16);

/// n closed unit intervals [a/den, a/den + 1], a uniform in [0, span * den).
/// span defaults to max(1, n / 4).
Generated random_unit(Vertex n, std::uint64_t seed, std::int64_t den = 16, std::int64_t span = 0);

/// Erdos-Renyi G(n, p).
Graph gnp(Vertex n, double p, std::uint64_t seed);

/// Dispatch by kind name: random-interval, random-unit, gnp, named.
Generated generate(std::string_view kind, Vertex n, double p, std::uint64_t seed, std::string_view name = {});

}  // namespace ivg
