#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ivg/certificate.hpp"
#include "ivg/graph.hpp"
#include "ivg/ordering.hpp"
#include "ivg/verify.hpp"

namespace ivg {

enum class UnitStrategy { three_sweep, two_sweep_lbfs, two_sweep_mcs, bfs_start };

/// "three-sweep", "two-sweep-lbfs", "two-sweep-mcs", "bfs-start".
UnitStrategy parse_strategy(std::string_view name);
std::string to_string(UnitStrategy strategy);
inline constexpr UnitStrategy kAllStrategies[] = {UnitStrategy::three_sweep, UnitStrategy::two_sweep_lbfs,
                                                  UnitStrategy::two_sweep_mcs, UnitStrategy::bfs_start};

struct RecognitionOutcome {
  bool yes = false;
  /// The ordering the verdict is read from (last sweep).
  VertexOrdering ordering;
  std::optional<IntervalRepresentation> representation;
  std::optional<CliquePath> clique_path;
  /// On no: the first violating triple of `ordering` (or of its reversal,
  /// see `side`, for the unit recognizer).
  std::optional<OrderingViolation> violation;
  std::optional<Side> side;
  /// Every sweep ordering in pipeline order, with its name.
  std::vector<std::pair<std::string, VertexOrdering>> sweeps;
};

/// Four sweeps per component: lbfs, lbfs+, lbfs-up, lbfs+. Components follow
/// each other by smallest id; with `start`, start's component goes first and
/// its first sweep begins there.
RecognitionOutcome recognize_interval(const Graph& g, std::optional<Vertex> start = std::nullopt);

RecognitionOutcome recognize_unit_interval(const Graph& g, UnitStrategy strategy = UnitStrategy::three_sweep);

}  // namespace ivg
