#include "ivg/recognize.hpp"

#include <algorithm>
#include <functional>

#include "certify_detail.hpp"
#include "ivg/search.hpp"
#include "ivg/verify.hpp"
#include "search_detail.hpp"

namespace ivg {

namespace {

using Named = std::vector<std::pair<std::string, VertexOrdering>>;
using Pipeline = std::function<Named(const Graph&)>;

// Ids first..last of h as a graph on 1..k; the range must be closed under
// adjacency.
Graph id_range(const Graph& h, Vertex first, Vertex last) {
  if (first == 1 && last == h.vertex_count()) return h;
  const Vertex k = last - first + 1;
  const auto base = h.offsets()[first];
  std::vector<std::size_t> offsets(static_cast<std::size_t>(k) + 2, 0);
  for (Vertex i = 1; i <= k + 1; ++i) offsets[i] = h.offsets()[first + i - 1] - base;
  auto span = h.targets().subspan(base, offsets[k + 1]);
  std::vector<Vertex> targets(span.begin(), span.end());
  for (Vertex& w : targets) w -= first - 1;
  return Graph::from_sorted_csr(k, std::move(offsets), std::move(targets));
}

VertexOrdering identity(Vertex n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) ids[i - 1] = i;
  return VertexOrdering(std::move(ids));
}

Pipeline unit_pipeline(UnitStrategy strategy) {
  switch (strategy) {
    case UnitStrategy::three_sweep:
      return [](const Graph& g) -> Named {
        auto tau = lbfs(g).ordering;
        auto sigma = detail::lbfs_plus_unchecked(g, tau).ordering;
        auto sigma_plus = detail::lbfs_plus_unchecked(g, sigma).ordering;
        return {{"tau", std::move(tau)}, {"sigma", std::move(sigma)}, {"sigma_plus", std::move(sigma_plus)}};
      };
    case UnitStrategy::two_sweep_lbfs:
      return [](const Graph& g) -> Named {
        auto tau = lbfs(g).ordering;
        auto sigma = lbfs_delta(g, tau.last()).ordering;
        return {{"tau", std::move(tau)}, {"sigma", std::move(sigma)}};
      };
    case UnitStrategy::two_sweep_mcs:
      return [](const Graph& g) -> Named {
        auto tau = lbfs(g).ordering;
        auto sigma = mcs_delta(g, tau.last());
        return {{"tau", std::move(tau)}, {"sigma", std::move(sigma)}};
      };
    case UnitStrategy::bfs_start:
      return [](const Graph& g) -> Named {
        auto sigma = lbfs_delta(g, bfs_min_degree_end_vertex(g)).ordering;
        return {{"sigma", std::move(sigma)}};
      };
  }
  throw Error("unknown strategy");
}

// Runs the pipeline on each component and concatenates the orderings sweep
// by sweep, components in order of their smallest id.
Named run_per_component(const Graph& g, const Pipeline& pipeline) {
  if (g.vertex_count() == 0) return {};
  auto parts = components(g);
  if (parts.size() == 1) return pipeline(g);

  auto subgraphs = component_subgraphs(g, parts);
  Named merged;
  std::vector<std::vector<Vertex>> sequences;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    auto local = pipeline(subgraphs[c]);
    if (sequences.empty()) {
      sequences.resize(local.size());
      for (const auto& [name, ordering] : local) merged.emplace_back(name, VertexOrdering());
    }
    for (std::size_t s = 0; s < local.size(); ++s) {
      for (Vertex v : local[s].second.vertices()) sequences[s].push_back(parts[c][v - 1]);
    }
  }
  for (std::size_t s = 0; s < merged.size(); ++s) merged[s].second = VertexOrdering(std::move(sequences[s]));
  return merged;
}

}  // namespace

UnitStrategy parse_strategy(std::string_view name) {
  for (auto s : kAllStrategies) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown strategy '" + std::string(name) + "'");
}

std::string to_string(UnitStrategy strategy) {
  switch (strategy) {
    case UnitStrategy::three_sweep: return "three-sweep";
    case UnitStrategy::two_sweep_lbfs: return "two-sweep-lbfs";
    case UnitStrategy::two_sweep_mcs: return "two-sweep-mcs";
    case UnitStrategy::bfs_start: return "bfs-start";
  }
  return "?";
}

RecognitionOutcome recognize_interval(const Graph& g, std::optional<Vertex> start) {
  if (start && !g.contains(*start)) throw Error("start vertex " + std::to_string(*start) + " out of range");
  RecognitionOutcome out;
  const Vertex n = g.vertex_count();
  if (n == 0) {
    out.yes = true;
    out.representation = IntervalRepresentation();
    out.clique_path = CliquePath(0, {});
    return out;
  }
  // One LBFS over the whole graph finishes each component before it takes
  // the smallest unvisited id, so components come out as blocks of tau. The
  // later sweeps never look at ids, only positions, so they run on the graph
  // renumbered by tau, where every block is an id range and neighbors sit
  // close together in memory.
  auto tau = lbfs(g, start).ordering;
  const auto h = renumber(g, tau);
  std::vector<Vertex> tau_plus, pi, pi_plus;
  tau_plus.reserve(tau.size());
  pi.reserve(tau.size());
  pi_plus.reserve(tau.size());
  for (Vertex first = 1; first <= n;) {
    // a vertex with no earlier neighbor opens the next block
    Vertex last = first;
    while (last < n && h.degree(last + 1) > 0 && h.neighbors(last + 1).front() <= last) ++last;
    const auto piece = id_range(h, first, last);
    auto tp = detail::lbfs_plus_unchecked(piece, identity(last - first + 1)).ordering;
    auto p = detail::lbfs_up_unchecked(piece, tp).ordering;
    auto pp = detail::lbfs_plus_unchecked(piece, p).ordering;
    for (Vertex v : tp.vertices()) tau_plus.push_back(v + first - 1);
    for (Vertex v : p.vertices()) pi.push_back(v + first - 1);
    for (Vertex v : pp.vertices()) pi_plus.push_back(v + first - 1);
    first = last + 1;
  }
  const auto back = tau.vertices();
  const VertexOrdering final_h(std::move(pi_plus));
  out.sweeps = {{"tau", tau},
                {"tau_plus", relabel(VertexOrdering(std::move(tau_plus)), back)},
                {"pi", relabel(VertexOrdering(std::move(pi)), back)},
                {"pi_plus", relabel(final_h, back)}};
  out.ordering = out.sweeps.back().second;
  // Concatenating interval orderings of components gives one of the whole
  // graph; h is isomorphic to g, so positions carry over unchanged.
  if (auto bad = verify_interval_ordering(h, final_h)) {
    bad->vi = back[bad->vi - 1];
    bad->vj = back[bad->vj - 1];
    bad->vk = back[bad->vk - 1];
    out.violation = bad;
    return out;
  }
  out.yes = true;
  const auto reach_h = detail::reach_positions(h, final_h);
  std::vector<std::size_t> reach(reach_h.size(), 0);
  for (Vertex i = 1; i <= n; ++i) reach[back[i - 1]] = reach_h[i];
  out.representation = detail::representation_from_reach(out.ordering, reach);
  out.clique_path = detail::clique_path_from_reach(out.ordering, reach);
  return out;
}

RecognitionOutcome recognize_unit_interval(const Graph& g, UnitStrategy strategy) {
  RecognitionOutcome out;
  out.sweeps = run_per_component(g, unit_pipeline(strategy));
  if (!out.sweeps.empty()) out.ordering = out.sweeps.back().second;
  if (auto bad = verify_umbrella_ordering(g, out.ordering)) {
    out.violation = bad->triple;
    out.side = bad->side;
    return out;
  }
  out.yes = true;
  const auto reach = detail::reach_positions(g, out.ordering);
  out.representation = detail::unit_representation_from_reach(out.ordering, reach);
  out.clique_path = detail::clique_path_from_reach(out.ordering, reach);
  return out;
}

}  // namespace ivg
