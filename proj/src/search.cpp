#include "ivg/search.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ivg/partition.hpp"
#include "search_detail.hpp"

namespace ivg {

namespace {

// Adjacency lists re-sorted by a vertex order: iterating `order` and appending
// each vertex to its neighbors' lists yields every list in that order, O(n + m).
std::vector<Vertex> adjacency_in_order(const Graph& g, std::span<const Vertex> order) {
  auto offsets = g.offsets();
  std::vector<Vertex> out(g.targets().size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end());
  for (Vertex u : order) {
    for (Vertex w : g.neighbors(u)) out[fill[w]++] = u;
  }
  return out;
}

std::span<const Vertex> list_of(const Graph& g, const std::vector<Vertex>& targets, Vertex v) {
  auto offsets = g.offsets();
  return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
}

std::vector<Vertex> identity_order(Vertex n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return order;
}

// Stable counting sort of `order` by key[v] in 0..max_key.
std::vector<Vertex> stable_sort_by_key(std::span<const Vertex> order, const std::vector<std::int32_t>& key,
                                       std::int32_t max_key) {
  std::vector<std::size_t> start(static_cast<std::size_t>(max_key) + 2, 0);
  for (Vertex v : order) ++start[key[v] + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<Vertex> out(order.size());
  for (Vertex v : order) out[start[key[v]]++] = v;
  return out;
}

// Vertices ascending by (degree, id).
std::vector<Vertex> degree_order(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::int32_t> deg(static_cast<std::size_t>(n) + 1, 0);
  std::int32_t max_deg = 0;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  return stable_sort_by_key(identity_order(n), deg, max_deg);
}

void require_permutation(const Graph& g, const VertexOrdering& sigma) {
  if (!sigma.is_permutation_of(g)) {
    throw Error("ordering is not a permutation of the " + std::to_string(g.vertex_count()) + " vertices");
  }
}

void require_lbfs(const Graph& g, const VertexOrdering& sigma, const char* who) {
  auto check = is_lbfs_ordering(g, sigma);
  if (!check.ok) {
    throw InvalidOrdering(std::string(who) + ": input is not an LBFS ordering (position " +
                              std::to_string(check.violation_position) + ")",
                          check.violation_position);
  }
}

}  // namespace

std::vector<Vertex> earlier_neighbors(const Graph& g, const VertexOrdering& order, Vertex v) {
  std::vector<Vertex> out;
  const auto pv = order.position(v);
  for (Vertex w : g.neighbors(v)) {
    if (order.position(w) < pv) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
  return out;
}

Sweep lbfs(const Graph& g, std::optional<Vertex> start) {
  const Vertex n = g.vertex_count();
  if (start && !g.contains(*start)) throw Error("start vertex " + std::to_string(*start) + " out of range");
  auto initial = identity_order(n);
  PartitionRefinement<1> part(n, {initial});
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  SweepTrace trace;
  trace.snapshot_end.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    auto head = part.head();
    trace.snapshot_end.push_back(static_cast<std::uint32_t>(i - 1 + part.size(head)));
    Vertex v = (i == 1 && start) ? *start : part.first(head);
    order.push_back(v);
    part.remove(v);
    part.refine({g.neighbors(v)});
  }
  return {VertexOrdering(std::move(order)), std::move(trace)};
}

Sweep lbfs_plus(const Graph& g, const VertexOrdering& sigma) {
  require_permutation(g, sigma);
  require_lbfs(g, sigma, "lbfs_plus");
  return detail::lbfs_plus_unchecked(g, sigma);
}

Sweep lbfs_up(const Graph& g, const VertexOrdering& tau_plus) {
  require_permutation(g, tau_plus);
  require_lbfs(g, tau_plus, "lbfs_up");
  return detail::lbfs_up_unchecked(g, tau_plus);
}

namespace detail {

Sweep lbfs_plus_unchecked(const Graph& g, const VertexOrdering& sigma) {
  const Vertex n = g.vertex_count();
  // Members stay in sigma order inside every class; the last one is the
  // last vertex of sigma restricted to the snapshot.
  auto by_sigma = adjacency_in_order(g, sigma.vertices());
  PartitionRefinement<1> part(n, {sigma.vertices()});
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  SweepTrace trace;
  trace.snapshot_end.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    auto head = part.head();
    trace.snapshot_end.push_back(static_cast<std::uint32_t>(i - 1 + part.size(head)));
    Vertex v = part.last(head);
    order.push_back(v);
    part.remove(v);
    part.refine({list_of(g, by_sigma, v)});
  }
  return {VertexOrdering(std::move(order)), std::move(trace)};
}

Sweep lbfs_up_unchecked(const Graph& g, const VertexOrdering& tau_plus) {
  const Vertex n = g.vertex_count();
  const auto sz = static_cast<std::size_t>(n) + 1;

  std::vector<std::int32_t> pos(sz, 0);
  for (Vertex v = 1; v <= n; ++v) pos[v] = static_cast<std::int32_t>(tau_plus.position(v));

  // reach[v]: largest tau+ position in N[v]. earlier[v]: neighbors of v that
  // come before v in tau+ and are still unvisited.
  std::vector<std::int32_t> reach(sz, 0);
  std::vector<std::int32_t> earlier(sz, 0);
  for (Vertex v = 1; v <= n; ++v) {
    reach[v] = pos[v];
    for (Vertex w : g.neighbors(v)) {
      reach[v] = std::max(reach[v], pos[w]);
      if (pos[w] < pos[v]) ++earlier[v];
    }
  }

  // View 0 orders members by (reach, tau+ position); view 1 by tau+ position.
  auto by_reach = stable_sort_by_key(tau_plus.vertices(), reach, n);
  auto adj_reach = adjacency_in_order(g, by_reach);
  auto adj_tau = adjacency_in_order(g, tau_plus.vertices());
  PartitionRefinement<2> part(n, {std::span<const Vertex>(by_reach), tau_plus.vertices()});

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  SweepTrace trace;
  trace.snapshot_end.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    auto head = part.head();
    trace.snapshot_end.push_back(static_cast<std::uint32_t>(i - 1 + part.size(head)));
    Vertex vp = part.first(head, 1);
    Vertex v;
    if (earlier[vp] > 0) {
      // v_p still has an unvisited neighbor before it in tau+.
      v = vp;
    } else {
      // Largest (reach, position): a member reaching past v_q if there is
      // one, otherwise v_q itself.
      v = part.last(head, 0);
    }
    order.push_back(v);
    part.remove(v);
    for (Vertex w : g.neighbors(v)) {
      if (!part.visited(w) && pos[w] > pos[v]) --earlier[w];
    }
    part.refine({list_of(g, adj_reach, v), list_of(g, adj_tau, v)});
  }
  return {VertexOrdering(std::move(order)), std::move(trace)};
}

}  // namespace detail

Sweep lbfs_delta(const Graph& g, Vertex u) {
  if (!g.contains(u)) throw Error("start vertex " + std::to_string(u) + " out of range");
  const Vertex n = g.vertex_count();
  auto by_degree = degree_order(g);
  auto adj_degree = adjacency_in_order(g, by_degree);
  PartitionRefinement<1> part(n, {by_degree});
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  SweepTrace trace;
  trace.snapshot_end.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    auto head = part.head();
    trace.snapshot_end.push_back(static_cast<std::uint32_t>(i - 1 + part.size(head)));
    Vertex v = i == 1 ? u : part.first(head);
    order.push_back(v);
    part.remove(v);
    part.refine({list_of(g, adj_degree, v)});
  }
  return {VertexOrdering(std::move(order)), std::move(trace)};
}

VertexOrdering mcs_delta(const Graph& g, Vertex u) {
  if (!g.contains(u)) throw Error("start vertex " + std::to_string(u) + " out of range");
  const Vertex n = g.vertex_count();
  const auto sz = static_cast<std::size_t>(n) + 1;
  auto by_degree = degree_order(g);
  std::vector<std::int32_t> rank(sz, 0);
  for (std::size_t r = 0; r < by_degree.size(); ++r) rank[by_degree[r]] = static_cast<std::int32_t>(r);

  // Max-heap on (visited-neighbor count, -rank) with lazy deletion of stale entries.
  using Entry = std::pair<std::int32_t, std::int32_t>;
  std::priority_queue<Entry> heap;
  std::vector<std::int32_t> count(sz, 0);
  std::vector<char> visited(sz, 0);
  for (Vertex v = 1; v <= n; ++v) heap.emplace(0, -rank[v]);

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    Vertex v = 0;
    if (i == 1) {
      v = u;
    } else {
      while (true) {
        auto [c, neg_rank] = heap.top();
        heap.pop();
        Vertex w = by_degree[-neg_rank];
        if (!visited[w] && count[w] == c) {
          v = w;
          break;
        }
      }
    }
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!visited[w]) heap.emplace(++count[w], -rank[w]);
    }
  }
  return VertexOrdering(std::move(order));
}

Vertex bfs_min_degree_end_vertex(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) throw Error("empty graph has no end vertex");
  std::vector<std::int32_t> level(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Vertex> queue{1};
  level[1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n)) throw Error("bfs end vertex: graph is disconnected");
  const std::int32_t last = level[queue.back()];
  Vertex best = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (level[v] != last) continue;
    if (best == 0 || g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

LbfsCheck is_lbfs_ordering(const Graph& g, const VertexOrdering& sigma) {
  require_permutation(g, sigma);
  const Vertex n = g.vertex_count();
  auto initial = identity_order(n);
  PartitionRefinement<1> part(n, {initial});
  LbfsCheck result;
  result.trace.snapshot_end.reserve(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    Vertex v = sigma.at(static_cast<std::size_t>(i));
    auto head = part.head();
    if (part.class_of(v) != head) {
      result.violation_position = static_cast<std::size_t>(i);
      result.trace.snapshot_end.clear();
      return result;
    }
    result.trace.snapshot_end.push_back(static_cast<std::uint32_t>(i - 1 + part.size(head)));
    part.remove(v);
    part.refine({g.neighbors(v)});
  }
  result.ok = true;
  return result;
}

}  // namespace ivg
