#include "ivg/verify.hpp"

#include <algorithm>
#include "endpoint_sweep.hpp"
#include "ivg/search.hpp"

namespace ivg {

namespace {

std::string name(Vertex v) { return std::to_string(v); }

// Flat form of descending_position_lists: list of position i lives in
// targets[offsets[i], offsets[i + 1]).
struct PositionLists {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
};

PositionLists position_lists(const Graph& g, const VertexOrdering& sigma) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  PositionLists out;
  out.offsets.assign(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    out.offsets[i + 1] = out.offsets[i] + static_cast<std::size_t>(g.degree(sigma.at(i)));
  }
  out.targets.resize(out.offsets[n + 1]);
  std::vector<std::size_t> fill(out.offsets.begin(), out.offsets.end());
  for (std::size_t i = n; i >= 1; --i) {
    for (Vertex w : g.neighbors(sigma.at(i))) out.targets[fill[sigma.position(w)]++] = static_cast<std::uint32_t>(i);
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> descending_position_lists(const Graph& g, const VertexOrdering& sigma) {
  if (!sigma.is_permutation_of(g)) throw Error("ordering is not a permutation of the vertices");
  auto flat = position_lists(g, sigma);
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::size_t>> lists(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    lists[i].assign(flat.targets.begin() + static_cast<std::ptrdiff_t>(flat.offsets[i]),
                    flat.targets.begin() + static_cast<std::ptrdiff_t>(flat.offsets[i + 1]));
  }
  return lists;
}

std::optional<OrderingViolation> verify_interval_ordering(const Graph& g, const VertexOrdering& sigma) {
  if (!sigma.is_permutation_of(g)) throw Error("ordering is not a permutation of the vertices");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  auto lists = position_lists(g, sigma);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t begin = lists.offsets[i];
    const std::size_t end = lists.offsets[i + 1];
    // Later neighbors form a prefix; walk it from its smallest entry upward.
    std::size_t stop = begin;
    while (stop < end && lists.targets[stop] > i) ++stop;
    std::size_t expect = i + 1;
    for (std::size_t t = stop; t-- > begin;) {
      const std::size_t k = lists.targets[t];
      if (k != expect) return OrderingViolation{i, expect, k, sigma.at(i), sigma.at(expect), sigma.at(k)};
      ++expect;
    }
  }
  return std::nullopt;
}

std::optional<UmbrellaViolation> verify_umbrella_ordering(const Graph& g, const VertexOrdering& sigma) {
  if (auto bad = verify_interval_ordering(g, sigma)) return UmbrellaViolation{*bad, Side::forward};
  if (auto bad = verify_interval_ordering(g, sigma.reversed())) return UmbrellaViolation{*bad, Side::reversed};
  return std::nullopt;
}

std::optional<Defect> verify_representation(const Graph& g, const IntervalRepresentation& rep, bool unit_mode) {
  const Vertex n = g.vertex_count();
  if (rep.size() != n) {
    return Defect{"representation has " + std::to_string(rep.size()) + " intervals for " + std::to_string(n) +
                      " vertices",
                  {}};
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (rep.at(v).right < rep.at(v).left) return Defect{"interval of vertex " + name(v) + " has left > right", {v}};
  }

  std::optional<Defect> found;
  std::int64_t seen = 0;
  detail::for_each_intersection(rep, [&](Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) {
      found = Defect{"intervals of " + name(a) + " and " + name(b) + " intersect but the vertices are not adjacent",
                     {std::min(a, b), std::max(a, b)}};
      return false;
    }
    // Every reported pair is a distinct edge, so this stays within O(m).
    ++seen;
    return true;
  });
  if (found) return found;
  if (seen < g.edge_count()) {
    for (auto [u, v] : g.edges()) {
      const auto& a = rep.at(u);
      const auto& b = rep.at(v);
      if (a.right < b.left || b.right < a.left) {
        return Defect{"vertices " + name(u) + " and " + name(v) + " are adjacent but their intervals are disjoint",
                      {u, v}};
      }
    }
  }

  if (unit_mode) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) order[v - 1] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      const auto& x = rep.at(a);
      const auto& y = rep.at(b);
      if (x.left != y.left) return x.left < y.left;
      if (x.right != y.right) return y.right < x.right;
      return a < b;
    });
    // widest: vertex with the largest right among groups of identical
    // intervals strictly before the current one.
    Vertex widest = 0;
    Vertex group_best = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
      Vertex b = order[t];
      if (t > 0 && !(rep.at(order[t - 1]) == rep.at(b))) {
        if (widest == 0 || rep.at(widest).right < rep.at(group_best).right) widest = group_best;
        group_best = 0;
      }
      if (widest != 0 && rep.at(b).right <= rep.at(widest).right) {
        return Defect{"interval of " + name(widest) + " properly contains the interval of " + name(b), {widest, b}};
      }
      if (group_best == 0) group_best = b;
    }
  }
  return std::nullopt;
}

std::size_t chordal_maximal_clique_count(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) return 0;
  auto sigma = lbfs(g).ordering;
  const auto sz = static_cast<std::size_t>(n) + 1;
  // In the reverse of sigma, X(v) = {v} + earlier sigma-neighbors; parent(v)
  // is the latest of those neighbors.
  std::vector<std::int32_t> earlier(sz, 0);
  std::vector<Vertex> parent(sz, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (sigma.before(w, v)) {
        ++earlier[v];
        if (parent[v] == 0 || sigma.before(parent[v], w)) parent[v] = w;
      }
    }
  }
  std::vector<char> absorbed(sz, 0);
  for (Vertex u = 1; u <= n; ++u) {
    if (parent[u] != 0 && earlier[u] == earlier[parent[u]] + 1) absorbed[parent[u]] = 1;
  }
  return static_cast<std::size_t>(std::count(absorbed.begin() + 1, absorbed.end(), 0));
}

std::optional<Defect> verify_clique_path(const Graph& g, const CliquePath& cp) {
  const Vertex n = g.vertex_count();
  if (cp.vertex_count() != n) {
    return Defect{"clique path is over " + std::to_string(cp.vertex_count()) + " vertices, graph has " +
                      std::to_string(n),
                  {}};
  }
  const std::size_t len = cp.length();
  if (len > static_cast<std::size_t>(n)) return Defect{"clique path is longer than the vertex count", {}};

  const auto sz = static_cast<std::size_t>(n) + 1;
  std::vector<std::size_t> occurrences(sz, 0);
  for (std::size_t i = 1; i <= len; ++i) {
    const auto& k = cp.clique(i);
    if (k.empty()) return Defect{"clique " + std::to_string(i) + " is empty", {}};
    for (std::size_t t = 0; t < k.size(); ++t) {
      if (t > 0 && k[t - 1] >= k[t]) {
        return Defect{"clique " + std::to_string(i) + " is not sorted or repeats a vertex", {k[t]}};
      }
      ++occurrences[k[t]];
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (cp.lp(v) == 0) return Defect{"vertex " + name(v) + " is in no clique", {v}};
    if (occurrences[v] != cp.rp(v) - cp.lp(v) + 1) {
      return Defect{"cliques containing " + name(v) + " are not consecutive", {v}};
    }
  }

  // With consecutive occurrences two intervals [lp, rp] meet iff the vertices
  // share a clique, so this checks clique-ness and edge coverage at once.
  std::vector<Interval> spans;
  spans.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    spans.push_back({Rational(static_cast<std::int64_t>(cp.lp(v))), Rational(static_cast<std::int64_t>(cp.rp(v)))});
  }
  if (auto bad = verify_representation(g, IntervalRepresentation(std::move(spans)))) {
    const Vertex u = bad->witness[0];
    const Vertex v = bad->witness[1];
    if (g.adjacent(u, v)) return Defect{"edge " + name(u) + "-" + name(v) + " is in no clique", bad->witness};
    return Defect{"a clique holds non-adjacent " + name(u) + " and " + name(v), bad->witness};
  }

  // K_i is maximal (and differs from its neighbors) iff some member starts
  // at i and some member ends at i.
  std::vector<char> starts(len + 1, 0), ends(len + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    starts[cp.lp(v)] = 1;
    ends[cp.rp(v)] = 1;
  }
  for (std::size_t i = 1; i <= len; ++i) {
    if (!starts[i] || !ends[i]) {
      return Defect{"clique " + std::to_string(i) + " is not maximal", cp.clique(i)};
    }
  }

  const std::size_t expected = chordal_maximal_clique_count(g);
  if (expected != len) {
    return Defect{"clique path has " + std::to_string(len) + " cliques, graph has " + std::to_string(expected) +
                      " maximal cliques",
                  {}};
  }
  return std::nullopt;
}

}  // namespace ivg
