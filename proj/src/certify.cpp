#include "ivg/certify.hpp"

#include <algorithm>

#include "certify_detail.hpp"
#include "endpoint_sweep.hpp"

namespace ivg {

namespace {

void require_interval_ordering(const Graph& g, const VertexOrdering& sigma) {
  if (auto bad = verify_interval_ordering(g, sigma)) {
    throw CertificateError("not an interval ordering: positions " + std::to_string(bad->i) + " < " +
                               std::to_string(bad->j) + " < " + std::to_string(bad->k),
                           bad);
  }
}

}  // namespace

namespace detail {

std::vector<std::size_t> reach_positions(const Graph& g, const VertexOrdering& sigma) {
  const Vertex n = g.vertex_count();
  std::vector<std::size_t> reach(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t last = sigma.position(v);
    for (Vertex w : g.neighbors(v)) last = std::max(last, sigma.position(w));
    reach[v] = last;
  }
  return reach;
}

IntervalRepresentation representation_from_reach(const VertexOrdering& sigma, const std::vector<std::size_t>& reach) {
  const auto n = static_cast<Vertex>(sigma.size());
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    out.push_back({Rational(static_cast<std::int64_t>(sigma.position(v))), Rational(static_cast<std::int64_t>(reach[v]))});
  }
  return IntervalRepresentation(std::move(out));
}

IntervalRepresentation unit_representation_from_reach(const VertexOrdering& sigma,
                                                      const std::vector<std::size_t>& reach) {
  const auto n = static_cast<std::int64_t>(sigma.size());
  std::vector<Interval> out;
  out.reserve(sigma.size());
  for (Vertex v = 1; v <= n; ++v) {
    const auto pos = static_cast<std::int64_t>(sigma.position(v));
    const auto last = static_cast<std::int64_t>(reach[v]);
    out.push_back({Rational(pos), Rational(last * n + pos, n)});
  }
  return IntervalRepresentation(std::move(out));
}

CliquePath clique_path_from_reach(const VertexOrdering& sigma, const std::vector<std::size_t>& reach) {
  const auto n = static_cast<Vertex>(sigma.size());
  const auto sz = static_cast<std::size_t>(n) + 1;
  // Every point 1..n starts an interval, so the stab set at p is maximal
  // exactly when some interval also ends at p.
  std::vector<std::size_t> index(sz + 1, 0);
  std::vector<char> maximal(sz + 1, 0);
  for (Vertex v = 1; v <= n; ++v) maximal[reach[v]] = 1;
  // index[p]: clique number of the first maximal point >= p.
  std::size_t count = 0;
  for (std::size_t p = 1; p <= static_cast<std::size_t>(n); ++p) count += maximal[p];
  std::size_t next = count + 1;
  for (std::size_t p = static_cast<std::size_t>(n); p >= 1; --p) {
    if (maximal[p]) --next;
    index[p] = next;
  }
  std::vector<std::vector<Vertex>> cliques(count);
  for (Vertex v = 1; v <= n; ++v) {
    for (std::size_t c = index[sigma.position(v)]; c <= index[reach[v]]; ++c) cliques[c - 1].push_back(v);
  }
  return CliquePath(n, std::move(cliques));
}

}  // namespace detail

IntervalRepresentation ordering_to_representation(const Graph& g, const VertexOrdering& sigma) {
  require_interval_ordering(g, sigma);
  return detail::representation_from_reach(sigma, detail::reach_positions(g, sigma));
}

CliquePath ordering_to_clique_path(const Graph& g, const VertexOrdering& sigma) {
  require_interval_ordering(g, sigma);
  return detail::clique_path_from_reach(sigma, detail::reach_positions(g, sigma));
}

IntervalRepresentation umbrella_to_unit_representation(const Graph& g, const VertexOrdering& sigma) {
  if (auto bad = verify_umbrella_ordering(g, sigma)) {
    throw CertificateError(std::string("not an umbrella ordering (") +
                               (bad->side == Side::forward ? "forward" : "reversed") + " side)",
                           bad->triple);
  }
  return detail::unit_representation_from_reach(sigma, detail::reach_positions(g, sigma));
}

IntervalRepresentation clique_path_to_representation(const CliquePath& cp) {
  const Vertex n = cp.vertex_count();
  std::vector<std::size_t> occurrences(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& k : cp.cliques()) {
    for (Vertex v : k) ++occurrences[v];
  }
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    if (cp.lp(v) == 0) throw CertificateError("vertex " + std::to_string(v) + " is in no clique");
    if (occurrences[v] != cp.rp(v) - cp.lp(v) + 1) {
      throw CertificateError("cliques containing " + std::to_string(v) + " are not consecutive");
    }
    out.push_back({Rational(static_cast<std::int64_t>(cp.lp(v))), Rational(static_cast<std::int64_t>(cp.rp(v)))});
  }
  return IntervalRepresentation(std::move(out));
}

Graph representation_to_graph(const IntervalRepresentation& rep) {
  EdgeList edges;
  detail::for_each_intersection(rep, [&](Vertex a, Vertex b) {
    edges.emplace_back(a, b);
    return true;
  });
  return Graph::from_edges(rep.size(), edges);
}

}  // namespace ivg
