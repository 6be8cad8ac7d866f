#include "ivg/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ivg {

namespace {

// Bucket the directed arcs by source, then transpose once: iterating sources in
// increasing order leaves every target list sorted without a comparison sort.
void sorted_csr_from_arcs(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::size_t>& offsets, std::vector<Vertex>& targets) {
  std::vector<std::size_t> count(static_cast<std::size_t>(n) + 2, 0);
  for (auto [u, v] : edges) {
    ++count[u];
    ++count[v];
  }
  std::vector<std::size_t> raw_off(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex v = 1; v <= n; ++v) raw_off[v + 1] = raw_off[v] + count[v];
  std::vector<Vertex> raw(raw_off[n + 1]);
  std::vector<std::size_t> fill(raw_off.begin(), raw_off.end());
  for (auto [u, v] : edges) {
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  offsets.assign(raw_off.begin(), raw_off.end());
  targets.assign(raw.size(), 0);
  std::copy(raw_off.begin(), raw_off.end(), fill.begin());
  for (Vertex u = 1; u <= n; ++u) {
    for (std::size_t e = raw_off[u]; e < raw_off[u + 1]; ++e) targets[fill[raw[e]]++] = u;
  }

  // Drop parallel arcs; lists are sorted so duplicates are adjacent.
  std::size_t out = 0;
  std::size_t begin = offsets[1];
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t end = offsets[v + 1];
    offsets[v] = out;
    Vertex prev = 0;
    for (std::size_t e = begin; e < end; ++e) {
      if (targets[e] != prev) targets[out++] = targets[e];
      prev = targets[e];
    }
    begin = end;
  }
  offsets[n + 1] = out;
  targets.resize(out);
  targets.shrink_to_fit();
}

}  // namespace

Graph Graph::from_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw ParseError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       "): vertex id out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) + "): self-loop");
  }
  Graph g;
  g.n_ = n;
  sorted_csr_from_arcs(n, edges, g.offsets_, g.targets_);
  return g;
}

Graph Graph::from_sorted_csr(Vertex n, std::vector<std::size_t> offsets,
                             std::vector<Vertex> targets) {
  if (offsets.size() != static_cast<std::size_t>(n) + 2 || offsets[n + 1] != targets.size()) {
    throw Error("malformed CSR");
  }
  Graph g;
  g.n_ = n;
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const auto k = static_cast<Vertex>(vertices.size());
  std::vector<Vertex> local(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex i = 0; i < k; ++i) local[vertices[i]] = i + 1;

  EdgeList arcs;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex w : neighbors(vertices[i])) {
      Vertex lw = local[w];
      if (lw > i + 1) arcs.emplace_back(i + 1, lw);
    }
  }
  Graph g;
  g.n_ = k;
  sorted_csr_from_arcs(k, arcs, g.offsets_, g.targets_);
  return g;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const Vertex n = g.vertex_count();
  std::vector<std::vector<Vertex>> parts;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    queue.clear();
    queue.push_back(s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    parts.push_back(queue);
  }
  return parts;
}

std::vector<Graph> component_subgraphs(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) local[part[i]] = static_cast<Vertex>(i + 1);
  }
  // Relabelling inside a part is monotone, so the global lists stay sorted.
  std::vector<Graph> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    const auto k = static_cast<Vertex>(part.size());
    std::vector<std::size_t> offsets(static_cast<std::size_t>(k) + 2, 0);
    std::vector<Vertex> targets;
    for (Vertex i = 1; i <= k; ++i) {
      auto nb = g.neighbors(part[i - 1]);
      offsets[i + 1] = offsets[i] + nb.size();
      for (Vertex w : nb) targets.push_back(local[w]);
    }
    out.push_back(Graph::from_sorted_csr(k, std::move(offsets), std::move(targets)));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

}  // namespace ivg
