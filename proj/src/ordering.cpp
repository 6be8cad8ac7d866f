#include "ivg/ordering.hpp"

#include <algorithm>

namespace ivg {

VertexOrdering::VertexOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
  Vertex max_id = 0;
  for (Vertex v : order_) {
    if (v < 1) throw Error("ordering contains invalid vertex id " + std::to_string(v));
    max_id = std::max(max_id, v);
  }
  position_.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto& slot = position_[order_[i]];
    if (slot != 0) throw Error("ordering repeats vertex " + std::to_string(order_[i]));
    slot = static_cast<std::uint32_t>(i + 1);
  }
}

VertexOrdering VertexOrdering::reversed() const {
  std::vector<Vertex> rev(order_.rbegin(), order_.rend());
  return VertexOrdering(std::move(rev));
}

bool VertexOrdering::is_permutation_of(const Graph& g) const {
  if (order_.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  return std::all_of(order_.begin(), order_.end(), [&](Vertex v) { return g.contains(v); });
}

VertexOrdering restrict(const VertexOrdering& sigma, std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  for (Vertex v : members) {
    if (!sigma.contains(v)) throw Error("vertex " + std::to_string(v) + " is not in the ordering");
  }
  std::sort(members.begin(), members.end(),
            [&](Vertex a, Vertex b) { return sigma.position(a) < sigma.position(b); });
  return VertexOrdering(std::move(members));
}

VertexOrdering relabel(const VertexOrdering& local, std::span<const Vertex> to_original) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local.vertices()) out.push_back(to_original[v - 1]);
  return VertexOrdering(std::move(out));
}

Graph renumber(const Graph& g, const VertexOrdering& sigma) {
  const Vertex n = g.vertex_count();
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 2, 0);
  for (Vertex i = 1; i <= n; ++i) offsets[i + 1] = offsets[i] + static_cast<std::size_t>(g.degree(sigma.at(i)));
  std::vector<Vertex> targets(offsets[n + 1]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  // new ids are handed out in increasing order, so each list fills sorted
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex w : g.neighbors(sigma.at(i))) targets[fill[sigma.position(w)]++] = i;
  }
  return Graph::from_sorted_csr(n, std::move(offsets), std::move(targets));
}

}  // namespace ivg
