#include "ivg/fixtures.hpp"

#include <map>

#include "ivg/certify.hpp"

namespace ivg {

namespace {

IntervalRepresentation integer_intervals(const std::vector<std::pair<int, int>>& spans) {
  std::vector<Interval> out;
  for (auto [l, r] : spans) out.push_back({Rational(l), Rational(r)});
  return IntervalRepresentation(std::move(out));
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"fig2", "bull", "claw", "gstar", "c4", "p3", "subdivided-claw"};
  return names;
}

Graph fixture_graph(std::string_view name) {
  if (name == "fig2") {
    const EdgeList edges{{1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}};
    return Graph::from_edges(8, edges);
  }
  if (name == "bull") {
    const EdgeList edges{{1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 5}};
    return Graph::from_edges(5, edges);
  }
  if (name == "claw") {
    const EdgeList edges{{1, 2}, {1, 3}, {1, 4}};
    return Graph::from_edges(4, edges);
  }
  if (name == "gstar") return representation_to_graph(gstar_representation());
  if (name == "c4") {
    const EdgeList edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    return Graph::from_edges(4, edges);
  }
  if (name == "p3") {
    const EdgeList edges{{1, 2}, {2, 3}};
    return Graph::from_edges(3, edges);
  }
  if (name == "subdivided-claw") {
    // center 1, middles 2..4, leaves 5..7
    const EdgeList edges{{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}};
    return Graph::from_edges(7, edges);
  }
  throw Error("unknown fixture '" + std::string(name) + "'");
}

IntervalRepresentation fig2_representation() {
  return integer_intervals({{1, 1}, {1, 5}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {5, 5}});
}

IntervalRepresentation gstar_representation() {
  return integer_intervals({{1, 1},  {1, 14},  {2, 2},   {2, 16},  {3, 3},   {3, 4},   {4, 5},   {4, 14},
                            {5, 12}, {6, 6},   {6, 7},   {7, 11},  {7, 9},   {8, 8},   {9, 10},  {10, 10},
                            {11, 12}, {12, 13}, {13, 13}, {14, 15}, {15, 15}, {16, 16}});
}

CliquePath gstar_clique_path() {
  auto rep = gstar_representation();
  std::vector<std::vector<Vertex>> cliques(16);
  for (Vertex v = 1; v <= rep.size(); ++v) {
    for (auto p = rep.at(v).left.num(); p <= rep.at(v).right.num(); ++p) cliques[p - 1].push_back(v);
  }
  return CliquePath(rep.size(), std::move(cliques));
}

VertexOrdering gstar_ordering(std::string_view name) {
  static const std::map<std::string, std::vector<Vertex>, std::less<>> table{
      {"sigma1", {1, 2, 20, 8, 4, 19, 18, 17, 9, 12, 16, 15, 13, 11, 14, 10, 7, 6, 5, 3, 21, 22}},
      {"sigma1_plus", {22, 4, 21, 20, 8, 2, 6, 7, 9, 10, 11, 13, 12, 14, 15, 16, 17, 18, 19, 5, 3, 1}},
      {"sigma2", {1, 2, 3, 4, 8, 20, 15, 16, 12, 9, 13, 11, 14, 17, 10, 18, 7, 19, 6, 5, 21, 22}},
      {"sigma2_plus", {22, 4, 21, 20, 8, 2, 6, 7, 9, 18, 17, 12, 14, 13, 11, 15, 16, 10, 19, 5, 3, 1}},
      {"sigma3", {1, 2, 4, 20, 8, 6, 7, 9, 18, 17, 12, 11, 13, 15, 14, 16, 10, 19, 5, 3, 21, 22}},
      {"sigma3_plus", {22, 4, 21, 20, 8, 2, 19, 18, 17, 9, 12, 16, 15, 13, 14, 11, 10, 7, 6, 5, 3, 1}},
      {"sigma_prime", {22, 4, 3, 2, 5, 6, 7, 8, 9, 18, 17, 12, 14, 13, 11, 15, 16, 10, 19, 20, 21, 1}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error("unknown G* ordering '" + std::string(name) + "'");
  return VertexOrdering(it->second);
}

std::vector<Vertex> gstar_s_star() { return {6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19}; }

}  // namespace ivg
