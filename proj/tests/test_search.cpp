#include <doctest.h>

#include <random>

#include "ivg/fixtures.hpp"
#include "ivg/generate.hpp"
#include "ivg/search.hpp"
#include "support.hpp"

using namespace ivg;
using namespace ivg::testing;

namespace {

// Straight from the definitions: labels are explicit position sets compared
// lexicographically, every selection rule is evaluated by scanning.
struct Naive {
  const Graph& g;
  std::vector<std::vector<std::size_t>> label;  // ascending positions
  std::vector<char> visited;
  std::vector<Vertex> order;

  explicit Naive(const Graph& graph)
      : g(graph), label(static_cast<std::size_t>(g.vertex_count()) + 1),
        visited(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {}

  void visit(Vertex v) {
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!visited[w]) label[w].push_back(order.size());
  }
};

bool label_greater(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t)
    if (a[t] != b[t]) return a[t] < b[t];
  return a.size() > b.size();
}

std::vector<Vertex> naive_head(const Naive& s) {
  std::vector<Vertex> best;
  for (Vertex v = 1; v <= s.g.vertex_count(); ++v) {
    if (s.visited[v]) continue;
    if (best.empty() || label_greater(s.label[v], s.label[best.front()])) best = {v};
    else if (s.label[v] == s.label[best.front()]) best.push_back(v);
  }
  return best;
}

template <class Pick>
VertexOrdering naive_sweep(const Graph& g, Pick pick) {
  Naive s(g);
  for (Vertex i = 1; i <= g.vertex_count(); ++i) s.visit(pick(s, naive_head(s)));
  return VertexOrdering(s.order);
}

VertexOrdering naive_lbfs(const Graph& g) {
  return naive_sweep(g, [](const Naive&, const std::vector<Vertex>& S) { return S.front(); });
}

VertexOrdering naive_lbfs_plus(const Graph& g, const VertexOrdering& sigma) {
  return naive_sweep(g, [&](const Naive&, const std::vector<Vertex>& S) {
    return *std::max_element(S.begin(), S.end(), [&](Vertex a, Vertex b) { return sigma.before(a, b); });
  });
}

VertexOrdering naive_lbfs_delta(const Graph& g, Vertex u) {
  return naive_sweep(g, [&](const Naive& s, const std::vector<Vertex>& S) {
    if (s.order.empty()) return u;
    return *std::min_element(S.begin(), S.end(), [&](Vertex a, Vertex b) {
      return std::make_pair(g.degree(a), a) < std::make_pair(g.degree(b), b);
    });
  });
}

VertexOrdering naive_lbfs_up(const Graph& g, const VertexOrdering& tp) {
  return naive_sweep(g, [&](const Naive& s, const std::vector<Vertex>& S) {
    auto cmp = [&](Vertex a, Vertex b) { return tp.before(a, b); };
    const Vertex vp = *std::min_element(S.begin(), S.end(), cmp);
    const Vertex vq = *std::max_element(S.begin(), S.end(), cmp);
    for (Vertex w : g.neighbors(vp))
      if (!s.visited[w] && tp.before(w, vp)) return vp;
    auto r = [&](Vertex v) {
      std::size_t best = tp.position(v);
      for (Vertex w : g.neighbors(v)) best = std::max(best, tp.position(w));
      return std::make_pair(best, tp.position(v));
    };
    Vertex pick = 0;
    for (Vertex v : S)
      if (r(v).first > tp.position(vq) && (pick == 0 || r(v) > r(pick))) pick = v;
    return pick != 0 ? pick : vq;
  });
}

VertexOrdering naive_mcs_delta(const Graph& g, Vertex u) {
  const Vertex n = g.vertex_count();
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  for (Vertex i = 1; i <= n; ++i) {
    Vertex v = u;
    if (i > 1) {
      v = 0;
      for (Vertex w = 1; w <= n; ++w) {
        if (visited[w]) continue;
        if (v == 0 || std::make_tuple(-count[w], g.degree(w), w) < std::make_tuple(-count[v], g.degree(v), v)) v = w;
      }
    }
    visited[v] = 1;
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) ++count[w];
  }
  return VertexOrdering(order);
}

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out;
  for (const auto& name : fixture_names()) out.push_back(fixture_graph(name));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto n = static_cast<Vertex>(1 + seed % 14);
    out.push_back(gnp(n, 0.15 + 0.1 * static_cast<double>(seed % 7), seed));
    out.push_back(random_interval(n, seed, static_cast<std::int64_t>(seed % 5)).graph);
    out.push_back(random_unit(n, seed).graph);
  }
  return out;
}

}  // namespace

TEST_CASE("lbfs small cases") {
  CHECK(lbfs(complete(3)).ordering == ord({1, 2, 3}));
  CHECK(lbfs(fixture_graph("bull")).ordering == ord({1, 2, 3, 5, 4}));
  CHECK(lbfs(fixture_graph("bull"), 4).ordering.first() == 4);
  CHECK(lbfs(Graph()).ordering.empty());
  CHECK_THROWS_AS(lbfs(complete(3), 4), Error);
  // isolated vertices are picked up by the smallest id rule
  CHECK(lbfs(make(4, {{2, 4}})).ordering == ord({1, 2, 4, 3}));
}

TEST_CASE("lbfs+ on the fig2 graph") {
  auto g = fixture_graph("fig2");
  CHECK(lbfs_plus(g, ord({1, 2, 3, 4, 5, 6, 7, 8})).ordering == ord({8, 2, 7, 6, 5, 4, 3, 1}));
  CHECK(lbfs_plus(g, ord({1, 2, 5, 4, 6, 3, 7, 8})).ordering == ord({8, 2, 7, 6, 4, 5, 3, 1}));
}

TEST_CASE("lbfs+ on G* reproduces the printed orderings") {
  auto g = fixture_graph("gstar");
  CHECK(lbfs_plus(g, gstar_ordering("sigma1")).ordering == gstar_ordering("sigma1_plus"));
  CHECK(lbfs_plus(g, gstar_ordering("sigma2")).ordering == gstar_ordering("sigma2_plus"));
  CHECK(lbfs_plus(g, gstar_ordering("sigma3")).ordering == gstar_ordering("sigma3_plus"));
  CHECK(lbfs_plus(g, gstar_ordering("sigma_prime")).ordering == gstar_ordering("sigma1"));
}

TEST_CASE("lbfs+ on complete graphs reverses") {
  std::mt19937_64 rng(2);
  for (Vertex n = 1; n <= 8; ++n) {
    auto sigma = random_permutation(n, rng);
    CHECK(lbfs_plus(complete(n), sigma).ordering == sigma.reversed());
  }
}

TEST_CASE("lbfs+ rejects non-LBFS input") {
  auto g = fixture_graph("p3");
  CHECK_THROWS_AS(lbfs_plus(g, ord({1, 3, 2})), InvalidOrdering);
  try {
    lbfs_plus(g, ord({1, 3, 2}));
  } catch (const InvalidOrdering& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(lbfs_plus(g, ord({1, 2})), Error);
}

TEST_CASE("lbfs-up small cases") {
  CHECK(lbfs_up(complete(3), ord({1, 2, 3})).ordering == ord({3, 2, 1}));
  CHECK(lbfs_up(fixture_graph("bull"), ord({4, 3, 5, 2, 1})).ordering == ord({1, 2, 3, 5, 4}));
}

TEST_CASE("lbfs-up on G* from sigma1+ gives sigma3") {
  CHECK(lbfs_up(fixture_graph("gstar"), gstar_ordering("sigma1_plus")).ordering == gstar_ordering("sigma3"));
}

TEST_CASE("lbfs-delta small cases") {
  CHECK(lbfs_delta(fixture_graph("bull"), 1).ordering == ord({1, 2, 5, 3, 4}));
  CHECK(lbfs_delta(complete(4), 2).ordering == ord({2, 1, 3, 4}));
  CHECK_THROWS_AS(lbfs_delta(complete(4), 5), Error);
}

TEST_CASE("mcs-delta small cases") {
  CHECK(mcs_delta(complete(3), 3) == ord({3, 1, 2}));
  CHECK(mcs_delta(fixture_graph("bull"), 1) == ord({1, 2, 5, 3, 4}));
  CHECK_THROWS_AS(mcs_delta(complete(3), 0), Error);
}

TEST_CASE("bfs end vertex") {
  CHECK(bfs_min_degree_end_vertex(fixture_graph("bull")) == 4);
  CHECK(bfs_min_degree_end_vertex(fixture_graph("p3")) == 3);
  CHECK(bfs_min_degree_end_vertex(complete(5)) == 2);
  CHECK_THROWS_AS(bfs_min_degree_end_vertex(make(3, {{1, 2}})), Error);
}

TEST_CASE("lbfs ordering check") {
  CHECK(is_lbfs_ordering(fixture_graph("fig2"), ord({1, 2, 3, 4, 5, 6, 7, 8})).ok);
  auto p3 = is_lbfs_ordering(fixture_graph("p3"), ord({1, 3, 2}));
  CHECK_FALSE(p3.ok);
  CHECK(p3.violation_position == 2);
  auto g = fixture_graph("gstar");
  for (auto name : {"sigma1", "sigma1_plus", "sigma2", "sigma2_plus", "sigma3", "sigma3_plus", "sigma_prime"})
    CHECK(is_lbfs_ordering(g, gstar_ordering(name)).ok);
}

TEST_CASE("sweeps agree with the definitional versions") {
  for (const auto& g : sample_graphs()) {
    const Vertex n = g.vertex_count();
    auto tau = lbfs(g).ordering;
    CHECK(tau == naive_lbfs(g));
    auto tau_plus = lbfs_plus(g, tau).ordering;
    CHECK(tau_plus == naive_lbfs_plus(g, tau));
    CHECK(lbfs_up(g, tau_plus).ordering == naive_lbfs_up(g, tau_plus));
    CHECK(lbfs_up(g, tau).ordering == naive_lbfs_up(g, tau));
    for (Vertex u = 1; u <= n; u += 3) {
      CHECK(lbfs_delta(g, u).ordering == naive_lbfs_delta(g, u));
      CHECK(mcs_delta(g, u) == naive_mcs_delta(g, u));
    }
  }
}

TEST_CASE("sweep outputs are LBFS orderings with consistent snapshots") {
  for (const auto& g : sample_graphs()) {
    const Vertex n = g.vertex_count();
    if (n == 0) continue;
    auto tau = lbfs(g);
    std::vector<Sweep> sweeps{tau, lbfs_plus(g, tau.ordering), lbfs_up(g, lbfs_plus(g, tau.ordering).ordering),
                              lbfs_delta(g, tau.ordering.last())};
    for (const auto& s : sweeps) {
      auto check = is_lbfs_ordering(g, s.ordering);
      REQUIRE(check.ok);
      CHECK(check.trace.snapshot_end == s.trace.snapshot_end);
      if (is_connected(g)) CHECK(s.trace.snapshot_end.front() == static_cast<std::uint32_t>(n));
      for (std::size_t i = 1; i <= s.ordering.size(); ++i) {
        auto want = earlier_neighbors(g, s.ordering, s.ordering.at(i));
        auto snap = s.trace.snapshot(s.ordering, i);
        for (Vertex u : snap) {
          // visited neighbors of u at time i
          std::vector<Vertex> got;
          for (Vertex w : g.neighbors(u))
            if (s.ordering.position(w) < i) got.push_back(w);
          std::sort(got.begin(), got.end(), [&](Vertex a, Vertex b) { return s.ordering.before(a, b); });
          CHECK(got == want);
        }
      }
    }
  }
}

TEST_CASE("connected first snapshot is the whole vertex set") {
  auto g = fixture_graph("gstar");
  auto s = lbfs(g);
  CHECK(s.trace.snapshot(s.ordering, 1).size() == 22);
}
