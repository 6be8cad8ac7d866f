#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ivg/certify.hpp"
#include "ivg/fixtures.hpp"
#include "ivg/generate.hpp"
#include "ivg/oracle.hpp"
#include "ivg/recognize.hpp"
#include "ivg/search.hpp"
#include "ivg/verify.hpp"
#include "support.hpp"

namespace ivg::props {

using testing::is_clique;
using testing::ord;

namespace {

std::string describe(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.vertex_count() << " E={";
  for (auto [u, v] : g.edges()) s << u << '-' << v << ' ';
  s << '}';
  return s.str();
}

std::string describe(const VertexOrdering& sigma) {
  std::ostringstream s;
  s << '<';
  for (auto v : sigma.vertices()) s << v << ' ';
  s << '>';
  return s.str();
}

void expect(Report& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) r.failures.push_back(what);
}

// Connected pieces of g as graphs on 1..k.
std::vector<Graph> pieces(const Graph& g) {
  auto parts = components(g);
  return component_subgraphs(g, parts);
}

// An oracle guard large enough for the fixtures.
Vertex guard(const Graph& g) { return std::max<Vertex>(g.vertex_count(), kDefaultOracleLimit); }

bool simplicial_in(const Graph& g, Vertex v, const std::vector<bool>& in) {
  std::vector<Vertex> nb;
  for (auto u : g.neighbors(v))
    if (in[u]) nb.push_back(u);
  return is_clique(g, nb);
}

// Each vertex's earlier neighbors form a clique, i.e. the reversal is a
// perfect elimination ordering.
bool reverse_is_peo(const Graph& g, const VertexOrdering& sigma) {
  for (auto v : sigma.vertices())
    if (!is_clique(g, earlier_neighbors(g, sigma, v))) return false;
  return true;
}

bool true_twins(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) return false;
  std::vector<Vertex> a(g.neighbors(u).begin(), g.neighbors(u).end());
  std::vector<Vertex> b(g.neighbors(v).begin(), g.neighbors(v).end());
  a.push_back(u);
  b.push_back(v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<VertexOrdering> umbrella_orderings_of(const Graph& g) {
  std::vector<VertexOrdering> out;
  for (auto strategy : kAllStrategies) {
    auto r = recognize_unit_interval(g, strategy);
    if (r.yes) out.push_back(r.ordering);
  }
  const Vertex end = lbfs(g).ordering.last();
  out.push_back(lbfs_delta(g, end).ordering);
  out.push_back(mcs_delta(g, end));
  const std::size_t k = out.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(out[i].reversed());
  return out;
}

}  // namespace

std::vector<Graph> interval_population(std::size_t random) {
  std::vector<Graph> out;
  for (auto name : {"fig2", "bull", "claw", "gstar", "p3"}) out.push_back(fixture_graph(name));
  std::mt19937_64 rng(20201);
  for (std::size_t t = 0; t < random; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
    out.push_back(random_interval(n, rng(), 1 + static_cast<std::int64_t>(rng() % 5)).graph);
  }
  return out;
}

std::vector<Graph> unit_population(std::size_t count) {
  std::vector<Graph> out{fixture_graph("bull"), fixture_graph("p3")};
  std::mt19937_64 rng(20202);
  while (out.size() < count) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
    auto g = random_unit(n, rng(), 8, 1 + static_cast<std::int64_t>(rng() % 3)).graph;
    for (auto& h : pieces(g))
      if (out.size() < count) out.push_back(std::move(h));
  }
  return out;
}

Report perfect_elimination(const std::vector<Graph>& graphs) {
  Report r{"perfect elimination", 0, {}};
  std::mt19937_64 rng(31);
  for (auto& g : graphs) {
    const Vertex n = g.vertex_count();
    if (n == 0) continue;
    std::vector<VertexOrdering> sweeps;
    for (Vertex v = 1; v <= n; ++v) sweeps.push_back(lbfs(g, v).ordering);
    auto tp = lbfs_plus(g, sweeps.front()).ordering;
    auto pi = lbfs_up(g, tp).ordering;
    sweeps.push_back(tp);
    sweeps.push_back(pi);
    sweeps.push_back(lbfs_plus(g, pi).ordering);
    for (auto& s : sweeps) {
      expect(r, is_simplicial(g, s.last()), "last vertex not simplicial: " + describe(g) + " " + describe(s));
      expect(r, reverse_is_peo(g, s), "reversal is not a PEO: " + describe(g) + " " + describe(s));
    }
    // the last vertex of sigma|S is simplicial in G[S]
    for (int t = 0; t < 100; ++t) {
      auto& s = sweeps[rng() % sweeps.size()];
      std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
      Vertex last = 0;
      for (auto v : s.vertices())
        if (rng() % 2) in[v] = true, last = v;
      if (last == 0) continue;
      expect(r, simplicial_in(g, last, in), "last of a restriction not simplicial: " + describe(g));
    }
  }
  return r;
}

Report lbfs_plus_flips_end_vertices(const std::vector<Graph>& graphs) {
  Report r{"lbfs+ flips end vertices", 0, {}};
  for (auto& g : graphs) {
    for (auto& h : pieces(g)) {
      if (h.vertex_count() > 8 || h.vertex_count() < 2) continue;
      auto ends = enumerate_end_vertices(h, 8);
      auto is_end = [&](Vertex v) { return std::binary_search(ends.begin(), ends.end(), v); };
      for (auto& sigma : enumerate_lbfs(h, 8)) {
        auto plus = lbfs_plus(h, sigma).ordering;
        expect(r, is_end(plus.last()), "lbfs+ ends at a non-end vertex: " + describe(h) + " " + describe(sigma));
        if (is_end(sigma.first()))
          expect(r, plus.last() == sigma.first(),
                 "lbfs+ does not flip the end vertex: " + describe(h) + " " + describe(sigma));
      }
    }
  }
  auto fig2 = fixture_graph("fig2");
  expect(r, lbfs_plus(fig2, ord({1, 2, 3, 4, 5, 6, 7, 8})).ordering == ord({8, 2, 7, 6, 5, 4, 3, 1}),
         "fig2 lbfs+ of the identity");
  expect(r, lbfs_plus(fig2, ord({1, 2, 5, 4, 6, 3, 7, 8})).ordering == ord({8, 2, 7, 6, 4, 5, 3, 1}),
         "fig2 lbfs+ of <1,2,5,4,6,3,7,8>");
  return r;
}

Report umbrella_reversal(const std::vector<Graph>& unit_graphs) {
  Report r{"umbrella reversal", 0, {}};
  std::mt19937_64 rng(37);
  for (auto& g : unit_graphs) {
    const Vertex n = g.vertex_count();
    std::vector<VertexOrdering> cands{recognize_unit_interval(g).ordering};
    for (int t = 0; t < 5; ++t) cands.push_back(testing::random_permutation(n, rng));
    for (auto& s : cands) {
      const bool fwd = !verify_umbrella_ordering(g, s);
      const bool rev = !verify_umbrella_ordering(g, s.reversed());
      expect(r, fwd == rev, "umbrella status changes under reversal: " + describe(g) + " " + describe(s));
      expect(r, fwd == testing::naive_is_umbrella(g, s), "umbrella check disagrees with the scan: " + describe(g));
    }
    expect(r, !verify_umbrella_ordering(g, cands.front()), "no umbrella ordering found: " + describe(g));
  }
  return r;
}

Report complete_graph_reversal() {
  Report r{"complete graph lbfs+ reversal", 0, {}};
  for (Vertex n = 1; n <= 8; ++n) {
    auto k = testing::complete(n);
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      VertexOrdering s(p);
      expect(r, lbfs_plus(k, s).ordering == s.reversed(), "K" + std::to_string(n) + " " + describe(s));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return r;
}

Report unit_clique_path_uniqueness(const std::vector<Graph>& unit_graphs) {
  Report r{"unit clique path uniqueness", 0, {}};
  std::size_t exhaustive = 0;
  for (auto& g : unit_graphs) {
    const Vertex n = g.vertex_count();
    auto orders = umbrella_orderings_of(g);
    if (n <= 7 && exhaustive < 150) {
      ++exhaustive;
      std::vector<Vertex> p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 1);
      do {
        VertexOrdering s(p);
        if (!verify_umbrella_ordering(g, s)) orders.push_back(s);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    std::optional<CliquePath> first;
    for (auto& s : orders) {
      if (verify_umbrella_ordering(g, s)) {
        expect(r, false, "not an umbrella ordering: " + describe(g) + " " + describe(s));
        continue;
      }
      auto cp = ordering_to_clique_path(g, s);
      if (!first) first = cp;
      expect(r, cp == *first || cp == first->reversed(), "second clique path: " + describe(g) + " " + describe(s));
      // non-twins are sorted by (lp, rp)
      for (std::size_t i = 1; i <= s.size(); ++i)
        for (std::size_t j = i + 1; j <= s.size(); ++j) {
          auto u = s.at(i), v = s.at(j);
          if (true_twins(g, u, v)) continue;
          ++r.cases;
          if (std::pair(cp.lp(u), cp.rp(u)) >= std::pair(cp.lp(v), cp.rp(v)))
            r.failures.push_back("(lp, rp) out of order: " + describe(g) + " " + describe(s));
        }
    }
  }
  return r;
}

Report fig2_end_vertices() {
  Report r{"fig2 end vertices", 0, {}};
  auto g = fixture_graph("fig2");
  auto ends = enumerate_end_vertices(g, 8);
  for (Vertex v : {4, 5, 6})
    expect(r, !std::binary_search(ends.begin(), ends.end(), v), "vertex " + std::to_string(v) + " ends an LBFS");
  std::set<Vertex> lasts;
  for (auto& s : enumerate_lbfs(g, 8)) lasts.insert(s.last());
  expect(r, std::vector<Vertex>(lasts.begin(), lasts.end()) == ends, "end vertices disagree with enumeration");
  expect(r, is_simplicial(g, 5), "vertex 5 is simplicial");
  return r;
}

Report gstar_splitters() {
  Report r{"gstar splitters", 0, {}};
  auto g = fixture_graph("gstar");
  auto s_star = gstar_s_star();
  expect(r, structure(g, s_star).splitters == std::vector<Vertex>{5}, "S* splitters");

  auto sigma2 = gstar_ordering("sigma2");
  auto check = is_lbfs_ordering(g, sigma2);
  expect(r, check.ok, "sigma2 is an LBFS ordering");
  if (check.ok) {
    auto snap = check.trace.snapshot(sigma2, sigma2.position(20));
    expect(r, structure(g, snap).splitters == std::vector<Vertex>{5, 21}, "sigma2 snapshot of 20");
  }

  std::vector<Vertex> sorted_star = s_star;
  std::sort(sorted_star.begin(), sorted_star.end());
  for (auto name : {"sigma1", "sigma1_plus", "sigma2", "sigma2_plus", "sigma3", "sigma3_plus"}) {
    auto s = gstar_ordering(name);
    auto c = is_lbfs_ordering(g, s);
    expect(r, c.ok, std::string(name) + " is an LBFS ordering");
    if (!c.ok) continue;
    bool found = false;
    for (std::size_t p = 1; p <= s.size() && !found; ++p) {
      auto snap = c.trace.snapshot(s, p);
      std::vector<Vertex> set(snap.begin(), snap.end());
      std::sort(set.begin(), set.end());
      if (set != sorted_star) continue;
      found = true;
      expect(r, s.position(5) > p + snap.size() - 1, std::string(name) + ": splitter 5 precedes S*");
    }
    expect(r, found, std::string(name) + ": S* is not a snapshot");
  }
  auto sub = g.induced(s_star);
  auto ends = enumerate_end_vertices(sub, 22);
  // induced relabels S* by rank
  expect(r, ends.size() == 2 && sorted_star[ends[0] - 1] == 6 && sorted_star[ends[1] - 1] == 19,
         "G[S*] end vertices are 6 and 19");
  return r;
}

Report gstar_unique_clique_path() {
  Report r{"gstar clique path", 0, {}};
  auto g = fixture_graph("gstar");
  auto cp = gstar_clique_path();
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto out = recognize_interval(g, v);
    expect(r, out.yes && (*out.clique_path == cp || *out.clique_path == cp.reversed()),
           "start " + std::to_string(v));
  }
  return r;
}

Report no_end_vertex_is_a_bull_apex(const std::vector<Graph>& graphs) {
  Report r{"end vertices are not bull apexes", 0, {}};
  for (auto& g : graphs) {
    for (auto& h : pieces(g)) {
      for (auto z : enumerate_end_vertices(h, guard(h))) {
        bool bull = false;
        for (auto a : h.neighbors(z))
          for (auto b : h.neighbors(z)) {
            if (a >= b || !h.adjacent(a, b)) continue;
            for (auto c : h.neighbors(a)) {
              if (c == b || c == z || h.adjacent(c, b) || h.adjacent(c, z)) continue;
              for (auto d : h.neighbors(b))
                if (d != a && d != z && d != c && !h.adjacent(d, a) && !h.adjacent(d, z) && !h.adjacent(d, c))
                  bull = true;
            }
          }
        expect(r, !bull, "end vertex " + std::to_string(z) + " is a bull apex: " + describe(h));
      }
    }
  }
  return r;
}

Report lbfs_up_well_anchored(const std::vector<Graph>& graphs) {
  Report r{"lbfs-up well anchored", 0, {}};
  for (auto& g : graphs)
    for (auto& h : pieces(g)) {
      auto tp = lbfs_plus(h, lbfs(h).ordering).ordering;
      auto pi = lbfs_up(h, tp);
      auto bad = check_well_anchored(h, pi.ordering, pi.trace, guard(h));
      expect(r, !bad, "not well anchored: " + describe(h) + " " + describe(pi.ordering));
    }
  return r;
}

Report interval_orderings_are_lbfs(const std::vector<Graph>& graphs) {
  Report r{"interval orderings are LBFS orderings", 0, {}};
  std::mt19937_64 rng(41);
  for (auto& g : graphs) {
    std::vector<VertexOrdering> cands{recognize_interval(g).ordering};
    if (g.vertex_count() <= 7) {
      std::vector<Vertex> p(static_cast<std::size_t>(g.vertex_count()));
      std::iota(p.begin(), p.end(), 1);
      do cands.emplace_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    } else {
      for (int t = 0; t < 200; ++t) cands.push_back(testing::random_permutation(g.vertex_count(), rng));
    }
    for (auto& s : cands)
      if (!verify_interval_ordering(g, s))
        expect(r, is_lbfs_ordering(g, s).ok, "interval ordering is not an LBFS: " + describe(g) + " " + describe(s));
  }
  return r;
}

Report unit_lbfs_visits_cliques_in_order(const std::vector<Graph>& unit_graphs) {
  Report r{"unit lbfs visits cliques in order", 0, {}};
  for (auto& g : unit_graphs) {
    auto out = recognize_unit_interval(g);
    if (!out.yes) {
      expect(r, false, "rejected: " + describe(g));
      continue;
    }
    for (auto z : enumerate_end_vertices(g, guard(g))) {
      auto cp = *out.clique_path;
      if (cp.lp(z) != 1) cp = cp.reversed();
      expect(r, cp.lp(z) == 1 && cp.rp(z) == 1, "end vertex " + std::to_string(z) + " not in an end clique");
      auto s = lbfs(g, z).ordering;
      for (std::size_t i = 1; i < cp.length(); ++i) {
        std::size_t last = 0, first = s.size() + 1;
        for (auto v : cp.clique(i)) last = std::max(last, s.position(v));
        for (auto v : cp.clique(i + 1))
          if (cp.lp(v) == i + 1) first = std::min(first, s.position(v));
        expect(r, last < first, "clique " + std::to_string(i + 1) + " entered early: " + describe(g) + " " + describe(s));
      }
    }
  }
  return r;
}

std::vector<Report> all_suites() {
  auto iv = interval_population();
  auto unit = unit_population();
  return {perfect_elimination(iv),
          lbfs_plus_flips_end_vertices(iv),
          umbrella_reversal(unit),
          complete_graph_reversal(),
          unit_clique_path_uniqueness(unit),
          fig2_end_vertices(),
          gstar_splitters(),
          gstar_unique_clique_path(),
          no_end_vertex_is_a_bull_apex(iv),
          lbfs_up_well_anchored(iv),
          interval_orderings_are_lbfs(iv),
          unit_lbfs_visits_cliques_in_order(unit)};
}

}  // namespace ivg::props
