#include "ivg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_set>

namespace ivg {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << (v - 1); }

void guard(const Graph& g, Vertex max_n, Vertex hard_limit, const char* who) {
  const Vertex n = g.vertex_count();
  if (n > max_n) {
    throw GuardError(std::string(who) + ": n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_n));
  }
  if (n > hard_limit) {
    throw GuardError(std::string(who) + ": n = " + std::to_string(n) + " exceeds the hard limit " +
                     std::to_string(hard_limit));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> nb(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) nb[v] |= bit(w);
  }
  return nb;
}

Mask full_mask(Vertex n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Prefix search for interval orderings. A placed vertex stays open while it
// is adjacent to everything placed after it; a new vertex may only touch
// open vertices.
class IntervalSearch {
 public:
  explicit IntervalSearch(const Graph& g) : n_(g.vertex_count()), nb_(neighbor_masks(g)) {}

  bool run() { return extend(0, 0); }

 private:
  bool extend(Mask placed, Mask open) {
    if (placed == full_mask(n_)) return true;
    const Mask key = placed << 32 | open;
    if (dead_.count(key)) return false;
    for (Vertex x = 1; x <= n_; ++x) {
      if (placed & bit(x)) continue;
      if ((nb_[x] & placed & ~open) != 0) continue;
      if (extend(placed | bit(x), (open & nb_[x]) | bit(x))) return true;
    }
    dead_.insert(key);
    return false;
  }

  Vertex n_;
  std::vector<Mask> nb_;
  std::unordered_set<Mask> dead_;
};

// Prefix search for umbrella orderings. The open vertices form a suffix of
// the prefix and a clique; a new vertex's placed neighbors must be a suffix of
// the open run.
class UmbrellaSearch {
 public:
  explicit UmbrellaSearch(const Graph& g) : n_(g.vertex_count()), nb_(neighbor_masks(g)) {}

  bool run() { return extend(0, {}); }

 private:
  bool extend(Mask placed, const std::vector<Vertex>& open) {
    if (placed == full_mask(n_)) return true;
    Mask key = placed | static_cast<Mask>(open.size()) << 12;
    for (std::size_t t = 0; t < open.size(); ++t) key |= static_cast<Mask>(open[t] - 1) << (16 + 4 * t);
    if (dead_.count(key)) return false;
    for (Vertex x = 1; x <= n_; ++x) {
      if (placed & bit(x)) continue;
      const Mask touched = nb_[x] & placed;
      const auto t = static_cast<std::size_t>(std::popcount(touched));
      if (t > open.size()) continue;
      Mask tail = 0;
      for (std::size_t s = open.size() - t; s < open.size(); ++s) tail |= bit(open[s]);
      if (tail != touched) continue;
      std::vector<Vertex> next(open.end() - static_cast<std::ptrdiff_t>(t), open.end());
      next.push_back(x);
      if (extend(placed | bit(x), next)) return true;
    }
    dead_.insert(key);
    return false;
  }

  Vertex n_;
  std::vector<Mask> nb_;
  std::unordered_set<Mask> dead_;
};

// Explicit-label LBFS branching. label[v] holds the positions of visited
// neighbors; a beats b when the smallest position in exactly one of them
// belongs to a.
class LbfsEnumerator {
 public:
  explicit LbfsEnumerator(const Graph& g)
      : n_(g.vertex_count()), nb_(neighbor_masks(g)), label_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::vector<VertexOrdering> run() {
    std::vector<Vertex> prefix;
    walk(prefix, 0);
    return std::move(found_);
  }

 private:
  static bool beats(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
  }

  void walk(std::vector<Vertex>& prefix, Mask visited) {
    if (prefix.size() == static_cast<std::size_t>(n_)) {
      found_.emplace_back(prefix);
      return;
    }
    Mask best = 0;
    bool any = false;
    for (Vertex v = 1; v <= n_; ++v) {
      if (visited & bit(v)) continue;
      if (!any || beats(label_[v], best)) best = label_[v];
      any = true;
    }
    const Mask pos_bit = Mask{1} << prefix.size();
    for (Vertex v = 1; v <= n_; ++v) {
      if ((visited & bit(v)) || label_[v] != best) continue;
      prefix.push_back(v);
      for (Vertex w = 1; w <= n_; ++w) {
        if (nb_[v] & bit(w)) label_[w] |= pos_bit;
      }
      walk(prefix, visited | bit(v));
      for (Vertex w = 1; w <= n_; ++w) {
        if (nb_[v] & bit(w)) label_[w] &= ~pos_bit;
      }
      prefix.pop_back();
    }
  }

  Vertex n_;
  std::vector<Mask> nb_;
  std::vector<Mask> label_;
  std::vector<VertexOrdering> found_;
};

// End vertices reachable from an ordered partition of the unvisited vertices
// into label classes. Vertices with equal labels stay interchangeable, so the
// class sequence alone decides the future.
class EndVertexSearch {
 public:
  explicit EndVertexSearch(const Graph& g) : nb_(neighbor_masks(g)) {}

  Mask run(Vertex n) { return n == 0 ? 0 : reach({full_mask(n)}); }

 private:
  Mask reach(const std::vector<Mask>& classes) {
    Mask all = 0;
    for (Mask c : classes) all |= c;
    if (std::popcount(all) == 1) return all;
    if (auto it = memo_.find(classes); it != memo_.end()) return it->second;
    Mask ends = 0;
    for (Mask pick = classes.front(); pick != 0; pick &= pick - 1) {
      const Vertex v = std::countr_zero(pick) + 1;
      std::vector<Mask> next;
      next.reserve(classes.size() + 1);
      for (Mask c : classes) {
        c &= ~bit(v);
        if (c & nb_[v]) next.push_back(c & nb_[v]);
        if (c & ~nb_[v]) next.push_back(c & ~nb_[v]);
      }
      ends |= reach(next);
    }
    memo_.emplace(classes, ends);
    return ends;
  }

  std::vector<Mask> nb_;
  std::map<std::vector<Mask>, Mask> memo_;
};

}  // namespace

bool brute_force_interval(const Graph& g, Vertex max_n) {
  guard(g, max_n, 32, "brute_force_interval");
  return IntervalSearch(g).run();
}

bool brute_force_umbrella(const Graph& g, Vertex max_n) {
  guard(g, max_n, 12, "brute_force_umbrella");
  return UmbrellaSearch(g).run();
}

std::vector<VertexOrdering> enumerate_lbfs(const Graph& g, Vertex max_n) {
  guard(g, max_n, 64, "enumerate_lbfs");
  if (g.vertex_count() == 0) return {VertexOrdering()};
  return LbfsEnumerator(g).run();
}

std::vector<Vertex> enumerate_end_vertices(const Graph& g, Vertex max_n) {
  guard(g, max_n, 64, "enumerate_end_vertices");
  std::vector<Vertex> out;
  for (Mask ends = EndVertexSearch(g).run(g.vertex_count()); ends != 0; ends &= ends - 1) {
    out.push_back(std::countr_zero(ends) + 1);
  }
  return out;
}

StructureReport structure(const Graph& g, std::span<const Vertex> subset) {
  const auto sz = static_cast<std::size_t>(g.vertex_count()) + 1;
  std::vector<char> inside(sz, 0);
  for (Vertex v : subset) inside[v] = 1;
  std::vector<std::size_t> hits(sz, 0);
  StructureReport report;
  report.is_clique = true;
  for (Vertex s : subset) {
    std::size_t internal = 0;
    for (Vertex w : g.neighbors(s)) {
      if (inside[w]) ++internal;
      else ++hits[w];
    }
    if (internal + 1 != subset.size()) report.is_clique = false;
  }
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    if (!inside[x] && hits[x] > 0 && hits[x] < subset.size()) report.splitters.push_back(x);
  }
  report.is_module = report.splitters.empty();
  return report;
}

std::vector<Vertex> exposed_vertices(const Graph& g, const VertexOrdering& sigma, std::span<const Vertex> subset) {
  std::size_t end = 0;
  for (Vertex v : subset) end = std::max(end, sigma.position(v));
  std::vector<Vertex> out;
  for (Vertex v : subset) {
    const auto nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return sigma.position(w) > end; })) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<AnchorViolation> check_well_anchored(const Graph& g, const VertexOrdering& pi, const SweepTrace& trace,
                                                   Vertex max_n) {
  const Vertex n = g.vertex_count();
  if (!pi.is_permutation_of(g) || trace.snapshot_end.size() != static_cast<std::size_t>(n)) {
    throw Error("check_well_anchored: ordering and trace do not match the graph");
  }
  std::vector<std::size_t> last_neighbor(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex w : g.neighbors(v)) last_neighbor[v] = std::max(last_neighbor[v], pi.position(w));
  }
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
    auto snapshot = trace.snapshot(pi, i);
    if (snapshot.size() == 1) continue;
    const std::size_t end = trace.snapshot_end[i - 1];
    std::vector<Vertex> exposed;
    for (Vertex v : snapshot) {
      if (last_neighbor[v] > end) exposed.push_back(v);
    }
    const Vertex first = pi.at(i);
    AnchorViolation bad{i, {snapshot.begin(), snapshot.end()}, first, {}};
    if (!exposed.empty()) {
      if (std::find(exposed.begin(), exposed.end(), first) == exposed.end()) {
        std::sort(exposed.begin(), exposed.end());
        bad.exposed = std::move(exposed);
        return bad;
      }
      continue;
    }
    // Every vertex of a clique ends some LBFS ordering of it.
    if (structure(g, snapshot).is_clique) continue;
    if (static_cast<Vertex>(snapshot.size()) > max_n) {
      throw GuardError("check_well_anchored: snapshot at position " + std::to_string(i) + " has " +
                       std::to_string(snapshot.size()) + " vertices, limit " + std::to_string(max_n));
    }
    // The snapshot is listed in pi order, so `first` becomes local vertex 1.
    auto ends = enumerate_end_vertices(g.induced(snapshot), max_n);
    if (ends.empty() || ends.front() != 1) return bad;
  }
  return std::nullopt;
}

bool is_simplicial(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a) {
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (!g.adjacent(nb[a], nb[b])) return false;
    }
  }
  return true;
}

}  // namespace ivg
