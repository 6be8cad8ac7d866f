#include "ivg/generate.hpp"

#include <random>

#include "ivg/fixtures.hpp"

namespace ivg {

namespace {

// Portable draws on top of mt19937_64; the std distributions differ between
// standard libraries, which would break same-seed reproducibility.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Edges among intervals [start[v], start[v] + width[v]] on integer points
// 0..points-1, each pair found once from the interval that starts first.
EdgeList bucket_edges(const std::vector<std::int64_t>& start, const std::vector<std::int64_t>& width,
                      std::int64_t points) {
  const auto n = static_cast<Vertex>(start.size() - 1);
  std::vector<std::size_t> head(static_cast<std::size_t>(points) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++head[start[v] + 1];
  for (std::int64_t x = 0; x < points; ++x) head[x + 1] += head[x];
  std::vector<Vertex> bucket(static_cast<std::size_t>(n));
  std::vector<std::size_t> fill(head.begin(), head.end() - 1);
  for (Vertex v = 1; v <= n; ++v) bucket[fill[start[v]]++] = v;

  EdgeList edges;
  for (Vertex v = 1; v <= n; ++v) {
    const std::int64_t stop = std::min(points - 1, start[v] + width[v]);
    for (std::int64_t x = start[v]; x <= stop; ++x) {
      for (std::size_t t = head[x]; t < head[x + 1]; ++t) {
        const Vertex u = bucket[t];
        if (x > start[v] || u > v) edges.emplace_back(v, u);
      }
    }
  }
  return edges;
}

}  // namespace

Generated random_interval(Vertex n, std::uint64_t seed, std::int64_t max_length) {
  if (n < 0 || max_length < 0) throw Error("random-interval: n and max length must be non-negative");
  std::mt19937_64 rng(seed);
  const auto sz = static_cast<std::size_t>(n) + 1;
  std::vector<std::int64_t> left(sz, 0), length(sz, 0);
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    left[v] = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(n)));
    length[v] = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(max_length) + 1));
    intervals.push_back({Rational(left[v]), Rational(left[v] + length[v])});
  }
  auto edges = bucket_edges(left, length, std::max<std::int64_t>(n, 1));
  return {Graph::from_edges(n, edges), IntervalRepresentation(std::move(intervals))};
}

Generated random_unit(Vertex n, std::uint64_t seed, std::int64_t den, std::int64_t span) {
  if (n < 0 || den < 1) throw Error("random-unit: n must be non-negative and the denominator positive");
  if (span <= 0) span = std::max<std::int64_t>(1, n / 4);
  std::mt19937_64 rng(seed);
  const auto sz = static_cast<std::size_t>(n) + 1;
  const std::int64_t points = span * den;
  std::vector<std::int64_t> start(sz, 0), width(sz, den);
  std::vector<Interval> intervals;
  intervals.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    start[v] = static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(points)));
    intervals.push_back({Rational(start[v], den), Rational(start[v] + den, den)});
  }
  auto edges = bucket_edges(start, width, points);
  return {Graph::from_edges(n, edges), IntervalRepresentation(std::move(intervals))};
}

Graph gnp(Vertex n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0 || p > 1) throw Error("gnp: need n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (unit_real(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Generated generate(std::string_view kind, Vertex n, double p, std::uint64_t seed, std::string_view name) {
  if (kind == "random-interval") return random_interval(n, seed);
  if (kind == "random-unit") return random_unit(n, seed);
  if (kind == "gnp") return {gnp(n, p, seed), std::nullopt};
  if (kind == "named") {
    Generated out{fixture_graph(name), std::nullopt};
    if (name == "gstar") out.witness = gstar_representation();
    if (name == "fig2") out.witness = fig2_representation();
    return out;
  }
  throw Error("unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace ivg
