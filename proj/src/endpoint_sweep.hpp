#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "ivg/certificate.hpp"

namespace ivg::detail {

// Calls visit(a, b) once per intersecting pair, a opened before b, by an
// endpoint sweep. Lefts sort before rights at equal coordinates, so touching
// closed intervals intersect. Stops early when visit returns false.
template <class Visit>
bool for_each_intersection(const IntervalRepresentation& rep, Visit&& visit) {
  struct Event {
    Rational at;
    int kind;  // 0 = left, 1 = right
    Vertex v;
  };
  const Vertex n = rep.size();
  std::vector<Event> events;
  events.reserve(2 * static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) {
    events.push_back({rep.at(v).left, 0, v});
    events.push_back({rep.at(v).right, 1, v});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (auto c = a.at <=> b.at; c != 0) return c < 0;
    return std::tie(a.kind, a.v) < std::tie(b.kind, b.v);
  });

  const auto sz = static_cast<std::size_t>(n) + 1;
  std::vector<Vertex> prev(sz, 0), next(sz, 0);
  Vertex head = 0;
  for (const auto& e : events) {
    if (e.kind == 1) {
      if (prev[e.v] != 0) next[prev[e.v]] = next[e.v];
      else head = next[e.v];
      if (next[e.v] != 0) prev[next[e.v]] = prev[e.v];
      continue;
    }
    for (Vertex a = head; a != 0; a = next[a]) {
      if (!visit(a, e.v)) return false;
    }
    prev[e.v] = 0;
    next[e.v] = head;
    if (head != 0) prev[head] = e.v;
    head = e.v;
  }
  return true;
}

}  // namespace ivg::detail
