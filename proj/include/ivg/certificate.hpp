#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// "num/den"; the denominator is always written, "5/1" included.
  std::string to_string() const;
  /// Accepts "a/b" or a plain integer "a".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    auto lhs = static_cast<__int128>(a.num_) * b.den_;
    auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct Interval {
  Rational left;
  Rational right;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One closed interval per vertex 1..n; zero-length intervals are allowed.
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  /// intervals[v - 1] is I(v). Throws Error when some left > right.
  explicit IntervalRepresentation(std::vector<Interval> intervals);

  Vertex size() const { return static_cast<Vertex>(intervals_.size()); }
  const Interval& at(Vertex v) const { return intervals_[v - 1]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Ordered maximal cliques K_1..K_l, each sorted by id, with the first and last
/// index of every vertex. lp/rp are 1-based clique indices, 0 if v is absent.
class CliquePath {
 public:
  CliquePath() = default;
  /// lp/rp are derived as first/last occurrence; consecutiveness is not
  /// enforced here (see verify_clique_path).
  CliquePath(Vertex n, std::vector<std::vector<Vertex>> cliques);

  Vertex vertex_count() const { return n_; }
  std::size_t length() const { return cliques_.size(); }
  const std::vector<Vertex>& clique(std::size_t index) const { return cliques_[index - 1]; }
  const std::vector<std::vector<Vertex>>& cliques() const { return cliques_; }
  std::size_t lp(Vertex v) const { return lp_[v]; }
  std::size_t rp(Vertex v) const { return rp_[v]; }

  CliquePath reversed() const;

  friend bool operator==(const CliquePath& a, const CliquePath& b) {
    return a.n_ == b.n_ && a.cliques_ == b.cliques_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::vector<Vertex>> cliques_;
  std::vector<std::size_t> lp_;
  std::vector<std::size_t> rp_;
};

/// Positions i < j < k of an ordering with v_i v_k an edge and v_i v_j not.
struct OrderingViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Vertex vi = 0;
  Vertex vj = 0;
  Vertex vk = 0;
  friend bool operator==(const OrderingViolation&, const OrderingViolation&) = default;
};

/// Failure of a structural check; `witness` names the vertices involved.
struct Defect {
  std::string message;
  std::vector<Vertex> witness;
};

}  // namespace ivg
