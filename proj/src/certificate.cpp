#include "ivg/certificate.hpp"

#include <charconv>
#include <numeric>

namespace ivg {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto read = [&](std::string_view part) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(read(text));
  std::int64_t den = read(text.substr(slash + 1));
  if (den == 0) throw ParseError("malformed rational '" + std::string(text) + "'");
  return Rational(read(text.substr(0, slash)), den);
}

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].right < intervals_[i].left) {
      throw Error("interval of vertex " + std::to_string(i + 1) + " has left > right");
    }
  }
}

CliquePath::CliquePath(Vertex n, std::vector<std::vector<Vertex>> cliques)
    : n_(n), cliques_(std::move(cliques)) {
  lp_.assign(static_cast<std::size_t>(n) + 1, 0);
  rp_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t idx = 0; idx < cliques_.size(); ++idx) {
    for (Vertex v : cliques_[idx]) {
      if (v < 1 || v > n) throw Error("clique path names vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (lp_[v] == 0) lp_[v] = idx + 1;
      rp_[v] = idx + 1;
    }
  }
}

CliquePath CliquePath::reversed() const {
  return CliquePath(n_, {cliques_.rbegin(), cliques_.rend()});
}

}  // namespace ivg
