#include "ivg/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <vector>

namespace ivg {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != ',') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::int64_t to_int(std::string_view word, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

struct Header {
  std::int64_t n = -1;
  std::int64_t m = 0;
  std::size_t line = 0;
};

void check_header(const Header& h) {
  if (h.n < 0 || h.m < 0) fail(h.line, "negative count in header");
  if (h.n > std::numeric_limits<Vertex>::max() - 2) fail(h.line, "vertex count too large");
}

void add_edge(EdgeList& edges, const Header& h, std::int64_t u, std::int64_t v, std::size_t line_no) {
  if (u < 1 || u > h.n || v < 1 || v > h.n) {
    fail(line_no, "vertex out of range 1.." + std::to_string(h.n) + " in edge " + std::to_string(u) + " " +
                      std::to_string(v));
  }
  if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
  edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

Graph finish(const Header& h, const EdgeList& edges, std::size_t last_line) {
  if (h.n < 0) fail(last_line, "missing header");
  if (static_cast<std::int64_t>(edges.size()) != h.m) {
    fail(last_line, "header declares " + std::to_string(h.m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<Vertex>(h.n), edges);
}

Graph parse_edgelist(std::istream& in) {
  Header h;
  EdgeList edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text(line);
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    auto words = split_words(text);
    if (words.empty()) continue;
    if (words.size() != 2) fail(line_no, "expected two integers");
    if (h.n < 0) {
      h = {to_int(words[0], line_no), to_int(words[1], line_no), line_no};
      check_header(h);
      edges.reserve(static_cast<std::size_t>(std::min<std::int64_t>(h.m, 1 << 24)));
      continue;
    }
    add_edge(edges, h, to_int(words[0], line_no), to_int(words[1], line_no), line_no);
  }
  return finish(h, edges, line_no);
}

Graph parse_dimacs(std::istream& in) {
  Header h;
  EdgeList edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (h.n >= 0) fail(line_no, "second problem line");
      if (words.size() != 4 || words[1] != "edge") fail(line_no, "expected 'p edge n m'");
      h = {to_int(words[2], line_no), to_int(words[3], line_no), line_no};
      check_header(h);
      continue;
    }
    if (words[0] == "e") {
      if (h.n < 0) fail(line_no, "edge before the problem line");
      if (words.size() != 3) fail(line_no, "expected 'e u v'");
      add_edge(edges, h, to_int(words[1], line_no), to_int(words[2], line_no), line_no);
      continue;
    }
    fail(line_no, "unknown line type '" + std::string(words[0]) + "'");
  }
  return finish(h, edges, line_no);
}

Vertex json_vertex(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected a vertex id, got " + j.dump());
  return j.get<Vertex>();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "edgelist") return Format::edgelist;
  if (name == "dimacs") return Format::dimacs;
  throw Error("unknown format '" + std::string(name) + "'");
}

Graph parse_graph(std::istream& in, Format format) {
  return format == Format::edgelist ? parse_edgelist(in) : parse_dimacs(in);
}

Graph read_graph_file(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parse_graph(in, format);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string write_graph(const Graph& g, Format format) {
  std::ostringstream out;
  if (format == Format::edgelist) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  } else {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  }
  return out.str();
}

VertexOrdering parse_ordering(std::string_view text) {
  std::vector<Vertex> order;
  for (auto word : split_words(text)) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw ParseError("ordering: expected a vertex id, got '" + std::string(word) + "'");
    }
    order.push_back(v);
  }
  return VertexOrdering(std::move(order));
}

Json to_json(const VertexOrdering& sigma) {
  Json out = Json::array();
  for (Vertex v : sigma.vertices()) out.push_back(v);
  return out;
}

Json to_json(const IntervalRepresentation& rep) {
  Json out = Json::object();
  for (Vertex v = 1; v <= rep.size(); ++v) {
    out[std::to_string(v)] = Json::array({rep.at(v).left.to_string(), rep.at(v).right.to_string()});
  }
  return out;
}

Json to_json(const CliquePath& cp) {
  Json out = Json::array();
  for (const auto& k : cp.cliques()) out.push_back(k);
  return out;
}

Json to_json(const OrderingViolation& violation) {
  return Json{{"i", violation.i}, {"j", violation.j}, {"k", violation.k}};
}

Json to_json(const RecognitionOutcome& outcome) {
  Json out;
  out["verdict"] = outcome.yes ? "yes" : "no";
  out["ordering"] = to_json(outcome.ordering);
  if (outcome.representation) out["intervals"] = to_json(*outcome.representation);
  if (outcome.clique_path) out["clique_path"] = to_json(*outcome.clique_path);
  if (outcome.violation) {
    out["violation"] = to_json(*outcome.violation);
    if (outcome.side) out["violation"]["side"] = *outcome.side == Side::forward ? "forward" : "reversed";
  }
  Json sweeps = Json::object();
  for (const auto& [name, ordering] : outcome.sweeps) sweeps[name] = to_json(ordering);
  out["sweeps"] = std::move(sweeps);
  return out;
}

VertexOrdering ordering_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("ordering must be an array");
  std::vector<Vertex> order;
  for (const auto& v : j) order.push_back(json_vertex(v));
  return VertexOrdering(std::move(order));
}

IntervalRepresentation representation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("intervals must be an object");
  const auto n = static_cast<Vertex>(j.size());
  std::vector<Interval> intervals(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [key, value] : j.items()) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc() || ptr != key.data() + key.size() || v < 1 || v > n || seen[v]) {
      throw ParseError("intervals: bad vertex key '" + key + "'");
    }
    seen[v] = 1;
    if (!value.is_array() || value.size() != 2 || !value[0].is_string() || !value[1].is_string()) {
      throw ParseError("intervals: vertex " + key + " needs [\"l\", \"r\"]");
    }
    intervals[v - 1] = {Rational::parse(value[0].get<std::string>()), Rational::parse(value[1].get<std::string>())};
  }
  return IntervalRepresentation(std::move(intervals));
}

CliquePath clique_path_from_json(const Json& j, Vertex n) {
  if (!j.is_array()) throw ParseError("clique_path must be an array");
  std::vector<std::vector<Vertex>> cliques;
  for (const auto& k : j) {
    if (!k.is_array()) throw ParseError("clique_path entries must be arrays");
    auto& clique = cliques.emplace_back();
    for (const auto& v : k) clique.push_back(json_vertex(v));
  }
  return CliquePath(n, std::move(cliques));
}

}  // namespace ivg
