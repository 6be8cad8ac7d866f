#include "ivg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ivg/certify.hpp"
#include "ivg/generate.hpp"
#include "ivg/io.hpp"
#include "ivg/oracle.hpp"
#include "ivg/recognize.hpp"
#include "ivg/search.hpp"
#include "ivg/verify.hpp"

namespace ivg {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "edgelist";
  std::string json_path;
  std::string strategy = "three-sweep";
  std::string ordering;
  std::string certificate;
  std::string trace_sweep = "lbfs";
  std::string kind;
  std::string name;
  std::optional<std::uint64_t> seed;
  Vertex n = 100;
  double p = 0.5;
  Vertex start = 0;
  Vertex max_n = kDefaultOracleLimit;
  bool unit = false;
  int min_exp = 16;
  int max_exp = 21;
  int repeat = 1;
};

Graph load(const Options& o) {
  const Format f = parse_format(o.format);
  if (o.input == "-") return parse_graph(std::cin, f);
  return read_graph_file(o.input, f);
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  const std::string text = doc.dump() + "\n";
  if (o.json_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.json_path);
  if (!file) throw Error("cannot write '" + o.json_path + "'");
  file << text;
}

const char* side_name(Side side) { return side == Side::forward ? "forward" : "reversed"; }

Json defect_json(const Defect& d) { return Json{{"message", d.message}, {"witness", d.witness}}; }

int cmd_recognize(const Options& o, std::ostream& out) {
  auto g = load(o);
  auto outcome = recognize_interval(g);
  emit(to_json(outcome), o, out);
  return outcome.yes ? 0 : 1;
}

int cmd_recognize_unit(const Options& o, std::ostream& out) {
  auto g = load(o);
  auto outcome = recognize_unit_interval(g, parse_strategy(o.strategy));
  auto doc = to_json(outcome);
  doc["strategy"] = o.strategy;
  emit(doc, o, out);
  return outcome.yes ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = load(o);
  Json doc;
  if (!o.certificate.empty()) {
    std::ifstream file(o.certificate);
    if (!file) throw Error("cannot open '" + o.certificate + "'");
    Json cert;
    try {
      cert = Json::parse(file);
    } catch (const Json::exception& e) {
      throw ParseError(o.certificate + ": " + e.what());
    }
    std::optional<Defect> defect;
    if (cert.contains("ordering")) {
      auto sigma = ordering_from_json(cert["ordering"]);
      if (!sigma.is_permutation_of(g)) {
        defect = Defect{"ordering is not a permutation of the vertices", {}};
      } else {
        std::optional<OrderingViolation> bad;
        if (o.unit) {
          if (auto u = verify_umbrella_ordering(g, sigma)) bad = u->triple;
        } else {
          bad = verify_interval_ordering(g, sigma);
        }
        if (bad) defect = Defect{"ordering fails the ordering check", {bad->vi, bad->vj, bad->vk}};
      }
    }
    if (!defect && cert.contains("intervals")) {
      defect = verify_representation(g, representation_from_json(cert["intervals"]), o.unit);
    }
    if (!defect && cert.contains("clique_path")) {
      defect = verify_clique_path(g, clique_path_from_json(cert["clique_path"], g.vertex_count()));
    }
    doc["verdict"] = defect ? "defect" : "ok";
    if (defect) doc["defect"] = defect_json(*defect);
    emit(doc, o, out);
    return defect ? 1 : 0;
  }
  if (o.ordering.empty()) throw Error("verify needs --ordering or --certificate");
  auto sigma = parse_ordering(o.ordering);
  if (!sigma.is_permutation_of(g)) throw Error("--ordering is not a permutation of 1.." + std::to_string(g.vertex_count()));
  bool ok = true;
  if (o.unit) {
    if (auto bad = verify_umbrella_ordering(g, sigma)) {
      ok = false;
      doc["violation"] = to_json(bad->triple);
      doc["violation"]["side"] = side_name(bad->side);
    }
  } else if (auto bad = verify_interval_ordering(g, sigma)) {
    ok = false;
    doc["violation"] = to_json(*bad);
  }
  Json result;
  result["verdict"] = ok ? "ok" : "violation";
  if (!doc.is_null()) result.update(doc);
  emit(result, o, out);
  return ok ? 0 : 1;
}

int cmd_certify(const Options& o, std::ostream& out) {
  auto g = load(o);
  if (o.ordering.empty()) throw Error("certify needs --ordering");
  auto sigma = parse_ordering(o.ordering);
  if (!sigma.is_permutation_of(g)) throw Error("--ordering is not a permutation of 1.." + std::to_string(g.vertex_count()));
  Json doc;
  try {
    auto rep = o.unit ? umbrella_to_unit_representation(g, sigma) : ordering_to_representation(g, sigma);
    auto cp = ordering_to_clique_path(g, sigma);
    doc["verdict"] = "ok";
    doc["ordering"] = to_json(sigma);
    doc["intervals"] = to_json(rep);
    doc["clique_path"] = to_json(cp);
  } catch (const CertificateError& e) {
    doc["verdict"] = "violation";
    doc["message"] = e.what();
    if (e.violation()) doc["violation"] = to_json(*e.violation());
    emit(doc, o, out);
    return 1;
  }
  emit(doc, o, out);
  return 0;
}

int cmd_trace(const Options& o, std::ostream& out) {
  auto g = load(o);
  const auto& which = o.trace_sweep;
  std::optional<VertexOrdering> reference;
  if (!o.ordering.empty()) reference = parse_ordering(o.ordering);
  Sweep sweep;
  Json doc;
  doc["sweep"] = which;
  if (which == "lbfs") {
    sweep = o.start ? lbfs(g, o.start) : lbfs(g);
  } else if (which == "lbfs+") {
    if (!reference) reference = lbfs(g).ordering;
    sweep = lbfs_plus(g, *reference);
  } else if (which == "lbfs-up") {
    if (!reference) reference = lbfs_plus(g, lbfs(g).ordering).ordering;
    sweep = lbfs_up(g, *reference);
  } else if (which == "lbfs-delta") {
    if (g.vertex_count() == 0) throw Error("lbfs-delta needs a non-empty graph");
    sweep = lbfs_delta(g, o.start ? o.start : lbfs(g).ordering.last());
  } else {
    throw Error("unknown sweep '" + which + "' (lbfs, lbfs+, lbfs-up, lbfs-delta)");
  }
  if (reference) doc["reference"] = to_json(*reference);
  doc["ordering"] = to_json(sweep.ordering);
  Json steps = Json::array();
  for (std::size_t i = 1; i <= sweep.ordering.size(); ++i) {
    const Vertex v = sweep.ordering.at(i);
    Json label = Json::array();
    for (Vertex w : earlier_neighbors(g, sweep.ordering, v)) label.push_back(sweep.ordering.position(w));
    auto snap = sweep.trace.snapshot(sweep.ordering, i);
    steps.push_back(Json{{"position", i},
                         {"vertex", v},
                         {"label", std::move(label)},
                         {"snapshot", std::vector<Vertex>(snap.begin(), snap.end())}});
  }
  doc["steps"] = std::move(steps);
  if (which == "lbfs-up") {
    try {
      auto bad = check_well_anchored(g, sweep.ordering, sweep.trace, o.max_n);
      doc["well_anchored"] = !bad.has_value();
      if (bad) {
        doc["anchor_violation"] = Json{{"position", bad->position}, {"first", bad->first}, {"exposed", bad->exposed}};
      }
    } catch (const GuardError& e) {
      doc["well_anchored"] = nullptr;
      doc["well_anchored_skipped"] = e.what();
    }
  }
  emit(doc, o, out);
  return 0;
}

int cmd_brute_force(const Options& o, std::ostream& out) {
  auto g = load(o);
  const bool yes = o.unit ? brute_force_umbrella(g, o.max_n) : brute_force_interval(g, o.max_n);
  emit(Json{{"verdict", yes ? "yes" : "no"}, {"class", o.unit ? "unit-interval" : "interval"}}, o, out);
  return yes ? 0 : 1;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (o.kind != "named" && !o.seed) throw Error("generate " + o.kind + " needs --seed");
  auto made = generate(o.kind, o.n, o.p, o.seed.value_or(0), o.name);
  out << write_graph(made.graph, parse_format(o.format));
  if (!o.json_path.empty()) {
    Json doc = Json::object();
    if (made.witness) doc["intervals"] = to_json(*made.witness);
    std::ofstream file(o.json_path);
    if (!file) throw Error("cannot write '" + o.json_path + "'");
    file << doc.dump() << "\n";
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.min_exp < 1 || o.max_exp > 26 || o.min_exp > o.max_exp) throw Error("bench: need 1 <= min-exp <= max-exp <= 26");
  Json runs = Json::array();
  double previous = 0;
  for (int e = o.min_exp; e <= o.max_exp; ++e) {
    const auto n = static_cast<Vertex>(1) << e;
    auto made = random_interval(n, o.seed.value_or(1) + static_cast<std::uint64_t>(e));
    double best = 0;
    bool yes = true;
    for (int r = 0; r < std::max(1, o.repeat); ++r) {
      auto t0 = std::chrono::steady_clock::now();
      auto outcome = recognize_interval(made.graph);
      std::chrono::duration<double> took = std::chrono::steady_clock::now() - t0;
      yes = yes && outcome.yes;
      if (r == 0 || took.count() < best) best = took.count();
    }
    const auto m = made.graph.edge_count();
    Json row{{"n", n},
             {"m", m},
             {"seconds", best},
             {"ns_per_edge", m > 0 ? best * 1e9 / static_cast<double>(m) : 0.0},
             {"verdict", yes ? "yes" : "no"}};
    row["ratio"] = previous > 0 ? Json(best / previous) : Json(nullptr);
    previous = best;
    runs.push_back(std::move(row));
  }
  emit(Json{{"runs", runs}}, o, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval and unit interval graph recognition by multi-sweep LBFS", "ivg"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* c) {
    c->add_option("input", o.input, "graph file, '-' for stdin")->capture_default_str();
    c->add_option("--format", o.format, "edgelist or dimacs")->capture_default_str();
    c->add_option("--json", o.json_path, "write the JSON document to this file instead of stdout");
  };

  auto* recognize = app.add_subcommand("recognize", "recognize interval graphs");
  add_input(recognize);

  auto* recognize_unit = app.add_subcommand("recognize-unit", "recognize unit interval graphs");
  add_input(recognize_unit);
  recognize_unit->add_option("--strategy", o.strategy, "three-sweep, two-sweep-lbfs, two-sweep-mcs, bfs-start")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check an ordering or a certificate file");
  add_input(verify);
  verify->add_option("--ordering", o.ordering, "vertex ids in order");
  verify->add_option("--certificate", o.certificate, "JSON certificate from recognize");
  verify->add_flag("--unit", o.unit, "umbrella ordering / proper representation");

  auto* certify = app.add_subcommand("certify", "build certificates from an ordering");
  add_input(certify);
  certify->add_option("--ordering", o.ordering, "vertex ids in order")->required();
  certify->add_flag("--unit", o.unit, "treat the ordering as an umbrella ordering");

  auto* trace = app.add_subcommand("trace", "per-step labels and snapshots of one sweep");
  add_input(trace);
  trace->add_option("--trace-sweep", o.trace_sweep, "lbfs, lbfs+, lbfs-up, lbfs-delta")->capture_default_str();
  trace->add_option("--ordering", o.ordering, "reference ordering for lbfs+ and lbfs-up");
  trace->add_option("--start", o.start, "start vertex for lbfs and lbfs-delta");
  trace->add_option("--max-n", o.max_n, "snapshot size limit for the well-anchored check")->capture_default_str();

  auto* brute = app.add_subcommand("brute-force", "exhaustive recognition for small graphs");
  add_input(brute);
  brute->add_flag("--unit", o.unit, "unit interval instead of interval");
  brute->add_option("--max-n", o.max_n, "size guard")->capture_default_str();

  auto* gen = app.add_subcommand("generate", "write a generated graph");
  gen->add_option("kind", o.kind, "random-interval, random-unit, gnp, named")->required();
  gen->add_option("--n", o.n, "vertex count")->capture_default_str();
  gen->add_option("--p", o.p, "edge probability for gnp")->capture_default_str();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--name", o.name, "fixture name for 'named'");
  gen->add_option("--format", o.format, "edgelist or dimacs")->capture_default_str();
  gen->add_option("--json", o.json_path, "also write the generating intervals here");

  auto* bench = app.add_subcommand("bench", "time recognize on random interval graphs of doubling size");
  bench->add_option("--min-exp", o.min_exp, "smallest n = 2^min-exp")->capture_default_str();
  bench->add_option("--max-exp", o.max_exp, "largest n = 2^max-exp")->capture_default_str();
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--repeat", o.repeat, "runs per size, the fastest is reported")->capture_default_str();
  bench->add_option("--json", o.json_path, "write the JSON document to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (recognize->parsed()) return cmd_recognize(o, out);
    if (recognize_unit->parsed()) return cmd_recognize_unit(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (trace->parsed()) return cmd_trace(o, out);
    if (brute->parsed()) return cmd_brute_force(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ivg
