#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "dmce/batch.hpp"
#include "dmce/clique_index.hpp"
#include "dmce/filtration.hpp"
#include "dmce/insertion.hpp"
#include "dmce/kclique.hpp"
#include "dmce/report.hpp"
#include "dmce/static_oracle.hpp"

namespace dmce::cli {
namespace {

struct Options {
  std::string method = "proposed";
  std::optional<int> k;
  std::string parallel = "off";
  std::uint64_t seed = 1;
  std::string stats_out;
  std::string enum_out;
  bool no_timing = false;

  std::string edges_path;
  std::string points_path;
  std::string enum_path;
  std::string graph_out;
  std::size_t random_points = 0;
  std::size_t dimension = 2;
  std::vector<VertexId> edge;
};

// Writes to `path`, or to `fallback` when path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot write " + path);
  write(file);
  if (!file) throw std::ios_base::failure("write failed for " + path);
}

std::vector<Clique> read_enumeration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_enumeration(in);
}

Method method_of(const Options& o) { return *parse_method(o.method); }

std::optional<IndependenceMode> parallel_of(const Options& o) {
  if (o.parallel == "conservative") return IndependenceMode::Conservative;
  if (o.parallel == "aggressive") return IndependenceMode::Aggressive;
  return std::nullopt;
}

// Stream input from --points, --edges or --random-points, in that order.
EdgeStream load_stream(const Options& o) {
  if (!o.points_path.empty()) return build_edge_stream(read_point_cloud(o.points_path));
  if (!o.edges_path.empty()) return edge_stream_from_list(read_edge_list(o.edges_path));
  if (o.random_points > 0) return build_edge_stream(random_point_cloud(o.random_points, o.dimension, o.seed));
  throw ParseError("need --points, --edges or --random-points");
}

// The graph a verify run compares against: the edge list, or the complete
// graph on a point cloud (the end state of a full filtration).
Graph load_graph(const Options& o) {
  if (!o.edges_path.empty()) return read_edge_list(o.edges_path).to_graph();
  if (!o.points_path.empty()) {
    auto pc = read_point_cloud(o.points_path);
    Graph g;
    for (std::size_t i = 0; i < pc.size(); ++i) g.add_vertex(static_cast<VertexId>(i));
    for (std::size_t i = 0; i < pc.size(); ++i) {
      for (std::size_t j = i + 1; j < pc.size(); ++j) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
    return g;
  }
  throw ParseError("need --edges or --points");
}

int cmd_bootstrap(const Options& o, std::ostream& out) {
  auto g = read_edge_list(o.edges_path).to_graph();
  auto cliques = o.k ? enumerate_maximal_k_cliques(g, *o.k) : enumerate_maximal_cliques(g);
  emit(o.enum_out, out, [&](std::ostream& s) { write_enumeration(s, cliques); });
  return kOk;
}

template <class Index>
InsertionReport insert_into(Graph& g, Index& ix, Edge e, Method m) {
  if constexpr (std::is_same_v<Index, KCliqueIndex>) {
    return k_insert_edge_update(g, ix, e, m);
  } else {
    return insert_edge_update(g, ix, e, m);
  }
}

template <class Index>
int insert_with(const Options& o, Graph& g, Index ix, std::ostream& out, std::ostream& err) {
  if (auto check = check_consistency(ix, g); !check.ok()) {
    err << "enumeration does not match graph: " << to_string(check.violation) << ' ' << check.detail << '\n';
    return kParseError;
  }
  Edge e{o.edge.at(0), o.edge.at(1)};
  auto report = insert_into(g, ix, e, method_of(o));
  report.step = 1;
  CsvOptions csv;
  csv.with_k = o.k.has_value();
  csv.zero_timing = o.no_timing;
  emit(o.enum_out, out, [&](std::ostream& s) { write_enumeration(s, ix.cliques()); });
  emit(o.stats_out, out, [&](std::ostream& s) { write_report_csv(s, std::span(&report, 1), csv); });
  if (!o.graph_out.empty()) emit(o.graph_out, out, [&](std::ostream& s) { write_edge_list(s, g); });
  return kOk;
}

int cmd_insert(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = read_edge_list(o.edges_path).to_graph();
  auto cliques = read_enumeration(o.enum_path);
  try {
    if (o.k) {
      KCliqueIndex ix(*o.k);
      ix.apply_delta(cliques, {});
      return insert_with(o, g, std::move(ix), out, err);
    }
    MaximalCliqueIndex ix;
    ix.apply_delta(cliques, {});
    return insert_with(o, g, std::move(ix), out, err);
  } catch (const DuplicateCliqueError& ex) {
    throw ParseError(ex.what());
  }
}

int cmd_stream(const Options& o, std::ostream& out) {
  auto stream = load_stream(o);
  FiltrationOptions fo;
  fo.method = method_of(o);
  fo.k = o.k;
  fo.parallel = parallel_of(o);
  if (fo.parallel) fo.kernels.execution = Execution::Parallel;
  auto result = run_filtration(stream, fo);

  CsvOptions csv;
  csv.with_k = o.k.has_value();
  csv.with_weight = true;
  csv.with_round = fo.parallel.has_value();
  csv.zero_timing = o.no_timing;
  emit(o.stats_out, out, [&](std::ostream& s) { write_report_csv(s, result.reports, csv); });
  emit(o.enum_out, out, [&](std::ostream& s) { write_enumeration(s, result.final_enumeration); });
  return kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  auto stream = load_stream(o);
  auto rows = compare_methods(stream, o.k);
  emit(o.stats_out, out, [&](std::ostream& s) { write_comparison_csv(s, rows, o.no_timing); });
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = load_graph(o);
  auto expected = o.k ? enumerate_maximal_k_cliques(g, *o.k) : enumerate_maximal_cliques(g);
  auto actual = canonicalize(read_enumeration(o.enum_path));
  std::set<Clique> want(expected.begin(), expected.end());
  std::set<Clique> have(actual.begin(), actual.end());
  std::size_t problems = 0;
  for (const auto& c : want) {
    if (!have.contains(c)) {
      out << "missing: " << to_string(c) << '\n';
      ++problems;
    }
  }
  for (const auto& c : have) {
    if (!want.contains(c)) {
      out << "unexpected: " << to_string(c) << '\n';
      ++problems;
    }
  }
  if (actual.size() != have.size()) {
    out << "duplicate lines in enumeration\n";
    ++problems;
  }
  out << (problems == 0 ? "OK " : "MISMATCH ") << want.size() << " expected, " << actual.size() << " given\n";
  return problems == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dynamic maximal clique enumeration under edge insertion"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "Candidate generation")->check(CLI::IsMember({"proposed", "existing"}));
    sub->add_option("--k", o.k, "Maintain maximal k-cliques")->check(CLI::PositiveNumber);
    sub->add_option("--parallel", o.parallel, "Batch equal-weight edges")
        ->check(CLI::IsMember({"off", "conservative", "aggressive"}));
    sub->add_option("--seed", o.seed, "Seed for random inputs");
    sub->add_option("--stats-out", o.stats_out, "CSV report path (default stdout)");
    sub->add_option("--enum-out", o.enum_out, "Enumeration path (default stdout)");
    sub->add_flag("--no-timing", o.no_timing, "Write 0 for timings");
  };
  auto add_stream_inputs = [&](CLI::App* sub) {
    sub->add_option("--points", o.points_path, "Point-cloud file");
    sub->add_option("--edges", o.edges_path, "Ordered edge list");
    sub->add_option("--random-points", o.random_points, "Generate this many random points");
    sub->add_option("--dim", o.dimension, "Dimension of random points")->check(CLI::PositiveNumber);
  };

  auto* bootstrap = app.add_subcommand("bootstrap", "Enumerate the maximal cliques of an edge list");
  add_common(bootstrap);
  bootstrap->add_option("edges", o.edges_path, "Edge-list file")->required();

  auto* insert = app.add_subcommand("insert", "Insert one edge into a graph and its enumeration");
  add_common(insert);
  insert->add_option("--graph", o.edges_path, "Edge-list file")->required();
  insert->add_option("--enum", o.enum_path, "Current enumeration")->required();
  insert->add_option("--edge", o.edge, "Endpoints u v")->expected(2)->required();
  insert->add_option("--graph-out", o.graph_out, "Write the updated edge list");

  auto* stream = app.add_subcommand("stream", "Run a distance-ordered edge stream");
  add_common(stream);
  add_stream_inputs(stream);

  auto* bench = app.add_subcommand("bench", "Compare proposed and existing generation over one stream");
  add_common(bench);
  add_stream_inputs(bench);

  auto* verify = app.add_subcommand("verify", "Check an enumeration against a from-scratch one");
  add_common(verify);
  verify->add_option("--edges", o.edges_path, "Edge-list file");
  verify->add_option("--points", o.points_path, "Point cloud (complete graph)");
  verify->add_option("--enum", o.enum_path, "Enumeration to check")->required();

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(rest));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return kParseError;
  }

  try {
    if (*bench && o.points_path.empty() && o.edges_path.empty() && o.random_points == 0) o.random_points = 30;
    if (*bootstrap) return cmd_bootstrap(o, out);
    if (*insert) return cmd_insert(o, out, err);
    if (*stream) return cmd_stream(o, out);
    if (*bench) return cmd_bench(o, out);
    return cmd_verify(o, out);
  } catch (const std::ios_base::failure& ex) {
    err << "I/O error: " << ex.what() << '\n';
    return kIoError;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return kParseError;
  }
}

}  // namespace dmce::cli
