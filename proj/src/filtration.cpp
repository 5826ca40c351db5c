#include "dmce/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dmce/kclique.hpp"

namespace dmce {

PointCloud::PointCloud(std::vector<std::vector<double>> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point cloud is empty");
  if (points_.front().empty()) throw std::invalid_argument("points need at least one coordinate");
  for (const auto& p : points_) {
    if (p.size() != points_.front().size()) throw std::invalid_argument("point dimension mismatch");
  }
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  double sum = 0.0;
  for (std::size_t d = 0; d < dimension(); ++d) {
    double delta = points_[i][d] - points_[j][d];
    sum += delta * delta;
  }
  return std::sqrt(sum);
}

PointCloud parse_point_cloud(std::istream& in) {
  std::vector<std::vector<double>> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<double> p;
    for (std::string tok; fields >> tok;) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad coordinate '" + tok + "'");
      }
    }
    if (!points.empty() && p.size() != points.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": dimension mismatch");
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError("no points");
  return PointCloud(std::move(points));
}

PointCloud read_point_cloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_point_cloud(in);
}

PointCloud random_point_cloud(std::size_t n, std::size_t dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<std::vector<double>> points(n, std::vector<double>(dimension));
  for (auto& p : points) {
    for (auto& x : p) x = coord(rng);
  }
  return PointCloud(std::move(points));
}

EdgeStream build_edge_stream(const PointCloud& pc) {
  if (pc.size() < 2) throw std::invalid_argument("need at least two points");
  EdgeStream stream;
  for (std::size_t i = 0; i < pc.size(); ++i) stream.vertices.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < pc.size(); ++i) {
    for (std::size_t j = i + 1; j < pc.size(); ++j) {
      stream.entries.push_back({Edge{static_cast<VertexId>(i), static_cast<VertexId>(j)}, pc.distance(i, j)});
    }
  }
  std::sort(stream.entries.begin(), stream.entries.end(), [](const StreamEntry& a, const StreamEntry& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.edge < b.edge;
  });
  return stream;
}

EdgeStream edge_stream_from_list(const EdgeList& list) {
  EdgeStream stream;
  std::set<VertexId> vertices(list.vertices.begin(), list.vertices.end());
  std::set<Edge> seen;
  bool weighted = !list.edges.empty() &&
                  std::all_of(list.edges.begin(), list.edges.end(), [](const EdgeRecord& r) { return r.weight.has_value(); });
  for (const auto& rec : list.edges) {
    vertices.insert(rec.edge.u);
    vertices.insert(rec.edge.v);
    if (!seen.insert(rec.edge).second) continue;
    double w = weighted ? *rec.weight : static_cast<double>(stream.entries.size());
    stream.entries.push_back({rec.edge, w});
  }
  if (weighted) {
    std::stable_sort(stream.entries.begin(), stream.entries.end(),
                     [](const StreamEntry& a, const StreamEntry& b) { return a.weight < b.weight; });
  }
  stream.vertices.assign(vertices.begin(), vertices.end());
  return stream;
}

namespace {

template <class Index>
void drive(const EdgeStream& stream, const FiltrationOptions& opts, const StepObserver& observer, Graph& g,
           Index& ix, std::vector<InsertionReport>& reports) {
  InsertOptions io;
  io.kernels = opts.kernels;

  auto insert_one = [&](Edge e) {
    if constexpr (std::is_same_v<Index, KCliqueIndex>) {
      return k_insert_edge_update(g, ix, e, opts.method, io);
    } else {
      return insert_edge_update(g, ix, e, opts.method, io);
    }
  };

  std::size_t i = 0;
  while (i < stream.entries.size()) {
    std::size_t end = i + 1;
    if (opts.parallel) {
      while (end < stream.entries.size() && stream.entries[end].weight == stream.entries[i].weight) ++end;
    }
    std::vector<InsertionReport> step_reports;
    if (end - i == 1) {
      step_reports.push_back(insert_one(stream.entries[i].edge));
    } else {
      std::vector<Edge> batch;
      for (std::size_t j = i; j < end; ++j) {
        if (!g.has_edge(stream.entries[j].edge.u, stream.entries[j].edge.v)) batch.push_back(stream.entries[j].edge);
      }
      auto schedule = schedule_batch(g, batch, *opts.parallel, &ix, opts.independence);
      BatchOptions bo;
      bo.method = opts.method;
      bo.kernels = opts.kernels;
      step_reports = apply_batch(g, ix, schedule, bo);
    }
    // Batch reports come back in round order; weights follow the edges.
    for (auto& report : step_reports) {
      auto it = std::find_if(stream.entries.begin() + static_cast<std::ptrdiff_t>(i),
                             stream.entries.begin() + static_cast<std::ptrdiff_t>(end),
                             [&](const StreamEntry& s) { return s.edge == report.edge; });
      report.weight = it->weight;
      report.step = reports.size() + 1;
      if (observer) observer(report, g, ix);
      reports.push_back(std::move(report));
    }
    i = end;
  }
}

}  // namespace

FiltrationResult run_filtration(const EdgeStream& stream, const FiltrationOptions& opts, const StepObserver& observer) {
  FiltrationResult result;
  for (VertexId v : stream.vertices) result.graph.add_vertex(v);
  if (opts.k) {
    auto ix = KCliqueIndex::bootstrap(result.graph, *opts.k);
    drive(stream, opts, observer, result.graph, ix, result.reports);
    result.final_enumeration = ix.cliques();
  } else {
    auto ix = MaximalCliqueIndex::bootstrap(result.graph);
    drive(stream, opts, observer, result.graph, ix, result.reports);
    result.final_enumeration = ix.cliques();
  }
  return result;
}

}  // namespace dmce
