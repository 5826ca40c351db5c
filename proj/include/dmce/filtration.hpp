#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dmce/batch.hpp"
#include "dmce/clique_index.hpp"
#include "dmce/insertion.hpp"

namespace dmce {

class PointCloud {
 public:
  // Throws std::invalid_argument if empty, zero-dimensional or ragged.
  explicit PointCloud(std::vector<std::vector<double>> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().size(); }
  const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }

  double distance(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<double>> points_;
};

// One point per line, whitespace separated coordinates, '#' comment lines.
PointCloud parse_point_cloud(std::istream& in);
PointCloud read_point_cloud(const std::string& path);

// Uniform in the unit cube.
PointCloud random_point_cloud(std::size_t n, std::size_t dimension, std::uint64_t seed);

struct StreamEntry {
  Edge edge;
  double weight = 0.0;
};

struct EdgeStream {
  // Registered up front as isolated vertices.
  VertexSet vertices;
  // Non-decreasing weight, distinct edges.
  std::vector<StreamEntry> entries;
};

// All pairs by Euclidean distance, ascending; equal distances in canonical
// edge order. Throws std::invalid_argument for fewer than two points.
EdgeStream build_edge_stream(const PointCloud& pc);

// File order is kept except that weighted lists are stably sorted by weight.
// Unweighted entries get their position as weight; repeats of an edge are
// dropped.
EdgeStream edge_stream_from_list(const EdgeList& list);

struct FiltrationOptions {
  Method method = Method::Proposed;
  std::optional<int> k;
  // When set, runs of equal weight are scheduled and applied as batches.
  std::optional<IndependenceMode> parallel;
  IndependenceOptions independence;
  KernelOptions kernels;
};

struct FiltrationResult {
  std::vector<InsertionReport> reports;
  Graph graph;
  std::vector<Clique> final_enumeration;
};

// Called after each committed step with the state reached so far. In batch
// mode every report of an equal-weight batch sees the state after the batch.
using StepObserver = std::function<void(const InsertionReport&, const Graph&, const CliqueStore&)>;

FiltrationResult run_filtration(const EdgeStream& stream, const FiltrationOptions& opts = {},
                                const StepObserver& observer = {});

}  // namespace dmce
