#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmce/filtration.hpp"
#include "dmce/insertion.hpp"

namespace dmce {

struct CsvOptions {
  bool with_k = false;
  bool with_weight = false;
  bool with_round = false;
  // Writes 0 for elapsed_ns so output is byte-reproducible.
  bool zero_timing = false;
};

// Column order: step,u,v,method,side,candidates_generated,
// candidates_after_dedup,num_added,num_removed,total_cliques,elapsed_ns
// followed by k, weight and round when enabled. side is empty for the
// existing method.
std::string csv_header(const CsvOptions& opts);
std::string csv_row(const InsertionReport& r, const CsvOptions& opts);
void write_report_csv(std::ostream& out, std::span<const InsertionReport> reports, const CsvOptions& opts);

// Shortest round-trip decimal form.
std::string format_double(double x);

// Both generation methods run over one stream from the same start state.
struct MethodComparison {
  InsertionReport proposed;
  InsertionReport existing;
};

std::vector<MethodComparison> compare_methods(const EdgeStream& stream, std::optional<int> k = std::nullopt,
                                              const KernelOptions& kernels = {});

void write_comparison_csv(std::ostream& out, std::span<const MethodComparison> rows, bool zero_timing = false);

}  // namespace dmce
