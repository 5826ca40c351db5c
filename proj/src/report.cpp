#include "dmce/report.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace dmce {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, ptr);
}

std::string csv_header(const CsvOptions& opts) {
  std::string h =
      "step,u,v,method,side,candidates_generated,candidates_after_dedup,num_added,num_removed,total_cliques,elapsed_ns";
  if (opts.with_k) h += ",k";
  if (opts.with_weight) h += ",weight";
  if (opts.with_round) h += ",round";
  return h;
}

std::string csv_row(const InsertionReport& r, const CsvOptions& opts) {
  std::string row = std::to_string(r.step) + ',' + std::to_string(r.edge.u) + ',' + std::to_string(r.edge.v) + ',' +
                    std::string(to_string(r.method)) + ',' + (r.side ? std::to_string(*r.side) : std::string()) + ',' +
                    std::to_string(r.candidates_generated) + ',' + std::to_string(r.candidates_after_dedup) + ',' +
                    std::to_string(r.added.size()) + ',' + std::to_string(r.removed.size()) + ',' +
                    std::to_string(r.total_cliques) + ',' +
                    std::to_string(opts.zero_timing ? 0 : r.elapsed.count());
  if (opts.with_k) row += ',' + (r.k ? std::to_string(*r.k) : std::string());
  if (opts.with_weight) row += ',' + (r.weight ? format_double(*r.weight) : std::string());
  if (opts.with_round) row += ',' + (r.round ? std::to_string(*r.round) : std::string());
  return row;
}

void write_report_csv(std::ostream& out, std::span<const InsertionReport> reports, const CsvOptions& opts) {
  out << csv_header(opts) << '\n';
  for (const auto& r : reports) out << csv_row(r, opts) << '\n';
}

std::vector<MethodComparison> compare_methods(const EdgeStream& stream, std::optional<int> k,
                                              const KernelOptions& kernels) {
  FiltrationOptions opts;
  opts.k = k;
  opts.kernels = kernels;
  opts.method = Method::Proposed;
  auto proposed = run_filtration(stream, opts);
  opts.method = Method::Existing;
  auto existing = run_filtration(stream, opts);

  std::vector<MethodComparison> rows;
  rows.reserve(proposed.reports.size());
  for (std::size_t i = 0; i < proposed.reports.size(); ++i) {
    rows.push_back({std::move(proposed.reports[i]), std::move(existing.reports[i])});
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, std::span<const MethodComparison> rows, bool zero_timing) {
  out << "step,u,v,weight,side,proposed_candidates,existing_candidates,proposed_after_dedup,existing_after_dedup,"
         "num_added,num_removed,total_cliques,proposed_ns,existing_ns\n";
  for (const auto& row : rows) {
    const auto& p = row.proposed;
    const auto& e = row.existing;
    out << p.step << ',' << p.edge.u << ',' << p.edge.v << ',' << (p.weight ? format_double(*p.weight) : "") << ','
        << (p.side ? std::to_string(*p.side) : "") << ',' << p.candidates_generated << ',' << e.candidates_generated
        << ',' << p.candidates_after_dedup << ',' << e.candidates_after_dedup << ',' << p.added.size() << ','
        << p.removed.size() << ',' << p.total_cliques << ',' << (zero_timing ? 0 : p.elapsed.count()) << ','
        << (zero_timing ? 0 : e.elapsed.count()) << '\n';
  }
}

}  // namespace dmce
