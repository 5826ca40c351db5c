#include "dmce/batch.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>

#include "dmce/kclique.hpp"

namespace dmce {

std::string_view to_string(IndependenceMode m) {
  return m == IndependenceMode::Conservative ? "conservative" : "aggressive";
}

std::size_t Schedule::num_edges() const {
  std::size_t n = 0;
  for (const auto& r : rounds) n += r.size();
  return n;
}

namespace {

// g plus a set of pending edges, queried through closed neighborhoods.
class Overlay {
 public:
  explicit Overlay(const Graph& g) : g_(g) {}

  void add(Edge e) { extra_.insert(e); }

  bool in_closed(VertexId center, VertexId w) const {
    if (center == w) return true;
    if (g_.has_edge(center, w)) return true;
    return extra_.contains(Edge{center, w});
  }

 private:
  const Graph& g_;
  std::set<Edge> extra_;
};

bool touches_closed(const Overlay& view, VertexId center, Edge e) {
  return view.in_closed(center, e.u) || view.in_closed(center, e.v);
}

bool independent(const Overlay& view, const BatchEdge& a, const BatchEdge& b, IndependenceMode mode,
                 const IndependenceOptions& opts) {
  if (a.edge.touches(b.edge.u) || a.edge.touches(b.edge.v)) return false;
  if (mode == IndependenceMode::Conservative) {
    return !touches_closed(view, b.edge.u, a.edge) && !touches_closed(view, b.edge.v, a.edge);
  }
  if (touches_closed(view, b.side, a.edge)) return false;
  return !opts.symmetric || !touches_closed(view, a.side, b.edge);
}

bool round_fits(const Overlay& view, const std::vector<BatchEdge>& round, const BatchEdge& e, IndependenceMode mode,
                const IndependenceOptions& opts) {
  // Members were placed earlier, so they play the first role.
  return std::all_of(round.begin(), round.end(),
                     [&](const BatchEdge& m) { return independent(view, m, e, mode, opts); });
}

bool rounds_valid(const Graph& g, const std::vector<std::vector<BatchEdge>>& rounds, IndependenceMode mode,
                  const IndependenceOptions& opts) {
  Overlay view(g);
  for (const auto& round : rounds) {
    for (std::size_t i = 0; i < round.size(); ++i) {
      for (std::size_t j = i + 1; j < round.size(); ++j) {
        if (!independent(view, round[i], round[j], mode, opts)) return false;
      }
    }
    for (const auto& be : round) view.add(be.edge);
  }
  return true;
}

VertexId default_side(const CliqueStore* ix, Edge e) {
  if (!ix) return e.u;
  auto count = [&](VertexId w) -> std::size_t { return ix->knows_vertex(w) ? ix->count_containing(w) : 1; };
  auto cu = count(e.u);
  auto cv = count(e.v);
  if (cu != cv) return cu < cv ? e.u : e.v;
  return e.u;
}

template <class Index>
InsertionPlan plan_for(const Graph& g, const Index& ix, Edge e, Method m, const InsertOptions& opts) {
  if constexpr (std::is_same_v<Index, KCliqueIndex>) {
    return plan_k_insertion(g, ix, e, m, opts);
  } else {
    return plan_insertion(g, ix, e, m, opts);
  }
}

template <class Index>
std::vector<InsertionReport> run_schedule(Graph& g, Index& ix, const Schedule& s, const BatchOptions& opts) {
  std::vector<InsertionReport> reports;
  for (std::size_t r = 0; r < s.rounds.size(); ++r) {
    const auto& round = s.rounds[r];
    for (const auto& be : round) {
      register_endpoints(g, ix, be.edge);
      if (g.add_edge(be.edge) == AddOutcome::AlreadyPresent) {
        throw std::invalid_argument("batch edge already in graph");
      }
    }

    const auto n = static_cast<std::ptrdiff_t>(round.size());
    std::vector<InsertionPlan> plans(round.size());
    std::vector<std::exception_ptr> errors(round.size());
    auto plan_one = [&](std::size_t i) {
      try {
        InsertOptions io;
        io.kernels = opts.kernels;
        // Nested kernels stay serial inside a parallel round.
        if (opts.kernels.execution == Execution::Parallel && n > 1) io.kernels.execution = Execution::Serial;
        if (s.mode == IndependenceMode::Aggressive && opts.method == Method::Proposed) io.side = round[i].side;
        plans[i] = plan_for(g, ix, round[i].edge, opts.method, io);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (opts.kernels.execution == Execution::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t i = 0; i < n; ++i) plan_one(static_cast<std::size_t>(i));
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) plan_one(static_cast<std::size_t>(i));
    }
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }

    for (auto& plan : plans) {
      auto report = commit_plan(ix, std::move(plan));
      report.round = static_cast<int>(r);
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace

bool edges_independent(const Graph& g, const BatchEdge& first, const BatchEdge& second, IndependenceMode mode,
                       const IndependenceOptions& opts) {
  return independent(Overlay(g), first, second, mode, opts);
}

Schedule schedule_batch(const Graph& g, std::span<const Edge> batch, IndependenceMode mode, const CliqueStore* ix,
                        const IndependenceOptions& opts) {
  Schedule s;
  s.mode = mode;
  s.options = opts;
  std::set<Edge> seen;
  for (const Edge& e : batch) {
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge in batch");
    if (g.has_edge(e.u, e.v)) throw std::invalid_argument("batch edge already in graph");
  }

  for (const Edge& e : batch) {
    BatchEdge be{e, default_side(ix, e)};
    bool placed = false;
    Overlay prefix(g);
    for (std::size_t r = 0; r < s.rounds.size() && !placed; ++r) {
      if (round_fits(prefix, s.rounds[r], be, mode, opts)) {
        auto trial = s.rounds;
        trial[r].push_back(be);
        // Adding e to round r changes the graph seen by every later round.
        if (r + 1 == s.rounds.size() || rounds_valid(g, trial, mode, opts)) {
          s.rounds = std::move(trial);
          placed = true;
        }
      }
      for (const auto& m : s.rounds[r]) prefix.add(m.edge);
    }
    if (!placed) s.rounds.push_back({be});
  }
  return s;
}

bool schedule_is_valid(const Graph& g, const Schedule& s) { return rounds_valid(g, s.rounds, s.mode, s.options); }

std::vector<InsertionReport> apply_batch(Graph& g, MaximalCliqueIndex& ix, const Schedule& s,
                                         const BatchOptions& opts) {
  return run_schedule(g, ix, s, opts);
}

std::vector<InsertionReport> apply_batch(Graph& g, KCliqueIndex& ix, const Schedule& s, const BatchOptions& opts) {
  return run_schedule(g, ix, s, opts);
}

}  // namespace dmce
