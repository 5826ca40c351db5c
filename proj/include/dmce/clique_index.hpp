#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmce/clique.hpp"
#include "dmce/graph.hpp"

namespace dmce {

class DuplicateCliqueError : public std::invalid_argument {
 public:
  explicit DuplicateCliqueError(const Clique& c);
};

class UnknownCliqueError : public std::out_of_range {
 public:
  explicit UnknownCliqueError(CliqueId id);
};

// Set of vertex sets with a per-vertex containment index. Holds the storage
// shared by the unbounded and size-bounded enumerations; the enumeration
// invariants themselves are checked by check_consistency.
class CliqueStore {
 public:
  CliqueStore() = default;

  std::size_t size() const { return live_; }
  bool knows_vertex(VertexId u) const { return u < by_vertex_.size() && !by_vertex_[u].empty(); }

  // Ids of stored cliques containing u, ascending. Throws UnknownVertexError
  // if no stored clique contains u.
  std::span<const CliqueId> cliques_containing(VertexId u) const;
  std::size_t count_containing(VertexId u) const { return cliques_containing(u).size(); }

  const Clique& at(CliqueId id) const;
  bool contains(CliqueId id) const { return id.value < slots_.size() && slots_[id.value].has_value(); }
  std::optional<CliqueId> find(const Clique& c) const;

  // Removes `remove`, then adds `add`; returns the ids given to `add` in order.
  // Validates the whole delta before mutating, so a throw leaves the store
  // untouched.
  std::vector<CliqueId> apply_delta(std::span<const Clique> add, std::span<const CliqueId> remove);

  // Live ids ascending.
  std::vector<CliqueId> ids() const;
  // Stored cliques in canonical order.
  std::vector<Clique> cliques() const;
  std::string canonical_text() const;

 private:
  friend struct StoreInspector;
  friend struct CliqueStoreTestAccess;  // defined by unit tests only

  std::vector<std::optional<Clique>> slots_;  // indexed by CliqueId::value
  std::vector<std::vector<CliqueId>> by_vertex_;
  std::unordered_map<CliqueKey, CliqueId, CliqueKeyHash> by_key_;
  std::size_t live_ = 0;
};

// The maximal clique enumeration of a graph (singletons included for
// isolated vertices).
class MaximalCliqueIndex : public CliqueStore {
 public:
  static MaximalCliqueIndex bootstrap(const Graph& g);
};

// The maximal k-clique enumeration: every clique of size exactly k plus every
// maximal clique smaller than k.
class KCliqueIndex : public CliqueStore {
 public:
  explicit KCliqueIndex(int k);
  int k() const { return k_; }

  static KCliqueIndex bootstrap(const Graph& g, int k);

 private:
  int k_;
};

enum class Violation {
  None,
  NotAClique,
  UnknownMember,
  NonMaximal,
  Oversized,
  Duplicate,
  IndexMismatch,
  UncoveredVertex,
};

std::string to_string(Violation v);

struct ConsistencyReport {
  Violation violation = Violation::None;
  std::optional<Clique> clique;
  std::optional<VertexId> vertex;
  std::string detail;

  bool ok() const { return violation == Violation::None; }
};

// First violated invariant of `ix` against `g`, or an OK report.
ConsistencyReport check_consistency(const MaximalCliqueIndex& ix, const Graph& g);
ConsistencyReport check_consistency(const KCliqueIndex& ix, const Graph& g);

}  // namespace dmce
