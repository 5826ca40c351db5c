#include "dmce/clique_index.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "dmce/static_oracle.hpp"

namespace dmce {

DuplicateCliqueError::DuplicateCliqueError(const Clique& c)
    : std::invalid_argument("duplicate clique {" + to_string(c) + "}") {}

UnknownCliqueError::UnknownCliqueError(CliqueId id)
    : std::out_of_range("unknown clique id " + std::to_string(id.value)) {}

std::span<const CliqueId> CliqueStore::cliques_containing(VertexId u) const {
  if (!knows_vertex(u)) throw UnknownVertexError(u);
  return by_vertex_[u];
}

const Clique& CliqueStore::at(CliqueId id) const {
  if (!contains(id)) throw UnknownCliqueError(id);
  return *slots_[id.value];
}

std::optional<CliqueId> CliqueStore::find(const Clique& c) const {
  auto it = by_key_.find(canonical_key(c));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::vector<CliqueId> CliqueStore::apply_delta(std::span<const Clique> add, std::span<const CliqueId> remove) {
  std::unordered_set<CliqueId> removing;
  for (CliqueId id : remove) {
    if (!contains(id) || !removing.insert(id).second) throw UnknownCliqueError(id);
  }
  std::unordered_set<CliqueKey, CliqueKeyHash> adding;
  for (const auto& c : add) {
    if (c.empty()) throw std::invalid_argument("empty clique");
    auto existing = find(c);
    if (existing && !removing.contains(*existing)) throw DuplicateCliqueError(c);
    if (!adding.insert(canonical_key(c)).second) throw DuplicateCliqueError(c);
  }

  for (CliqueId id : remove) {
    auto& slot = slots_[id.value];
    for (VertexId v : *slot) {
      auto& list = by_vertex_[v];
      list.erase(std::lower_bound(list.begin(), list.end(), id));
    }
    by_key_.erase(canonical_key(*slot));
    slot.reset();
    --live_;
  }

  std::vector<CliqueId> assigned;
  assigned.reserve(add.size());
  for (const auto& c : add) {
    CliqueId id{slots_.size()};
    for (VertexId v : c) {
      if (v >= by_vertex_.size()) by_vertex_.resize(std::size_t{v} + 1);
      // Fresh ids are the largest so far; appending keeps each list sorted.
      by_vertex_[v].push_back(id);
    }
    by_key_.emplace(canonical_key(c), id);
    slots_.emplace_back(c);
    ++live_;
    assigned.push_back(id);
  }
  return assigned;
}

std::vector<CliqueId> CliqueStore::ids() const {
  std::vector<CliqueId> out;
  out.reserve(live_);
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i]) out.push_back(CliqueId{i});
  }
  return out;
}

std::vector<Clique> CliqueStore::cliques() const {
  std::vector<Clique> out;
  out.reserve(live_);
  for (const auto& slot : slots_) {
    if (slot) out.push_back(*slot);
  }
  return canonicalize(std::move(out));
}

std::string CliqueStore::canonical_text() const { return format_enumeration(cliques()); }

MaximalCliqueIndex MaximalCliqueIndex::bootstrap(const Graph& g) {
  MaximalCliqueIndex ix;
  auto cliques = enumerate_maximal_cliques(g);
  ix.apply_delta(cliques, {});
  return ix;
}

KCliqueIndex::KCliqueIndex(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
}

KCliqueIndex KCliqueIndex::bootstrap(const Graph& g, int k) {
  KCliqueIndex ix(k);
  auto cliques = enumerate_maximal_k_cliques(g, k);
  ix.apply_delta(cliques, {});
  return ix;
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::None: return "OK";
    case Violation::NotAClique: return "NotAClique";
    case Violation::UnknownMember: return "UnknownMember";
    case Violation::NonMaximal: return "NonMaximal";
    case Violation::Oversized: return "Oversized";
    case Violation::Duplicate: return "Duplicate";
    case Violation::IndexMismatch: return "IndexMismatch";
    case Violation::UncoveredVertex: return "UncoveredVertex";
  }
  return "?";
}

// Read access to the raw containers for the checker.
struct StoreInspector {
  static const auto& slots(const CliqueStore& s) { return s.slots_; }
  static const auto& by_vertex(const CliqueStore& s) { return s.by_vertex_; }
  static const auto& by_key(const CliqueStore& s) { return s.by_key_; }
};

namespace {

ConsistencyReport violation(Violation v, std::optional<Clique> c, std::optional<VertexId> w, std::string detail) {
  return ConsistencyReport{v, std::move(c), w, std::move(detail)};
}

bool is_clique(const Graph& g, const Clique& c) {
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!g.has_edge(m[i], m[j])) return false;
    }
  }
  return true;
}

// Some w outside c adjacent to every member, if any.
std::optional<VertexId> extension_witness(const Graph& g, const Clique& c) {
  for (VertexId w : g.vertices()) {
    if (c.contains(w)) continue;
    bool all = std::all_of(c.begin(), c.end(), [&](VertexId m) { return g.has_edge(m, w); });
    if (all) return w;
  }
  return std::nullopt;
}

// Storage invariants shared by both index flavors. `maximal_below` is the
// size under which stored sets must be maximal (SIZE_MAX for the unbounded
// enumeration).
ConsistencyReport check_store(const CliqueStore& ix, const Graph& g, std::size_t max_size, std::size_t maximal_below) {
  using Access = StoreInspector;
  const auto& slots = Access::slots(ix);
  const auto& by_vertex = Access::by_vertex(ix);
  const auto& by_key = Access::by_key(ix);

  std::set<CliqueKey> seen;
  std::size_t live = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) continue;
    ++live;
    const Clique& c = *slots[i];
    if (c.empty()) return violation(Violation::NotAClique, c, std::nullopt, "empty set stored");
    for (VertexId v : c) {
      if (!g.has_vertex(v)) return violation(Violation::UnknownMember, c, v, "member not in graph");
    }
    if (c.size() > max_size) return violation(Violation::Oversized, c, std::nullopt, "larger than k");
    if (!is_clique(g, c)) return violation(Violation::NotAClique, c, std::nullopt, "members not pairwise adjacent");
    if (c.size() < maximal_below) {
      if (auto w = extension_witness(g, c)) return violation(Violation::NonMaximal, c, *w, "extendable by vertex");
    }
    if (!seen.insert(canonical_key(c)).second) return violation(Violation::Duplicate, c, std::nullopt, "stored twice");
    auto key_it = by_key.find(canonical_key(c));
    if (key_it == by_key.end() || key_it->second.value != i) {
      return violation(Violation::IndexMismatch, c, std::nullopt, "key map does not point at slot");
    }
    for (VertexId v : c) {
      const auto& list = v < by_vertex.size() ? by_vertex[v] : std::vector<CliqueId>{};
      if (!std::binary_search(list.begin(), list.end(), CliqueId{i})) {
        return violation(Violation::IndexMismatch, c, v, "vertex list misses clique");
      }
    }
  }
  if (by_key.size() != live) return violation(Violation::IndexMismatch, std::nullopt, std::nullopt, "stale key entries");
  for (std::size_t v = 0; v < by_vertex.size(); ++v) {
    for (CliqueId id : by_vertex[v]) {
      if (id.value >= slots.size() || !slots[id.value] || !slots[id.value]->contains(static_cast<VertexId>(v))) {
        return violation(Violation::IndexMismatch, std::nullopt, static_cast<VertexId>(v), "vertex list has foreign id");
      }
    }
  }
  for (VertexId v : g.vertices()) {
    if (!ix.knows_vertex(v)) return violation(Violation::UncoveredVertex, std::nullopt, v, "vertex in no clique");
  }
  return {};
}

}  // namespace

ConsistencyReport check_consistency(const MaximalCliqueIndex& ix, const Graph& g) {
  return check_store(ix, g, SIZE_MAX, SIZE_MAX);
}

ConsistencyReport check_consistency(const KCliqueIndex& ix, const Graph& g) {
  auto k = static_cast<std::size_t>(ix.k());
  return check_store(ix, g, k, k);
}

}  // namespace dmce
