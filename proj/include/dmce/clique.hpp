#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "dmce/graph.hpp"

namespace dmce {

// A vertex set kept sorted ascending without duplicates.
class Clique {
 public:
  Clique() = default;
  explicit Clique(VertexSet members);
  Clique(std::initializer_list<VertexId> members) : Clique(VertexSet(members)) {}

  const VertexSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  bool is_subset_of(const Clique& other) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Clique&, const Clique&) = default;
  // Lexicographic as integer sequences.
  friend auto operator<=>(const Clique& a, const Clique& b) { return a.members_ <=> b.members_; }

 private:
  VertexSet members_;
};

// The key is the sorted member list itself, so key equality is exact.
using CliqueKey = VertexSet;
CliqueKey canonical_key(const Clique& c);

struct CliqueKeyHash {
  std::size_t operator()(const CliqueKey& key) const noexcept;
};

// Handle into a clique store; never reused within one store.
struct CliqueId {
  std::uint64_t value{};
  friend auto operator<=>(const CliqueId&, const CliqueId&) = default;
};

// Canonical enumeration text: one clique per line, members ascending and
// space separated, lines in lexicographic integer-sequence order.
std::vector<Clique> canonicalize(std::vector<Clique> cliques);
std::string format_enumeration(std::vector<Clique> cliques);
void write_enumeration(std::ostream& out, std::vector<Clique> cliques);
std::vector<Clique> parse_enumeration(std::istream& in);

std::string to_string(const Clique& c);
std::ostream& operator<<(std::ostream& out, const Clique& c);

}  // namespace dmce

template <>
struct std::hash<dmce::CliqueId> {
  std::size_t operator()(dmce::CliqueId id) const noexcept { return std::hash<std::uint64_t>{}(id.value); }
};
