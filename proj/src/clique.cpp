#include "dmce/clique.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace dmce {

Clique::Clique(VertexSet members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Clique::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool Clique::is_subset_of(const Clique& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

CliqueKey canonical_key(const Clique& c) { return c.members(); }

std::size_t CliqueKeyHash::operator()(const CliqueKey& key) const noexcept {
  // FNV-1a over the member ids.
  std::uint64_t h = 1469598103934665603ull;
  for (VertexId v : key) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ key.size());
}

std::vector<Clique> canonicalize(std::vector<Clique> cliques) {
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::string to_string(const Clique& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.members()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& out, const Clique& c) { return out << '{' << to_string(c) << '}'; }

void write_enumeration(std::ostream& out, std::vector<Clique> cliques) {
  for (const auto& c : canonicalize(std::move(cliques))) out << to_string(c) << '\n';
}

std::string format_enumeration(std::vector<Clique> cliques) {
  std::ostringstream out;
  write_enumeration(out, std::move(cliques));
  return out.str();
}

std::vector<Clique> parse_enumeration(std::istream& in) {
  std::vector<Clique> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    VertexSet members;
    long long id = 0;
    while (fields >> id) {
      if (id < 0 || id > 0xffffffffLL) throw ParseError("line " + std::to_string(line_no) + ": bad vertex id");
      members.push_back(static_cast<VertexId>(id));
    }
    if (!fields.eof()) throw ParseError("line " + std::to_string(line_no) + ": expected vertex ids");
    out.emplace_back(std::move(members));
  }
  return out;
}

}  // namespace dmce
