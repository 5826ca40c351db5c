#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dmce/clique_index.hpp"
#include "dmce/static_oracle.hpp"
#include "support/oracles.hpp"

namespace dmce {

// Corrupts internal containers to exercise the consistency checker.
struct CliqueStoreTestAccess {
  static void drop_vertex_entry(CliqueStore& s, VertexId v, CliqueId id) {
    auto& list = s.by_vertex_[v];
    list.erase(std::find(list.begin(), list.end(), id));
  }
};

namespace {

using testing::edgeless;
using testing::graph_of;

std::vector<Clique> containing(const CliqueStore& ix, VertexId v) {
  std::vector<Clique> out;
  for (CliqueId id : ix.cliques_containing(v)) out.push_back(ix.at(id));
  return out;
}

TEST(Bootstrap, EdgelessGivesSingletons) {
  auto ix = MaximalCliqueIndex::bootstrap(edgeless(3));
  EXPECT_EQ(ix.cliques(), (std::vector<Clique>{{0}, {1}, {2}}));
}

TEST(Bootstrap, PathAndTriangle) {
  auto p3 = graph_of(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(MaximalCliqueIndex::bootstrap(p3).cliques(), testing::naive_maximal_cliques(p3));
  EXPECT_EQ(MaximalCliqueIndex::bootstrap(p3).cliques(), (std::vector<Clique>{{0, 1}, {1, 2}}));
  auto tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(MaximalCliqueIndex::bootstrap(tri).cliques(), (std::vector<Clique>{{0, 1, 2}}));
}

TEST(CliquesContaining, PathCounts) {
  auto ix = MaximalCliqueIndex::bootstrap(graph_of(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(containing(ix, 1), (std::vector<Clique>{{0, 1}, {1, 2}}));
  EXPECT_EQ(ix.count_containing(0), 1u);
  EXPECT_THROW(ix.cliques_containing(9), UnknownVertexError);

  auto iso = MaximalCliqueIndex::bootstrap(edgeless(2));
  EXPECT_EQ(containing(iso, 0), (std::vector<Clique>{{0}}));
}

TEST(CliquesContaining, DeterministicOrder) {
  auto g = graph_of(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  auto a = MaximalCliqueIndex::bootstrap(g);
  auto b = MaximalCliqueIndex::bootstrap(g);
  auto ia = a.cliques_containing(1);
  auto ib = b.cliques_containing(1);
  EXPECT_TRUE(std::equal(ia.begin(), ia.end(), ib.begin(), ib.end()));
}

TEST(ApplyDelta, PathClosesIntoTriangle) {
  auto g = graph_of(3, {{0, 1}, {1, 2}});
  auto ix = MaximalCliqueIndex::bootstrap(g);
  auto ids = ix.cliques_containing(1);
  std::vector<CliqueId> remove(ids.begin(), ids.end());
  auto added = ix.apply_delta(std::vector<Clique>{{0, 1, 2}}, remove);
  g.add_edge(0, 2);
  EXPECT_EQ(ix.cliques(), testing::naive_maximal_cliques(g));
  ASSERT_EQ(added.size(), 1u);
  // Ids are fresh, never reused.
  EXPECT_GT(added[0].value, std::max(remove[0].value, remove[1].value));
  EXPECT_TRUE(check_consistency(ix, g).ok());
}

TEST(ApplyDelta, EmptyDeltaChangesNothing) {
  auto ix = MaximalCliqueIndex::bootstrap(graph_of(3, {{0, 1}, {1, 2}}));
  auto before = ix.canonical_text();
  EXPECT_TRUE(ix.apply_delta({}, {}).empty());
  EXPECT_EQ(ix.canonical_text(), before);
}

TEST(ApplyDelta, RejectsDuplicatesAndUnknownIds) {
  auto ix = MaximalCliqueIndex::bootstrap(graph_of(3, {{0, 1}, {1, 2}}));
  auto before = ix.canonical_text();
  EXPECT_THROW(ix.apply_delta(std::vector<Clique>{{0, 1}}, {}), DuplicateCliqueError);
  EXPECT_THROW(ix.apply_delta(std::vector<Clique>{{0, 2}, {2, 0}}, {}), DuplicateCliqueError);
  EXPECT_THROW(ix.apply_delta({}, std::vector<CliqueId>{CliqueId{99}}), UnknownCliqueError);
  auto id = ix.cliques_containing(0)[0];
  EXPECT_THROW(ix.apply_delta({}, std::vector<CliqueId>{id, id}), UnknownCliqueError);
  EXPECT_EQ(ix.canonical_text(), before);
}

TEST(ApplyDelta, ReAddingARemovedSetInSameDeltaIsAllowed) {
  auto ix = MaximalCliqueIndex::bootstrap(graph_of(2, {{0, 1}}));
  auto id = ix.cliques_containing(0)[0];
  auto fresh = ix.apply_delta(std::vector<Clique>{{0, 1}}, std::vector<CliqueId>{id});
  EXPECT_NE(fresh[0], id);
  EXPECT_FALSE(ix.contains(id));
}

TEST(CheckConsistency, DetectsViolations) {
  auto p3 = graph_of(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(check_consistency(MaximalCliqueIndex::bootstrap(p3), p3).ok());

  auto tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  MaximalCliqueIndex partial;
  partial.apply_delta(std::vector<Clique>{{0, 1}, {2}}, {});
  auto report = check_consistency(partial, tri);
  EXPECT_EQ(report.violation, Violation::NonMaximal);
  EXPECT_EQ(report.clique, (Clique{0, 1}));

  MaximalCliqueIndex not_clique;
  not_clique.apply_delta(std::vector<Clique>{{0, 2}, {1}}, {});
  EXPECT_EQ(check_consistency(not_clique, p3).violation, Violation::NotAClique);

  MaximalCliqueIndex missing_vertex;
  missing_vertex.apply_delta(std::vector<Clique>{{0, 1}}, {});
  auto two_comp = graph_of(3, {{0, 1}});
  EXPECT_EQ(check_consistency(missing_vertex, two_comp).violation, Violation::UncoveredVertex);

  auto corrupted = MaximalCliqueIndex::bootstrap(p3);
  CliqueStoreTestAccess::drop_vertex_entry(corrupted, 1, corrupted.cliques_containing(1)[0]);
  EXPECT_EQ(check_consistency(corrupted, p3).violation, Violation::IndexMismatch);
}

TEST(CheckConsistency, KBoundAndMaximality) {
  auto tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  auto ok = KCliqueIndex::bootstrap(tri, 2);
  EXPECT_TRUE(check_consistency(ok, tri).ok());

  KCliqueIndex oversized(2);
  oversized.apply_delta(std::vector<Clique>{{0, 1, 2}}, {});
  EXPECT_EQ(check_consistency(oversized, tri).violation, Violation::Oversized);

  auto p3 = graph_of(3, {{0, 1}, {1, 2}});
  KCliqueIndex small(3);
  small.apply_delta(std::vector<Clique>{{0}, {0, 1}, {1, 2}}, {});
  EXPECT_EQ(check_consistency(small, p3).violation, Violation::NonMaximal);
}

TEST(KCliqueIndex, RejectsNonPositiveK) {
  EXPECT_THROW(KCliqueIndex(0), std::invalid_argument);
}

TEST(CliqueIndexProperty, ContainmentCountsSumToMemberCounts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = edgeless(11);
    for (Edge e : testing::random_edge_order(11, 0.35, rng)) g.add_edge(e);
    auto ix = MaximalCliqueIndex::bootstrap(g);
    std::size_t by_vertex = 0;
    for (VertexId v : g.vertices()) by_vertex += ix.count_containing(v);
    auto cs = ix.cliques();
    std::size_t members = std::accumulate(cs.begin(), cs.end(), std::size_t{0},
                                          [](std::size_t s, const Clique& c) { return s + c.size(); });
    ASSERT_EQ(by_vertex, members);
    ASSERT_TRUE(check_consistency(ix, g).ok());
  }
}

}  // namespace
}  // namespace dmce
