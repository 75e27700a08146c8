#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pertinent/digraph.hpp"
#include "pertinent/enumeration.hpp"
#include "pertinent/permanent.hpp"

using namespace pertinent;

TEST(Digraph, EdgesAndCycles) {
  auto g = Digraph::from_edges(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_EQ(g.edge_count(), 2);
  g.add_edge(3, 1);
  EXPECT_FALSE(is_acyclic(g));
  EXPECT_THROW(g.add_edge(2, 2), SpecViolation);
}

TEST(Digraph, FromFamilyCMatrix) {
  const auto m = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const auto g = matrix_to_digraph(m);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_THROW(matrix_to_digraph(BinaryMatrix::from_rows({{0, 1}, {0, 1}})), SpecViolation);
}

TEST(Digraph, PermanentOneIffAcyclicUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    const int slots = n * (n - 1);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << slots); ++a) {
      BinaryMatrix m = BinaryMatrix::identity(n);
      std::vector<std::uint32_t> adj(n, 0);
      int bit = 0;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          if ((a >> bit++) & 1u) {
            m.set(i, j, true);
            adj[i - 1] |= 1u << (j - 1);
          }
        }
      }
      const bool acyclic = is_acyclic(matrix_to_digraph(m));
      ASSERT_EQ(acyclic, oracle::dfs_acyclic(adj));
      ASSERT_EQ(permanent_ryser(m) == 1, acyclic) << m.to_string();
    }
  }
}

TEST(DagCensus, MatchesBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    const auto t = count_dags_by_edges(n);
    std::vector<std::uint64_t> got;
    for (const auto& c : t.coeffs()) got.push_back(c.convert_to<std::uint64_t>());
    EXPECT_EQ(got, oracle::dags_by_edges(n)) << n;
    EXPECT_EQ(t.route(), Route::dag_census);
  }
}

TEST(DagCensus, MatchesEnumerationAtFive) {
  EXPECT_TRUE(count_dags_by_edges(5).same_counts(count_pertinent(TypeSpec::make(Family::C, 5))));
}

TEST(DagCensus, SixVerticesAgreeWithRecurrence) {
  const auto t = count_dags_by_edges(6, {2, 0});
  EXPECT_EQ(t.total(), oracle::robinson(6));
  EXPECT_EQ(t[15], 720);
  EXPECT_EQ(t[0], 1);
  EXPECT_EQ(t[1], 30);
  EXPECT_THROW(count_dags_by_edges(7), DimensionError);
}
