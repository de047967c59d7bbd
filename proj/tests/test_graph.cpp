#include <gtest/gtest.h>

#include <vector>

#include "gwspec/graph.hpp"
#include "gwspec/integer.hpp"

using namespace gwspec;

namespace {

// Floyd-Warshall on the adjacency matrix; unreachable stays at `inf`.
IntMatrix floyd_warshall(const IntMatrix& adj) {
  const auto n = adj.rows();
  const std::int64_t inf = 1 << 20;
  IntMatrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = i == j ? 0 : (adj(i, j) ? 1 : inf);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    }
  }
  return d;
}

}  // namespace

TEST(Graph, BasicFamilies) {
  const auto k5 = complete(5);
  EXPECT_EQ(k5.order(), 5u);
  EXPECT_EQ(k5.edge_count(), 10u);
  EXPECT_EQ(regular_degree(k5), 4u);
  const auto c7 = cycle(7);
  EXPECT_EQ(c7.edge_count(), 7u);
  EXPECT_EQ(regular_degree(c7), 2u);
  EXPECT_THROW(cycle(2), invalid_parameter);
  const auto three_k2 = copies(3, complete(2));
  EXPECT_EQ(component_count(three_k2), 3u);
  EXPECT_FALSE(is_connected(three_k2));
  EXPECT_THROW(distance_matrix(three_k2), not_connected);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), invalid_parameter);
  EXPECT_THROW(Graph(3, {{0, 3}}), invalid_parameter);
  EXPECT_EQ(Graph(3, {{0, 1}, {1, 0}}).edge_count(), 1u);
}

TEST(Graph, JoinAddsAllCrossEdges) {
  const auto g = join(complete(2), cycle(4));
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.edge_count(), 1u + 4u + 8u);
  for (std::size_t u = 0; u < 2; ++u) {
    for (std::size_t v = 2; v < 6; ++v) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(Graph, WheelParamsValidation) {
  EXPECT_THROW(WheelParams::make(0, 1, 3), invalid_parameter);
  EXPECT_THROW(WheelParams::make(1, 0, 3), invalid_parameter);
  EXPECT_THROW(WheelParams::make(1, 1, 2), invalid_parameter);
  EXPECT_THROW(generalized_wheel({5000, 2, 3}), invalid_parameter);
  EXPECT_EQ(WheelParams::make(3, 4, 5).order(), 17);
}

TEST(Graph, GeneralizedWheelStructure) {
  const WheelParams p{3, 4, 5};
  const auto g = generalized_wheel(p);
  EXPECT_EQ(g.order(), 17u);
  // 3 * C(4,2) clique edges, 5 rim edges, 12 * 5 spokes.
  EXPECT_EQ(g.edge_count(), 18u + 5u + 60u);
  EXPECT_EQ(g.degree(0), 3u + 5u);
  EXPECT_EQ(g.degree(12), 12u + 2u);
  EXPECT_EQ(diameter(g), 2);
}

TEST(Graph, DistanceMatrixMatchesFloydWarshall) {
  for (const auto& g : {generalized_wheel({1, 1, 9}), generalized_wheel({2, 3, 7}), cycle(11), complete(4),
                        join(copies(2, complete(3)), copies(3, complete(1)))}) {
    const IntMatrix d = distance_matrix(g);
    EXPECT_EQ(d, floyd_warshall(adjacency_matrix(g)));
    EXPECT_EQ(d, d.transpose());
  }
}

TEST(Graph, TransmissionAndWiener) {
  // Wiener index of C_n: n^3/8 for even n, n(n^2-1)/8 for odd n.
  EXPECT_EQ(wiener_index(cycle(8)), 64);
  EXPECT_EQ(wiener_index(cycle(9)), 90);
  EXPECT_EQ(wiener_index(complete(6)), 15);
  const auto g = generalized_wheel({2, 2, 6});
  const IntMatrix d = distance_matrix(g);
  const IntMatrix tr = transmission_matrix(g);
  for (Eigen::Index i = 0; i < d.rows(); ++i) EXPECT_EQ(tr(i, i), d.row(i).sum());
  EXPECT_EQ(dq_matrix(g), tr + d);
  EXPECT_EQ(dl_matrix(g), tr - d);
  EXPECT_EQ(dq_matrix(g).trace(), 2 * wiener_index(g));
  EXPECT_EQ(dl_matrix(g).rowwise().sum(), IntMatrix::Zero(d.rows(), 1));
}
