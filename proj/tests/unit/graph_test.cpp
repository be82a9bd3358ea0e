/*
 * Copyright 2026 The gbfpum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>

#include "gbfpum/error.hpp"
#include "gbfpum/graph.hpp"
#include "oracles.hpp"

namespace gbfpum {
namespace {

using testing::cycle_graph;
using testing::make_graph;
using testing::path_graph;

TEST(GraphBuild, SingleEdge) {
  const Graph g = make_graph({{0, 1}}, 2);
  EXPECT_EQ(g.node_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 1);
}

TEST(GraphBuild, ReversedPairCollapses) {
  const Graph g = make_graph({{0, 1}, {1, 0}, {0, 1}}, 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(GraphBuild, RejectsSelfLoop) {
  EXPECT_THROW(make_graph({{0, 1}, {2, 2}}, 3), ValidationError);
}

TEST(GraphBuild, RejectsOutOfRangeId) {
  EXPECT_THROW(make_graph({{0, 2}}, 2), ValidationError);
  EXPECT_THROW(make_graph({{-1, 0}}, 2), ValidationError);
}

TEST(GraphBuild, KarateCounts) {
  const Graph g = testing::karate();
  EXPECT_EQ(g.node_count(), 34);
  EXPECT_EQ(g.edge_count(), 78);
  EXPECT_EQ(g.degree(testing::kAdministrator), 17);
  EXPECT_EQ(g.degree(testing::kInstructor), 16);
}

TEST(GraphBuild, NeighborsSortedAndEdgesRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected_graph(15, 0.2, rng);
    for (Vertex u = 0; u < g.node_count(); ++u) {
      EXPECT_TRUE(is_node_set(g.neighbors(u)));
      for (Vertex w : g.neighbors(u)) {
        EXPECT_TRUE(g.has_edge(w, u));
        EXPECT_GE(g.arc_index(u, w), g.arc_begin(u));
      }
    }
    const auto edges = g.edges();
    EXPECT_EQ(Graph::from_edge_list(edges, g.node_count()), g);
  }
}

TEST(GraphBuild, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_connected_graph(1 + trial % 25, 0.15, rng);
    std::int64_t total = 0;
    for (Vertex u = 0; u < g.node_count(); ++u) total += g.degree(u);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Laplacian, SingleEdge) {
  const Eigen::MatrixXd l = Eigen::MatrixXd(laplacian(make_graph({{0, 1}}, 2)));
  Eigen::Matrix2d expected;
  expected << 1, -1, -1, 1;
  EXPECT_EQ(l, expected);
}

TEST(Laplacian, EdgelessIsZero) {
  const Eigen::MatrixXd l = Eigen::MatrixXd(laplacian(make_graph({}, 2)));
  EXPECT_EQ(l, Eigen::MatrixXd::Zero(2, 2));
}

TEST(Laplacian, Triangle) {
  const Eigen::MatrixXd l = Eigen::MatrixXd(laplacian(make_graph({{0, 1}, {1, 2}, {0, 2}}, 3)));
  const Eigen::MatrixXd expected =
      2.0 * Eigen::MatrixXd::Identity(3, 3) -
      (Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3));
  EXPECT_EQ(l, expected);
}

TEST(Laplacian, AnnihilatesConstantsExactly) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_connected_graph(2 + trial, 0.1, rng);
    const Eigen::VectorXd y = laplacian(g) * Eigen::VectorXd::Ones(g.node_count());
    EXPECT_EQ(y.cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(Eigen::MatrixXd(laplacian(g)), testing::dense_laplacian(g));
  }
}

TEST(BfsWithin, PathRadii) {
  const Graph g = path_graph(4);
  EXPECT_EQ(bfs_within(g, 0, 1), (NodeSet{0, 1}));
  EXPECT_EQ(bfs_within(g, 0, 0), (NodeSet{0}));
}

TEST(BfsWithin, CycleWrapsAround) {
  EXPECT_EQ(bfs_within(cycle_graph(6), 0, 2), (NodeSet{0, 1, 2, 4, 5}));
}

TEST(BfsWithin, FullRadiusGivesComponent) {
  const Graph g = make_graph({{0, 1}, {1, 2}, {3, 4}}, 6);
  EXPECT_EQ(bfs_within(g, 2, 6), (NodeSet{0, 1, 2}));
  EXPECT_EQ(bfs_within(g, 5, 6), (NodeSet{5}));
}

TEST(BfsWithin, BoundedBfsMatchesFreshSearch) {
  std::mt19937_64 rng(8);
  const Graph g = testing::random_connected_graph(30, 0.05, rng);
  BoundedBfs bfs(g);
  for (Vertex src = 0; src < g.node_count(); ++src) {
    for (int radius = 0; radius < 4; ++radius) {
      std::vector<Vertex> out{};
      bfs.ball(src, radius, out);
      EXPECT_EQ(make_node_set(out), bfs_within(g, src, radius));
    }
  }
}

TEST(InducedSubgraph, TrianglePair) {
  const Graph g = make_graph({{0, 1}, {1, 2}, {0, 2}}, 3);
  const NodeSet s{0, 1};
  const Subgraph sub = induced_subgraph(g, s);
  EXPECT_EQ(sub.graph, make_graph({{0, 1}}, 2));
  EXPECT_EQ(sub.to_parent, s);
  EXPECT_EQ(sub.to_local(2), -1);
}

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  const Graph g = testing::karate();
  NodeSet all(34);
  for (Vertex v = 0; v < 34; ++v) all[v] = v;
  EXPECT_EQ(induced_subgraph(g, all).graph, g);
}

TEST(InducedSubgraph, KarateFactionEdgeCountMatchesFilter) {
  const Graph g = testing::karate();
  for (const NodeSet& faction : testing::karate_factions().communities) {
    std::int64_t expected = 0;
    for (auto [u, v] : g.edges()) expected += contains(faction, u) && contains(faction, v);
    const Subgraph sub = induced_subgraph(g, faction);
    EXPECT_EQ(sub.graph.edge_count(), expected);
    for (auto [a, b] : sub.graph.edges()) {
      EXPECT_TRUE(g.has_edge(sub.to_parent[a], sub.to_parent[b]));
    }
  }
}

TEST(InducedSubgraph, RejectsEmptyAndOutOfRange) {
  const Graph g = path_graph(3);
  EXPECT_THROW(induced_subgraph(g, NodeSet{}), ValidationError);
  EXPECT_THROW(induced_subgraph(g, NodeSet{1, 3}), ValidationError);
}

TEST(InducedSubgraph, UnsortedInputIsNormalized) {
  const Graph g = path_graph(3);
  EXPECT_EQ(induced_subgraph(g, std::vector<Vertex>{2, 1}).to_parent, (NodeSet{1, 2}));
}

TEST(Components, EdgePlusIsolatedVertex) {
  const auto cs = connected_components(make_graph({{0, 1}}, 3));
  EXPECT_EQ(cs, (std::vector<NodeSet>{{0, 1}, {2}}));
}

TEST(Components, ConnectedGraphIsOneComponent) {
  const auto cs = connected_components(testing::karate());
  ASSERT_EQ(cs.size(), 1U);
  EXPECT_EQ(cs[0].size(), 34U);
  EXPECT_TRUE(is_connected(testing::karate()));
}

TEST(Components, TwoTriangles) {
  const Graph g = make_graph({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, 6);
  EXPECT_EQ(connected_components(g), (std::vector<NodeSet>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(is_connected(g));
}

TEST(NodeSetHelpers, Basics) {
  EXPECT_EQ(make_node_set({3, 1, 3, 2}), (NodeSet{1, 2, 3}));
  EXPECT_TRUE(is_node_set(NodeSet{1, 4}));
  EXPECT_FALSE(is_node_set(NodeSet{1, 1}));
  EXPECT_TRUE(contains(NodeSet{1, 4, 9}, 4));
  EXPECT_FALSE(contains(NodeSet{1, 4, 9}, 5));
}

}  // namespace
}  // namespace gbfpum
