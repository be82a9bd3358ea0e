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

#include <set>

#include "gbfpum/error.hpp"
#include "gbfpum/signal.hpp"
#include "oracles.hpp"

namespace gbfpum {
namespace {

double rayleigh(const Graph& g, const SignalVector& x) {
  return (laplacian(g) * x).norm() / x.norm();
}

TEST(SeededNormal, FrozenPrefixAndMoments) {
  const SignalVector a = seeded_normal(20000, 42);
  EXPECT_EQ(a, seeded_normal(20000, 42));
  EXPECT_NE(a, seeded_normal(20000, 43));
  EXPECT_NEAR(a.mean(), 0.0, 0.03);
  EXPECT_NEAR((a.array() - a.mean()).square().mean(), 1.0, 0.05);
}

TEST(SynthSignal, DeterministicAndNormalized) {
  const Graph g = grid_graph(12, 9);
  const SignalVector x = synth_low_pass_signal(g, 7);
  EXPECT_EQ(x, synth_low_pass_signal(g, 7));
  EXPECT_DOUBLE_EQ(x.cwiseAbs().maxCoeff(), 1.0);
}

TEST(SynthSignal, SmootherThanNoise) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = grid_graph(10, 10);
    const SignalVector f = seeded_normal(100, seed);
    EXPECT_LT(rayleigh(g, low_pass(g, f)), rayleigh(g, f));
    EXPECT_LT(rayleigh(g, low_pass(g, f, 2)), rayleigh(g, low_pass(g, f, 1)));
  }
}

TEST(SynthSignal, ConstantPassesThrough) {
  const Graph g = testing::karate();
  const SignalVector f = SignalVector::Constant(34, 2.5);
  EXPECT_LT((low_pass(g, f) - f).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SynthSignal, MatchesDenseFilter) {
  const Graph g = grid_graph(5, 6);
  const SignalVector f = seeded_normal(30, 3);
  const SignalVector expected = testing::dense_kernel(g, 1.0, 2) * f;
  EXPECT_LT((low_pass(g, f, 2) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SynthSignal, ErrorPaths) {
  const Graph split = testing::make_graph({{0, 1}, {2, 3}}, 4);
  EXPECT_THROW(synth_low_pass_signal(split, 1), ValidationError);
  EXPECT_THROW(low_pass(grid_graph(2, 2), SignalVector::Ones(3)), ValidationError);
  EXPECT_THROW(low_pass(grid_graph(2, 2), SignalVector::Ones(4), 0), ValidationError);
}

TEST(UniformSamples, DistinctSortedDeterministic) {
  const NodeSet w = uniform_samples(1000, 200, 9);
  EXPECT_EQ(w.size(), 200U);
  EXPECT_TRUE(is_node_set(w));
  EXPECT_GE(w.front(), 0);
  EXPECT_LT(w.back(), 1000);
  EXPECT_EQ(w, uniform_samples(1000, 200, 9));
  EXPECT_NE(w, uniform_samples(1000, 200, 10));
  EXPECT_EQ(uniform_samples(5, 5, 1), (NodeSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(uniform_samples(5, 0, 1).empty());
  EXPECT_THROW(uniform_samples(5, 6, 1), ValidationError);
}

TEST(UniformSamples, RoughlyUniform) {
  std::vector<int> hits(10, 0);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    for (Vertex v : uniform_samples(10, 3, seed)) ++hits[v];
  }
  for (int h : hits) EXPECT_NEAR(h, 600, 90);
}

TEST(GridGraph, Shape) {
  const Graph g = grid_graph(3, 4);
  EXPECT_EQ(g.node_count(), 12);
  EXPECT_EQ(g.edge_count(), 3 * 3 + 2 * 4);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 5));
  EXPECT_FALSE(g.has_edge(3, 4));
  EXPECT_TRUE(is_connected(g));
  EXPECT_THROW(grid_graph(0, 3), ValidationError);
}

}  // namespace
}  // namespace gbfpum
