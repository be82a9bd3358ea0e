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

#include <nlohmann/json.hpp>

#include <functional>
#include <limits>
#include <sstream>

#include "gbfpum/error.hpp"
#include "gbfpum/io.hpp"
#include "gbfpum/signal.hpp"
#include "oracles.hpp"

namespace gbfpum {
namespace {

LabeledGraph parse(const std::string& text, std::optional<Vertex> n = std::nullopt) {
  std::istringstream in(text);
  return read_edge_list(in, n);
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

TEST(EdgeList, NumericWithCommentsAndWeights) {
  const LabeledGraph lg = parse("# header\n0 1\n\n1 2 1\n2\t0\n");
  EXPECT_EQ(lg.graph().node_count(), 3);
  EXPECT_EQ(lg.graph().edge_count(), 3);
  EXPECT_EQ(lg.label(2), "2");
  EXPECT_EQ(lg.at("1"), 1);
}

TEST(EdgeList, ExplicitCountAddsIsolatedVertices) {
  const LabeledGraph lg = parse("0 1\n", 4);
  EXPECT_EQ(lg.graph().node_count(), 4);
  EXPECT_THROW(parse("0 5\n", 4), ValidationError);
}

TEST(EdgeList, StringLabelsInFirstAppearanceOrder) {
  const LabeledGraph lg = parse("b a\na c\n");
  EXPECT_EQ(lg.labels(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_TRUE(lg.graph().has_edge(lg.at("a"), lg.at("c")));
  EXPECT_FALSE(lg.find("z").has_value());
  EXPECT_THROW(lg.at("z"), ValidationError);
  EXPECT_THROW(parse("b a\n", 3), ValidationError);
}

TEST(EdgeList, Rejections) {
  EXPECT_NE(error_of([] { parse("0 1\n1 2 0.5\n"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { parse("0 1\n3\n"); }).find("line 2"), std::string::npos);
  EXPECT_THROW(parse("1 1\n"), ValidationError);
  EXPECT_THROW(read_edge_list(std::filesystem::path("/nonexistent/graph.txt")), ValidationError);
}

TEST(EdgeList, RoundTrip) {
  const Graph g = testing::karate();
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(parse(out.str()).graph(), g);
  const LabeledGraph named = parse("x y\ny z\n");
  std::ostringstream named_out;
  write_edge_list(named_out, named.graph(), &named.labels());
  EXPECT_EQ(named_out.str(), "x y\ny z\n");
}

TEST(SignalCsv, RoundTripIsExact) {
  const LabeledGraph lg = LabeledGraph::numeric(grid_graph(7, 7));
  const SignalVector x = synth_low_pass_signal(lg.graph(), 3);
  std::ostringstream out;
  write_signal_csv(out, lg, x);
  std::istringstream in(out.str());
  const PartialSignal back = read_signal_csv(in, lg);
  EXPECT_EQ(back.dense(49), x);
}

TEST(SignalCsv, PartialSignalsAndLookups) {
  const LabeledGraph lg = parse("a b\nb c\nc d\n");
  std::istringstream in("node,value\nc,2.5\na,-1\n");
  const PartialSignal s = read_signal_csv(in, lg);
  EXPECT_EQ(s.nodes, (NodeSet{lg.at("a"), lg.at("c")}));
  EXPECT_EQ(s.at(NodeSet{lg.at("c")})[0], 2.5);
  EXPECT_THROW(s.dense(4), ValidationError);
  EXPECT_THROW(s.at(NodeSet{lg.at("b")}), ValidationError);
  std::ostringstream out;
  write_signal_csv(out, lg, s);
  EXPECT_EQ(out.str(), "node,value\na,-1\nc,2.5\n");
}

TEST(SignalCsv, Rejections) {
  const LabeledGraph lg = parse("0 1\n");
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return read_signal_csv(in, lg);
  };
  EXPECT_THROW(read(""), ValidationError);
  EXPECT_THROW(read("vertex,value\n0,1\n"), ValidationError);
  EXPECT_NE(error_of([&] { read("node,value\n0,1\n7,2\n"); }).find("line 3"), std::string::npos);
  EXPECT_THROW(read("node,value\n0,abc\n"), ValidationError);
  EXPECT_THROW(read("node,value\n0,1\n0,2\n"), ValidationError);
  EXPECT_THROW(read("node,value\n0\n"), ValidationError);
}

TEST(SampleIds, ReadWrite) {
  const LabeledGraph lg = parse("a b\nb c\n");
  std::istringstream in("# leaders\nc a\n\nc\n");
  EXPECT_EQ(read_sample_ids(in, lg), (NodeSet{0, 2}));
  std::ostringstream out;
  write_sample_ids(out, lg, NodeSet{0, 2});
  EXPECT_EQ(out.str(), "a\nc\n");
  std::istringstream bad("a q\n");
  EXPECT_THROW(read_sample_ids(bad, lg), ValidationError);
}

TEST(PartitionJson, RoundTrip) {
  ExpandedPartition ep;
  ep.origin = Partition{{{0, 1}, {2, 3}}};
  ep.communities = {{0, 1, 2}, {1, 2, 3}};
  const nlohmann::json j = nlohmann::json::parse(partition_to_json(ep).dump());
  EXPECT_EQ(expanded_partition_from_json(j), ep);
  EXPECT_EQ(partition_from_json(j), ep.origin);
  EXPECT_EQ(partition_to_json(ep.origin).dump(), R"({"communities":[[0,1],[2,3]]})");
  EXPECT_THROW(partition_from_json(nlohmann::json{{"groups", 1}}), ValidationError);
  nlohmann::json misaligned = j;
  misaligned["expanded"].erase(1);
  EXPECT_THROW(expanded_partition_from_json(misaligned), ValidationError);
}

TEST(PlotCsv, Memberships) {
  const LabeledGraph lg = LabeledGraph::numeric(testing::path_graph(4));
  ExpandedPartition ep;
  ep.origin = Partition{{{0, 1}, {2, 3}}};
  ep.communities = {{0, 1, 2}, {1, 2, 3}};
  std::ostringstream out;
  write_community_plot_csv(out, lg, ep);
  EXPECT_EQ(out.str(), "node,community,expanded_memberships\n0,0,0\n1,0,0;1\n2,1,0;1\n3,1,1\n");
}

TEST(FlowSlice, SelectsTimestamp) {
  const LabeledGraph lg = parse("s1 s2\ns2 s3\n");
  std::istringstream three("node,timestamp,flow\ns1,t0,1.5\ns2,t0,2\ns3,t0,3\n");
  EXPECT_EQ(read_flow_slice(three, lg, "t0").values, (std::vector<double>{1.5, 2.0, 3.0}));
  std::istringstream two("node,timestamp,flow\ns1,t0,1\ns1,t1,4\ns3,t1,5\ns2,t0,2\n");
  const PartialSignal t1 = read_flow_slice(two, lg, "t1");
  EXPECT_EQ(t1.nodes, (NodeSet{0, 2}));
  EXPECT_EQ(t1.values, (std::vector<double>{4.0, 5.0}));
}

TEST(FlowSlice, Rejections) {
  const LabeledGraph lg = parse("s1 s2\n");
  auto read = [&](const std::string& text) {
    std::istringstream in(text);
    return read_flow_slice(in, lg, "t0");
  };
  EXPECT_THROW(read("node,value\n"), ValidationError);
  EXPECT_THROW(read("node,timestamp,flow\nzz,t0,1\n"), ValidationError);
  EXPECT_THROW(read("node,timestamp,flow\ns1,t0\n"), ValidationError);
  EXPECT_THROW(read("node,timestamp,flow\ns1,t0,x\n"), ValidationError);
  EXPECT_THROW(read("node,timestamp,flow\ns1,t0,1\ns1,t0,2\n"), ValidationError);
  EXPECT_NO_THROW(read("node,timestamp,flow\ns1,t0,1\ns1,t1,2\n"));
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 1e22, 0.0, std::numeric_limits<double>::max()}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

}  // namespace
}  // namespace gbfpum
