#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hcut/brute.hpp"
#include "hcut/flow.hpp"
#include "support.hpp"

namespace hcut {
namespace {

std::set<std::vector<Vertex>> sides(const std::vector<Cut>& cuts) {
  std::set<std::vector<Vertex>> out;
  for (const auto& c : cuts) out.insert(c.side);
  return out;
}

TEST(EquivalentDigraph, SingleEdge) {
  Hypergraph h(2, {{{0, 1}, 5}});
  auto d = build_equivalent_digraph(h);
  EXPECT_EQ(d.network.num_nodes(), 4u);
  EXPECT_EQ(d.network.num_arcs(), 5u);
  EXPECT_EQ(d.network.tail(d.entry_arc(0, 1)), 1u);
  EXPECT_EQ(d.network.head(d.entry_arc(0, 1)), d.in_node(0));
  EXPECT_EQ(d.network.tail(d.exit_arc(0, 0)), d.out_node(0));
  EXPECT_TRUE(d.network.is_unbounded(d.exit_arc(0, 0)));
  EXPECT_FALSE(d.network.is_unbounded(d.bottleneck_arc(0)));
  EXPECT_EQ(d.network.capacity(d.bottleneck_arc(0)), 5);
  EXPECT_EQ(d.network.max_flow(0, 1), 5);
}

TEST(EquivalentDigraph, ArcCountAndConnectivity) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 150; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 9, .max_m = 14, .max_rank = 5, .max_capacity = 7});
    auto d = build_equivalent_digraph(h);
    EXPECT_EQ(d.network.num_arcs(), 2 * h.num_pins() + h.num_edges());
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(h.num_vertices() - 1));
    Vertex s = pick(rng), t = pick(rng);
    if (s == t) continue;
    EXPECT_EQ(st_connectivity(h, s, t), brute_st_connectivity(h, s, t));
  }
}

TEST(TightGraph, Examples) {
  Hypergraph g(3, {{{0, 1}}, {{1, 2}}});
  auto tg = tight_graph(g, compute_ordering(g, OrderingKind::kTight));
  EXPECT_EQ(tg.ends[0], (std::array<Vertex, 2>{0, 1}));
  EXPECT_EQ(tg.ends[1], (std::array<Vertex, 2>{1, 2}));

  // a = 0, x = 1, y = 2, z = 3; tight order a, x, z, y
  Hypergraph h(4, {{{0, 1}, 4}, {{0, 2}, 3}, {{0, 1, 3}, 4}, {{0, 2, 3}, 8}});
  auto ord = compute_ordering(h, OrderingKind::kTight);
  ASSERT_EQ(ord.order, (std::vector<Vertex>{0, 1, 3, 2}));
  auto t = tight_graph(h, ord);
  EXPECT_EQ(t.ends[0], (std::array<Vertex, 2>{0, 1}));
  EXPECT_EQ(t.ends[1], (std::array<Vertex, 2>{0, 2}));
  EXPECT_EQ(t.ends[2], (std::array<Vertex, 2>{1, 3}));
  EXPECT_EQ(t.ends[3], (std::array<Vertex, 2>{3, 2}));
}

TEST(TightGraph, PreservesInnerAttachment) {
  std::mt19937_64 rng(62);
  for (int round = 0; round < 150; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 8, .max_m = 12, .max_rank = 5, .max_capacity = 5});
    auto ord = compute_ordering(h, OrderingKind::kTight);
    auto tg = tight_graph(h, ord);
    std::vector<EdgeSpec> edges;
    for (EdgeId e = 0; e < h.num_edges(); ++e) edges.push_back({{tg.ends[e][0], tg.ends[e][1]}, tg.capacity[e]});
    Hypergraph g(h.num_vertices(), edges);
    std::vector<Vertex> prefix;
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
      prefix.push_back(ord.order[i]);
      for (std::size_t j = i + 1; j < ord.order.size(); ++j) {
        std::vector<Vertex> vj{ord.order[j]};
        EXPECT_EQ(capacity_within(g, prefix, vj), capacity_within(h, prefix, vj));
      }
    }
  }
}

TEST(MaxFlowLastPair, Examples) {
  Hypergraph p3(3, {{{0, 1}}, {{1, 2}}});
  EXPECT_EQ(max_flow_last_pair(p3).value, 1u);
  Hypergraph single(4, {{{0, 1, 2, 3}, 7}});
  EXPECT_EQ(max_flow_last_pair(single).value, 7u);
  EXPECT_THROW(max_flow_last_pair(Hypergraph(1, {})), std::invalid_argument);
}

TEST(MaxFlowLastPair, LiftedFlowIsMaximumAndFeasible) {
  std::mt19937_64 rng(63);
  for (int round = 0; round < 200; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 10, .max_m = 16, .max_rank = 5, .max_capacity = 6});
    auto res = max_flow_last_pair(h);
    EXPECT_EQ(res.value, pendant_pair(h, OrderingKind::kTight).value);
    EXPECT_EQ(res.value, brute_st_connectivity(h, res.s, res.t));
    const auto& net = res.digraph.network;
    for (std::size_t a = 0; a < net.num_arcs(); ++a) {
      EXPECT_GE(net.flow(a), 0);
      EXPECT_LE(net.flow(a), net.capacity(a));
    }
    for (std::size_t v = 0; v < net.num_nodes(); ++v) {
      FlowNetwork::Flow expected = v == res.s ? FlowNetwork::Flow(res.value) : v == res.t ? -FlowNetwork::Flow(res.value) : 0;
      EXPECT_EQ(net.excess_out(v), expected);
    }
    EXPECT_FALSE(net.residual_reach(res.s)[res.t]);
  }
}

TEST(EnumerateMinStCuts, Examples) {
  Hypergraph edge(2, {{{0, 1}}});
  auto d = build_equivalent_digraph(edge);
  d.network.max_flow(0, 1);
  EXPECT_EQ(enumerate_min_st_cuts(edge, d, 0, 1, 3).size(), 1u);

  Hypergraph p3(3, {{{0, 1}}, {{1, 2}}});
  auto dp = build_equivalent_digraph(p3);
  dp.network.max_flow(0, 2);
  auto cuts = enumerate_min_st_cuts(p3, dp, 0, 2, 3);
  EXPECT_EQ(sides(cuts), (std::set<std::vector<Vertex>>{{0}, {0, 1}}));
}

TEST(EnumerateMinStCuts, RejectsNonMaximumFlow) {
  Hypergraph p3(3, {{{0, 1}}, {{1, 2}}});
  auto d = build_equivalent_digraph(p3);
  EXPECT_THROW(enumerate_min_st_cuts(p3, d, 0, 2, 3), std::logic_error);
}

TEST(EnumerateMinStCuts, MatchesBruteForce) {
  std::mt19937_64 rng(64);
  for (int round = 0; round < 200; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 9, .max_m = 12, .max_rank = 4, .max_capacity = round % 2 ? Capacity{3} : Capacity{1}});
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(h.num_vertices() - 1));
    Vertex s = pick(rng), t = pick(rng);
    if (s == t) continue;
    auto all = brute_min_st_cuts(h, s, t);
    Capacity value = brute_st_connectivity(h, s, t);
    for (std::size_t ell : {std::size_t{1}, std::size_t{3}, all.size() + 1}) {
      auto d = build_equivalent_digraph(h);
      d.network.max_flow(s, t);
      auto cuts = enumerate_min_st_cuts(h, d, s, t, ell);
      EXPECT_EQ(cuts.size(), std::min(ell, all.size()));
      auto found = sides(cuts);
      EXPECT_EQ(found.size(), cuts.size());
      for (const auto& c : cuts) {
        EXPECT_EQ(c.value, value);
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), c.side));
      }
    }
  }
}

TEST(SplitOracle, Examples) {
  Hypergraph star(4, {{{0, 1}}, {{0, 2}}, {{0, 3}}});
  EXPECT_TRUE(std::holds_alternative<NoSplitPair>(split_oracle(star, 1)));
  // From an end vertex the last pair of P4 is the other end's edge, which
  // no split separates.
  Hypergraph p4(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}});
  auto pair = split_oracle(p4, 1);
  ASSERT_TRUE(std::holds_alternative<NoSplitPair>(pair));
  EXPECT_EQ(std::get<NoSplitPair>(pair).s, 2u);
  EXPECT_EQ(std::get<NoSplitPair>(pair).t, 3u);
  // Path 3-1-0-2 started at an inner vertex ends with the pair (2, 3).
  Hypergraph inner(4, {{{1, 3}}, {{0, 1}}, {{0, 2}}});
  auto verdict = split_oracle(inner, 1);
  ASSERT_TRUE(std::holds_alternative<Split>(verdict));
  auto side = std::get<Split>(verdict).cut.side;
  EXPECT_TRUE(side == (std::vector<Vertex>{1, 3}) || side == (std::vector<Vertex>{0, 2}));
  Hypergraph k4(4, {{{0, 1}}, {{0, 2}}, {{0, 3}}, {{1, 2}}, {{1, 3}}, {{2, 3}}});
  EXPECT_TRUE(std::holds_alternative<NoSplitPair>(split_oracle(k4, 3)));
  EXPECT_THROW(split_oracle(Hypergraph(3, {{{0, 1, 2}}}), 1), std::invalid_argument);
}

TEST(SplitOracle, SoundAndComplete) {
  std::mt19937_64 rng(65);
  int splits = 0, pairs = 0;
  for (int round = 0; round < 400; ++round) {
    auto h = testing::random_connected(rng, {.min_n = 4, .max_n = 10, .max_m = 10, .max_rank = 4, .max_capacity = round % 3 ? Capacity{1} : Capacity{3}});
    Capacity lambda = brute_mincut(h).value;
    std::vector<std::uint32_t> rank;
    if (round % 2) {
      rank.resize(h.num_vertices());
      std::iota(rank.begin(), rank.end(), 0u);
      std::shuffle(rank.begin(), rank.end(), rng);
    }
    auto verdict = split_oracle(h, lambda, rank);
    const std::size_t n = h.num_vertices();
    if (auto* split = std::get_if<Split>(&verdict)) {
      ++splits;
      EXPECT_EQ(cut_value(h, split->cut.side), lambda);
      EXPECT_GE(split->cut.side.size(), 2u);
      EXPECT_GE(n - split->cut.side.size(), 2u);
    } else {
      ++pairs;
      auto pair = std::get<NoSplitPair>(verdict);
      for (const auto& side : brute_all_mincuts(h)) {
        bool has_s = std::binary_search(side.begin(), side.end(), pair.s);
        bool has_t = std::binary_search(side.begin(), side.end(), pair.t);
        if (has_s == has_t) continue;
        EXPECT_TRUE(side.size() < 2 || n - side.size() < 2);
      }
    }
  }
  EXPECT_GT(splits, 10);
  EXPECT_GT(pairs, 20);
}

}  // namespace
}  // namespace hcut
