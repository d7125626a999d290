#include <gtest/gtest.h>

#include <random>

#include "hcut/brute.hpp"
#include "hcut/cut.hpp"
#include "hcut/flow.hpp"
#include "hcut/ordering.hpp"
#include "support.hpp"

namespace hcut {
namespace {

constexpr OrderingKind kAllKinds[] = {OrderingKind::kMA, OrderingKind::kTight, OrderingKind::kQueyranne};

// a = 0, x = 1, y = 2, z = 3
Hypergraph four_edge_example() {
  return Hypergraph(4, {{{0, 1}, 4}, {{0, 2}, 3}, {{0, 1, 3}, 4}, {{0, 2, 3}, 8}});
}

Capacity key_against(const Hypergraph& h, OrderingKind kind, const std::vector<Vertex>& prefix, Vertex v) {
  std::vector<Vertex> single{v};
  Capacity d = capacity_between(h, {prefix, single});
  Capacity dp = capacity_within(h, prefix, single);
  switch (kind) {
    case OrderingKind::kMA: return d;
    case OrderingKind::kTight: return dp;
    case OrderingKind::kQueyranne: return d + dp;
  }
  return 0;
}

TEST(Ordering, SecondVertexDependsOnKind) {
  auto h = four_edge_example();
  EXPECT_EQ(compute_ordering(h, OrderingKind::kMA).order[1], 3u);
  EXPECT_EQ(compute_ordering(h, OrderingKind::kTight).order[1], 1u);
  EXPECT_EQ(compute_ordering(h, OrderingKind::kQueyranne).order[1], 2u);
}

TEST(Ordering, FullMAOrderOnExample) {
  auto ord = compute_ordering(four_edge_example(), OrderingKind::kMA);
  EXPECT_EQ(ord.order, (std::vector<Vertex>{0, 3, 2, 1}));
  EXPECT_EQ(ord.attach, (std::vector<Capacity>{0, 12, 11, 8}));
}

TEST(Ordering, SingleVertex) {
  Hypergraph h(1, {});
  for (auto kind : kAllKinds) EXPECT_EQ(compute_ordering(h, kind).order, std::vector<Vertex>{0});
}

TEST(Ordering, RejectsBadArguments) {
  auto h = four_edge_example();
  EXPECT_THROW(compute_ordering(h, OrderingKind::kMA, 4), std::invalid_argument);
  std::vector<std::uint32_t> rank{0, 1};
  EXPECT_THROW(compute_ordering(h, OrderingKind::kMA, 0, rank), std::invalid_argument);
  EXPECT_THROW(compute_ordering(Hypergraph(0, {}), OrderingKind::kMA), std::invalid_argument);
}

TEST(Ordering, GreedyMaximalAndConsistent) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 9, .max_m = 14, .max_rank = 5, .max_capacity = 5});
    std::size_t n = h.num_vertices();
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    Vertex start = pick(rng);
    for (auto kind : kAllKinds) {
      auto ord = compute_ordering(h, kind, start);
      ASSERT_EQ(ord.order.size(), n);
      EXPECT_EQ(ord.order[0], start);
      std::vector<bool> seen(n, false);
      for (Vertex v : ord.order) {
        ASSERT_FALSE(seen[v]);
        seen[v] = true;
      }
      std::vector<Vertex> prefix;
      for (std::size_t i = 0; i < n; ++i) {
        Vertex v = ord.order[i];
        EXPECT_EQ(ord.position[v], i);
        if (i > 0) {
          Capacity key = key_against(h, kind, prefix, v);
          EXPECT_EQ(ord.attach[i], key);
          EXPECT_EQ(ord.adjacency[i], key_against(h, OrderingKind::kMA, prefix, v));
          EXPECT_EQ(ord.inner[i], key_against(h, OrderingKind::kTight, prefix, v));
          for (std::size_t j = i + 1; j < n; ++j) EXPECT_GE(key, key_against(h, kind, prefix, ord.order[j]));
        }
        prefix.push_back(v);
      }
    }
  }
}

TEST(Ordering, TieRankBreaksTies) {
  Hypergraph h(4, {{{0, 1}}, {{0, 2}}, {{0, 3}}});
  EXPECT_EQ(compute_ordering(h, OrderingKind::kMA).order, (std::vector<Vertex>{0, 1, 2, 3}));
  std::vector<std::uint32_t> rank{0, 3, 2, 1};
  EXPECT_EQ(compute_ordering(h, OrderingKind::kMA, 0, rank).order, (std::vector<Vertex>{0, 3, 2, 1}));
}

TEST(HeadOrdering, Examples) {
  Hypergraph tri(3, {{{1, 2}}, {{0, 2}}, {{0, 1}}});
  auto ord = compute_ordering(tri, OrderingKind::kMA);
  ASSERT_EQ(ord.order, (std::vector<Vertex>{0, 1, 2}));
  auto heads = head_ordering(tri, ord);
  EXPECT_EQ(heads.edge_order, (std::vector<EdgeId>{1, 2, 0}));  // ac, ab, bc
  EXPECT_EQ(heads.head, (std::vector<Vertex>{1, 0, 0}));

  Hypergraph single(4, {{{1, 2, 3}}});
  auto one = head_ordering(single, compute_ordering(single, OrderingKind::kMA, 2));
  EXPECT_EQ(one.edge_order, std::vector<EdgeId>{0});
  EXPECT_EQ(one.head, std::vector<Vertex>{2});

  Hypergraph p4(4, {{{0, 1}}, {{1, 2}}, {{2, 3}}});
  EXPECT_EQ(head_ordering(p4, compute_ordering(p4, OrderingKind::kMA)).edge_order, (std::vector<EdgeId>{0, 1, 2}));
}

TEST(HeadOrdering, SortedByHeadPositionStably) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    auto h = testing::random_hypergraph(rng);
    auto ord = compute_ordering(h, OrderingKind::kMA);
    auto heads = head_ordering(h, ord);
    ASSERT_EQ(heads.edge_order.size(), h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      for (Vertex v : h.pins(e)) EXPECT_LE(ord.position[heads.head[e]], ord.position[v]);
    }
    for (std::size_t i = 1; i < heads.edge_order.size(); ++i) {
      EdgeId a = heads.edge_order[i - 1], b = heads.edge_order[i];
      auto pa = ord.position[heads.head[a]], pb = ord.position[heads.head[b]];
      EXPECT_TRUE(pa < pb || (pa == pb && a < b));
    }
  }
}

TEST(PendantPair, Examples) {
  Hypergraph single(3, {{{0, 1, 2}}});
  for (auto kind : kAllKinds) EXPECT_EQ(pendant_pair(single, kind).value, 1u);
  Hypergraph p3(3, {{{0, 1}}, {{1, 2}}});
  auto pair = pendant_pair(p3, OrderingKind::kMA);
  EXPECT_EQ(pair.s, 1u);
  EXPECT_EQ(pair.t, 2u);
  EXPECT_EQ(pair.value, 1u);
  EXPECT_THROW(pendant_pair(Hypergraph(1, {}), OrderingKind::kMA), std::invalid_argument);
}

TEST(PendantPair, ValueIsLocalConnectivity) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 10, .max_m = 16, .max_rank = 5, .max_capacity = 6});
    for (auto kind : kAllKinds) {
      auto pair = pendant_pair(h, kind);
      EXPECT_EQ(pair.value, brute_st_connectivity(h, pair.s, pair.t)) << to_string(kind);
      EXPECT_EQ(pair.value, st_connectivity(h, pair.s, pair.t)) << to_string(kind);
      EXPECT_EQ(pair.value, h.degree(pair.t)) << to_string(kind);
    }
  }
}

TEST(Ordering, MAConsecutiveConnectivityBound) {
  std::mt19937_64 rng(24);
  for (int round = 0; round < 150; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 9, .max_m = 14, .max_rank = 5, .max_capacity = 5});
    auto ord = compute_ordering(h, OrderingKind::kMA);
    for (std::size_t i = 1; i < ord.order.size(); ++i) {
      EXPECT_GE(brute_st_connectivity(h, ord.order[i - 1], ord.order[i]), ord.adjacency[i]);
    }
  }
}

}  // namespace
}  // namespace hcut
