#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hcut/io.hpp"
#include "support.hpp"

namespace hcut {
namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ReadHypergraph, Uncapacitated) {
  auto file = parse_hypergraph("% path\n3 4\n1 2\n\n2 3\n3 4\n");
  EXPECT_EQ(file.fmt, 0);
  EXPECT_EQ(file.graph.num_vertices(), 4u);
  EXPECT_EQ(file.graph.num_edges(), 3u);
  EXPECT_EQ(file.graph.pins(2)[0], 2u);
}

TEST(ReadHypergraph, Capacitated) {
  auto file = parse_hypergraph("2 3 1\n5 1 2 3\n2 3 1\n");
  EXPECT_EQ(file.fmt, 1);
  ASSERT_EQ(file.graph.num_edges(), 2u);
  EXPECT_EQ(file.graph.capacity(0), 5u);
  EXPECT_EQ(file.graph.capacity(1), 2u);
}

TEST(ReadHypergraph, KeepsParallelCopiesWhenAsked) {
  auto merged = parse_hypergraph("2 2\n1 2\n2 1\n");
  EXPECT_EQ(merged.graph.num_edges(), 1u);
  EXPECT_EQ(merged.edges.size(), 2u);
  auto kept = parse_hypergraph("2 2\n1 2\n2 1\n", {SmallEdgePolicy::kReject, false});
  EXPECT_EQ(kept.graph.num_edges(), 2u);
}

TEST(ReadHypergraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("2 3\n1 2\n2 0\n"), 3u);
  EXPECT_EQ(error_line("2 3\n1 2\n2 4\n"), 3u);
  EXPECT_EQ(error_line("1 3\n1 1\n"), 2u);
  EXPECT_EQ(error_line("1 3\n2\n"), 2u);
  EXPECT_EQ(error_line("1 3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("1 3 2\n1 2\n"), 1u);
  EXPECT_EQ(error_line("1 3\n1 x\n"), 2u);
  EXPECT_EQ(error_line("1\n"), 1u);
  EXPECT_EQ(error_line("% nothing\n"), 1u);
  EXPECT_EQ(error_line("2 3\n1 2\n"), 2u);
  EXPECT_EQ(error_line("1 3\n1 2\n2 3\n"), 3u);
  EXPECT_EQ(error_line("1 2 1\n1099511627777 1 2\n"), 2u);
}

TEST(ReadHypergraph, Fixtures) {
  EXPECT_EQ(testing::fixture("path4.hgr").num_edges(), 3u);
  EXPECT_EQ(testing::fixture("example4.hgr").total_capacity(), 19u);
  EXPECT_THROW(testing::fixture("bad_pin.hgr"), ParseError);
  EXPECT_THROW(testing::fixture("short.hgr"), ParseError);
  EXPECT_THROW(read_hypergraph_file(testing::fixture_path("missing.hgr")), std::runtime_error);
}

TEST(WriteHypergraph, RoundTrip) {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 100; ++round) {
    auto h = testing::random_hypergraph(rng, {.min_n = 2, .max_n = 9, .max_m = 12, .max_rank = 5, .max_capacity = round % 2 ? Capacity{9} : Capacity{1}});
    auto text = to_text(h);
    auto back = parse_hypergraph(text, {SmallEdgePolicy::kReject, false});
    EXPECT_EQ(back.graph, h);
    EXPECT_EQ(back.fmt, h.is_uncapacitated() ? 0 : 1);
    EXPECT_EQ(to_text(back.graph), text);
  }
}

TEST(WriteHypergraph, Format) {
  EXPECT_EQ(to_text(Hypergraph(3, {{{0, 1}}, {{1, 2}}})), "2 3\n1 2\n2 3\n");
  EXPECT_EQ(to_text(Hypergraph(3, {{{0, 1, 2}, 4}})), "1 3 1\n4 1 2 3\n");
}

}  // namespace
}  // namespace hcut
