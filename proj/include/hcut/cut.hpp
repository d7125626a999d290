// Cut functions over a hypergraph: cut capacity, joint adjacency, and the
// edge sets they are built from.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hcut/hypergraph.hpp"

namespace hcut {

/// One side S of a bipartition (S, V - S) with its capacity and crossing edges.
struct Cut {
  std::vector<Vertex> side;            // sorted
  Capacity value = 0;
  std::vector<EdgeId> edge_cut_set;    // sorted

  friend bool operator==(const Cut&, const Cut&) = default;
};

inline std::vector<std::uint8_t> indicator(std::size_t n, std::span<const Vertex> set) {
  std::vector<std::uint8_t> in(n, 0);
  for (Vertex v : set) {
    if (v >= n) throw std::invalid_argument("vertex id out of range");
    in[v] = 1;
  }
  return in;
}

namespace detail {

inline bool crosses(const Hypergraph& h, EdgeId e, const std::vector<std::uint8_t>& in) {
  bool inside = false, outside = false;
  for (Vertex v : h.pins(e)) {
    (in[v] ? inside : outside) = true;
    if (inside && outside) return true;
  }
  return false;
}

inline std::size_t count_members(const std::vector<std::uint8_t>& in) {
  return static_cast<std::size_t>(std::count(in.begin(), in.end(), std::uint8_t{1}));
}

inline void require_proper(const std::vector<std::uint8_t>& in) {
  std::size_t k = count_members(in);
  if (k == 0 || k == in.size()) throw std::invalid_argument("cut side must be a non-empty proper subset");
}

}  // namespace detail

/// Edges with pins on both sides of the indicator, i.e. delta(S).
inline std::vector<EdgeId> crossing_edges(const Hypergraph& h, const std::vector<std::uint8_t>& in) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (detail::crosses(h, e, in)) out.push_back(e);
  }
  return out;
}

inline Capacity cut_value(const Hypergraph& h, const std::vector<std::uint8_t>& in) {
  detail::require_proper(in);
  Capacity total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (detail::crosses(h, e, in)) total += h.capacity(e);
  }
  return total;
}

/// Capacity of the cut S. Throws std::invalid_argument when S is empty or V.
inline Capacity cut_value(const Hypergraph& h, std::span<const Vertex> side) {
  return cut_value(h, indicator(h.num_vertices(), side));
}

inline Cut make_cut(const Hypergraph& h, std::span<const Vertex> side) {
  auto in = indicator(h.num_vertices(), side);
  detail::require_proper(in);
  Cut cut;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (in[v]) cut.side.push_back(v);
  }
  cut.edge_cut_set = crossing_edges(h, in);
  for (EdgeId e : cut.edge_cut_set) cut.value += h.capacity(e);
  return cut;
}

inline std::vector<Vertex> complement(std::size_t n, std::span<const Vertex> side) {
  auto in = indicator(n, side);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

/// Total capacity of the edges meeting every one of the given pairwise
/// disjoint vertex sets.
inline Capacity capacity_between(const Hypergraph& h, std::span<const std::vector<Vertex>> sets) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> owner(h.num_vertices(), kNone);
  for (std::uint32_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) {
      if (v >= h.num_vertices()) throw std::invalid_argument("vertex id out of range");
      if (owner[v] != kNone && owner[v] != i) throw std::invalid_argument("vertex sets must be disjoint");
      owner[v] = i;
    }
  }
  std::vector<std::uint8_t> seen(sets.size(), 0);
  std::vector<std::uint32_t> touched;
  Capacity total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    touched.clear();
    for (Vertex v : h.pins(e)) {
      std::uint32_t o = owner[v];
      if (o != kNone && !seen[o]) {
        seen[o] = 1;
        touched.push_back(o);
      }
    }
    if (touched.size() == sets.size()) total += h.capacity(e);
    for (auto o : touched) seen[o] = 0;
  }
  return total;
}

inline Capacity capacity_between(const Hypergraph& h, std::initializer_list<std::vector<Vertex>> sets) {
  std::vector<std::vector<Vertex>> v(sets);
  return capacity_between(h, std::span<const std::vector<Vertex>>(v));
}

/// Total capacity of edges that meet both A and B and lie inside A u B.
inline Capacity capacity_within(const Hypergraph& h, std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<std::uint8_t> side(h.num_vertices(), 0);
  for (Vertex v : a) {
    if (v >= h.num_vertices()) throw std::invalid_argument("vertex id out of range");
    side[v] = 1;
  }
  for (Vertex v : b) {
    if (v >= h.num_vertices()) throw std::invalid_argument("vertex id out of range");
    if (side[v] == 1) throw std::invalid_argument("vertex sets must be disjoint");
    side[v] = 2;
  }
  Capacity total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool in_a = false, in_b = false, contained = true;
    for (Vertex v : h.pins(e)) {
      if (side[v] == 1) in_a = true;
      else if (side[v] == 2) in_b = true;
      else contained = false;
    }
    if (in_a && in_b && contained) total += h.capacity(e);
  }
  return total;
}

/// Indices of the edges that touch X.
inline std::vector<EdgeId> touching_edges(const Hypergraph& h, std::span<const Vertex> x) {
  auto in = indicator(h.num_vertices(), x);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto p = h.pins(e);
    if (std::any_of(p.begin(), p.end(), [&](Vertex v) { return in[v] != 0; })) out.push_back(e);
  }
  return out;
}

/// Component label per vertex (labels ordered by smallest member) and the
/// component count.
inline std::pair<std::vector<Vertex>, std::size_t> connected_components(const Hypergraph& h) {
  constexpr Vertex kUnset = UINT32_MAX;
  std::vector<Vertex> label(h.num_vertices(), kUnset);
  std::vector<bool> edge_done(h.num_edges(), false);
  std::vector<Vertex> stack;
  std::size_t count = 0;
  for (Vertex root = 0; root < h.num_vertices(); ++root) {
    if (label[root] != kUnset) continue;
    label[root] = static_cast<Vertex>(count);
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId e : h.incident(v)) {
        if (edge_done[e]) continue;
        edge_done[e] = true;
        for (Vertex w : h.pins(e)) {
          if (label[w] == kUnset) {
            label[w] = static_cast<Vertex>(count);
            stack.push_back(w);
          }
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

}  // namespace hcut
