// Greedy vertex orderings (maximum adjacency, tight, Queyranne), the head
// ordering of edges they induce, and pendant pairs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hcut/detail/indexed_heap.hpp"
#include "hcut/hypergraph.hpp"

namespace hcut {

enum class OrderingKind { kMA, kTight, kQueyranne };

inline std::string_view to_string(OrderingKind kind) {
  switch (kind) {
    case OrderingKind::kMA: return "ma";
    case OrderingKind::kTight: return "tight";
    case OrderingKind::kQueyranne: return "queyranne";
  }
  return "?";
}

struct VertexOrdering {
  OrderingKind kind = OrderingKind::kMA;
  Vertex start = 0;
  std::vector<Vertex> order;
  /// Greedy key of order[i] against the prefix: d, d' or d + d' by kind.
  std::vector<Capacity> attach;
  /// d(V_{i-1}, v_i): capacity of edges meeting both the prefix and v_i.
  std::vector<Capacity> adjacency;
  /// d'(V_{i-1}, v_i): the part of adjacency lying inside V_i.
  std::vector<Capacity> inner;
  /// position[v] = index of v in order.
  std::vector<std::uint32_t> position;
};

namespace detail {
inline Capacity ordering_key(OrderingKind kind, Capacity d, Capacity dp) {
  switch (kind) {
    case OrderingKind::kMA: return d;
    case OrderingKind::kTight: return dp;
    case OrderingKind::kQueyranne: return d + dp;
  }
  return d;
}
}  // namespace detail

/// Greedy ordering of the requested kind starting at `start`. Ties go to the
/// smaller tie_rank when one is supplied (one entry per vertex), then to the
/// smaller vertex id. O(p log n) with a binary heap.
inline VertexOrdering compute_ordering(const Hypergraph& h, OrderingKind kind, Vertex start = 0,
                                       std::span<const std::uint32_t> tie_rank = {}) {
  const std::size_t n = h.num_vertices();
  if (n == 0) throw std::invalid_argument("ordering of an empty hypergraph");
  if (start >= n) throw std::invalid_argument("start vertex out of range");
  if (!tie_rank.empty() && tie_rank.size() != n) throw std::invalid_argument("tie_rank must have one entry per vertex");

  VertexOrdering ord;
  ord.kind = kind;
  ord.start = start;
  ord.order.reserve(n);
  ord.attach.reserve(n);
  ord.adjacency.reserve(n);
  ord.inner.reserve(n);
  ord.position.assign(n, 0);

  std::vector<Capacity> d(n, 0), dp(n, 0);
  std::vector<std::uint32_t> remaining(h.num_edges());
  std::vector<bool> touched(h.num_edges(), false), placed(n, false);
  for (EdgeId e = 0; e < h.num_edges(); ++e) remaining[e] = static_cast<std::uint32_t>(h.pins(e).size());

  detail::IndexedMaxHeap<Capacity> heap(n, tie_rank);
  for (Vertex v = 0; v < n; ++v) {
    if (v != start) heap.push(v, 0);
  }
  auto bump = [&](Vertex w, Capacity c) {
    if (heap.contains(w)) heap.increase(w, c);
  };

  Vertex next = start;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex u = next;
    placed[u] = true;
    ord.position[u] = static_cast<std::uint32_t>(i);
    ord.order.push_back(u);
    ord.adjacency.push_back(d[u]);
    ord.inner.push_back(dp[u]);
    ord.attach.push_back(i == 0 ? 0 : detail::ordering_key(kind, d[u], dp[u]));

    for (EdgeId e : h.incident(u)) {
      Capacity c = h.capacity(e);
      if (!touched[e]) {
        touched[e] = true;
        for (Vertex w : h.pins(e)) {
          if (placed[w]) continue;
          d[w] += c;
          if (kind != OrderingKind::kTight) bump(w, c);
        }
      }
      if (--remaining[e] == 1) {
        for (Vertex w : h.pins(e)) {
          if (placed[w]) continue;
          dp[w] += c;
          if (kind != OrderingKind::kMA) bump(w, c);
          break;
        }
      }
    }
    if (!heap.empty()) next = heap.pop();
  }
  return ord;
}

struct HeadOrdering {
  std::vector<EdgeId> edge_order;
  /// head[e] = the earliest pin of e in the vertex order.
  std::vector<Vertex> head;
};

/// Edges sorted by the position of their head, stable by edge index. O(p).
inline HeadOrdering head_ordering(const Hypergraph& h, const VertexOrdering& ord) {
  const std::size_t n = h.num_vertices();
  if (ord.position.size() != n) throw std::invalid_argument("ordering does not match hypergraph");
  HeadOrdering out;
  out.head.resize(h.num_edges());
  std::vector<std::size_t> bucket(n + 1, 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto p = h.pins(e);
    Vertex best = p.front();
    for (Vertex v : p) {
      if (ord.position[v] < ord.position[best]) best = v;
    }
    out.head[e] = best;
    ++bucket[ord.position[best] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) bucket[i + 1] += bucket[i];
  out.edge_order.resize(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) out.edge_order[bucket[ord.position[out.head[e]]]++] = e;
  return out;
}

struct PendantPair {
  Vertex s = 0;
  Vertex t = 0;
  /// d(V_{n-1}, t), which equals lambda(s, t).
  Capacity value = 0;
};

inline PendantPair pendant_pair(const VertexOrdering& ord) {
  const std::size_t n = ord.order.size();
  if (n < 2) throw std::invalid_argument("pendant pair needs at least two vertices");
  return {ord.order[n - 2], ord.order[n - 1], ord.adjacency[n - 1]};
}

inline PendantPair pendant_pair(const Hypergraph& h, OrderingKind kind, Vertex start = 0) {
  if (h.num_vertices() < 2) throw std::invalid_argument("pendant pair needs at least two vertices");
  return pendant_pair(compute_ordering(h, kind, start));
}

}  // namespace hcut
