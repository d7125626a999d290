// Trimming-based k-sparsifier over an MA ordering and the exact mincut for
// uncapacitated hypergraphs built on it.
#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/mincut.hpp"
#include "hcut/ordering.hpp"

namespace hcut {

struct SparsifierIndex {
  VertexOrdering ordering;
  HeadOrdering heads;
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  /// Backward edges of v, in head order: queue[queue_begin[v] .. queue_begin[v+1]).
  std::vector<std::size_t> queue_begin;
  std::vector<EdgeId> queue;

  std::span<const EdgeId> backward(Vertex v) const {
    return {queue.data() + queue_begin[v], queue_begin[v + 1] - queue_begin[v]};
  }
};

/// Builds the index on the given ordering. Only an MA ordering yields
/// sparsifiers; other kinds are accepted so their failure can be shown.
inline SparsifierIndex build_index(const Hypergraph& h, VertexOrdering ordering) {
  if (!h.is_uncapacitated()) throw std::invalid_argument("sparsifier index needs an uncapacitated hypergraph");
  if (ordering.order.size() != h.num_vertices()) throw std::invalid_argument("ordering does not match hypergraph");
  SparsifierIndex index;
  index.num_vertices = h.num_vertices();
  index.num_edges = h.num_edges();
  index.heads = head_ordering(h, ordering);
  index.ordering = std::move(ordering);

  const std::size_t n = h.num_vertices();
  index.queue_begin.assign(n + 1, 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (Vertex v : h.pins(e)) {
      if (v != index.heads.head[e]) ++index.queue_begin[v + 1];
    }
  }
  for (std::size_t v = 0; v < n; ++v) index.queue_begin[v + 1] += index.queue_begin[v];
  index.queue.resize(index.queue_begin[n]);
  std::vector<std::size_t> fill(index.queue_begin.begin(), index.queue_begin.end() - 1);
  for (EdgeId e : index.heads.edge_order) {
    for (Vertex v : h.pins(e)) {
      if (v != index.heads.head[e]) index.queue[fill[v]++] = e;
    }
  }
  return index;
}

inline SparsifierIndex build_index(const Hypergraph& h) {
  if (!h.is_uncapacitated()) throw std::invalid_argument("sparsifier index needs an uncapacitated hypergraph");
  if (h.num_vertices() == 0) return build_index(h, VertexOrdering{});
  return build_index(h, compute_ordering(h, OrderingKind::kMA));
}

/// A trimmed subhypergraph. Edge i of `graph` is a subset of host edge
/// host_edge[i]; parallel edges are kept apart.
struct Subhypergraph {
  Hypergraph graph;
  std::vector<EdgeId> host_edge;
};

namespace detail {

// Retained pins per host edge, host edges in increasing index order.
inline std::vector<std::pair<EdgeId, std::vector<Vertex>>> trimmed_edges(const SparsifierIndex& index,
                                                                         std::size_t k) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> slot(index.num_edges, kNone);
  std::vector<std::pair<EdgeId, std::vector<Vertex>>> edges;
  for (Vertex v = 0; v < index.num_vertices; ++v) {
    auto q = index.backward(v);
    std::size_t take = std::min(k, q.size());
    for (std::size_t i = 0; i < take; ++i) {
      EdgeId e = q[i];
      if (slot[e] == kNone) {
        slot[e] = static_cast<std::uint32_t>(edges.size());
        edges.push_back({e, {index.heads.head[e]}});
      }
      edges[slot[e]].second.push_back(v);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return edges;
}

}  // namespace detail

/// H_k: every non-head pin v of e is kept iff e is among the first k
/// backward edges of v. Runs in O(sum-deg(H_k)) plus a sort of the kept
/// edge ids.
inline Subhypergraph extract_sparsifier(const SparsifierIndex& index, std::size_t k) {
  Subhypergraph out;
  std::vector<EdgeSpec> specs;
  for (auto& [e, pins] : detail::trimmed_edges(index, k)) {
    out.host_edge.push_back(e);
    specs.push_back({std::move(pins), 1});
  }
  out.graph = Hypergraph(index.num_vertices, std::move(specs), {SmallEdgePolicy::kReject, false});
  return out;
}

/// Host edges of H_k: a sparsifier that only deletes edges.
inline std::vector<EdgeId> extract_sparsifier_deletion_only(const SparsifierIndex& index, std::size_t k) {
  std::vector<EdgeId> out;
  for (auto& entry : detail::trimmed_edges(index, k)) out.push_back(entry.first);
  return out;
}

/// Replaces every edge of capacity c by c unit copies. Throws when the
/// total number of copies would exceed `max_edges`.
inline Hypergraph expand_capacities(const Hypergraph& h, std::size_t max_edges = std::size_t{1} << 24) {
  if (h.total_capacity() > max_edges) throw std::length_error("capacity expansion exceeds the copy limit");
  std::vector<EdgeSpec> specs;
  specs.reserve(h.total_capacity());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto p = h.pins(e);
    for (Capacity c = 0; c < h.capacity(e); ++c) specs.push_back({{p.begin(), p.end()}, 1});
  }
  return Hypergraph(h.num_vertices(), std::move(specs), {SmallEdgePolicy::kReject, false});
}

struct SparsifyRound {
  std::size_t k = 0;
  Capacity sum_deg = 0;
  Capacity value = 0;
};

/// Exact mincut of an uncapacitated hypergraph by exponential search over
/// k = 2, 4, 8, ...: stop at the first H_k whose mincut is below k, or when
/// H_k is all of H.
inline MincutResult mincut_uncapacitated(const Hypergraph& h, std::vector<SparsifyRound>* rounds = nullptr) {
  if (h.num_vertices() < 2) throw std::invalid_argument("mincut needs at least two vertices");
  if (!h.is_uncapacitated()) throw std::invalid_argument("mincut_uncapacitated needs an uncapacitated hypergraph");
  if (rounds) rounds->clear();
  auto index = build_index(h);
  for (std::size_t k = 2;; k *= 2) {
    auto hk = extract_sparsifier(index, k);
    auto res = global_mincut(hk.graph);
    if (rounds) rounds->push_back({k, hk.graph.sum_deg(), res.value});
    bool whole = hk.graph.num_pins() == h.num_pins();
    if (res.value < k || whole) {
      res.witness = make_cut(h, res.witness.side);
      if (res.witness.value != res.value) throw std::logic_error("sparsified mincut does not lift to the input");
      return res;
    }
  }
}

}  // namespace hcut
