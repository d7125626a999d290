// Exact global minimum cut by repeated pendant-pair contraction.
#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/detail/union_find.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/ordering.hpp"

namespace hcut {

struct MincutResult {
  Capacity value = 0;
  Cut witness;
  OrderingKind kind = OrderingKind::kMA;
  /// Candidate value d(V_{n-1}, v_n) of every contraction phase, in order.
  /// Empty when the input was found disconnected.
  std::vector<Capacity> phase_values;
};

/// The side of the component holding vertex 0 when H is disconnected.
inline std::optional<Cut> disconnected_witness(const Hypergraph& h) {
  auto [label, count] = connected_components(h);
  if (count < 2) return std::nullopt;
  std::vector<Vertex> side;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (label[v] == label[0]) side.push_back(v);
  }
  return make_cut(h, side);
}

inline MincutResult global_mincut(const Hypergraph& h, OrderingKind kind = OrderingKind::kMA) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw std::invalid_argument("mincut needs at least two vertices");
  MincutResult result;
  result.kind = kind;
  if (auto cut = disconnected_witness(h)) {
    result.value = 0;
    result.witness = std::move(*cut);
    return result;
  }

  detail::UnionFind groups(n);
  // rep[u] = some original vertex inside current vertex u.
  std::vector<Vertex> rep(n);
  for (Vertex v = 0; v < n; ++v) rep[v] = v;
  Hypergraph g = h;
  Capacity best = std::numeric_limits<Capacity>::max();
  std::vector<Vertex> best_side;

  while (g.num_vertices() >= 2) {
    auto pair = pendant_pair(compute_ordering(g, kind));
    result.phase_values.push_back(pair.value);
    if (pair.value < best) {
      best = pair.value;
      Vertex root = groups.find(rep[pair.t]);
      best_side.clear();
      for (Vertex v = 0; v < n; ++v) {
        if (groups.find(v) == root) best_side.push_back(v);
      }
    }
    groups.unite(rep[pair.s], rep[pair.t]);
    const std::size_t k = g.num_vertices();
    Vertex s = pair.s < pair.t ? pair.s : pair.s - 1;
    std::vector<Vertex> phi(k);
    std::vector<Vertex> next_rep(k - 1);
    for (Vertex v = 0; v < k; ++v) {
      phi[v] = v == pair.t ? s : (v < pair.t ? v : v - 1);
      next_rep[phi[v]] = rep[v];
    }
    g = contract(g, phi).target;
    rep = std::move(next_rep);
  }
  result.value = best;
  result.witness = make_cut(h, best_side);
  return result;
}

}  // namespace hcut
