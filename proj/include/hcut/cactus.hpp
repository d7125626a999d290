// Hypercactus representation (H*, phi) of all mincuts of H, built from the
// canonical decomposition, with mincut queries and min edge-cut-set counting.
#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/decomposition.hpp"
#include "hcut/flow.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/sparsify.hpp"

namespace hcut {

/// Capacities of the structure are in units of lambda / 2: cycle edges 1,
/// star edges and hyperedges 2, so its mincut value is always 2. This keeps
/// the structure meaningful when lambda = 0.
struct Hypercactus {
  static constexpr Capacity kCycleCapacity = 1;
  static constexpr Capacity kBridgeCapacity = 2;
  static constexpr Capacity kStructureLambda = 2;

  Hypergraph structure;
  /// Vertex of H -> vertex of the structure.
  std::vector<Vertex> phi;
  Capacity lambda = 0;
  /// Vertices of each cycle in cyclic order.
  std::vector<std::vector<Vertex>> cycles;
  /// Star centres, which have no vertex of H mapped onto them unless the
  /// member they stand for has vertices without a trivial mincut.
  std::vector<Vertex> centers;
};

/// Builds the structure from a canonical decomposition of H.
inline Hypercactus hypercactus_from_decomposition(const Hypergraph& h, const Decomposition& d) {
  const std::size_t n = h.num_vertices();
  Hypercactus hc;
  hc.lambda = d.lambda;
  constexpr Vertex kUnset = UINT32_MAX;
  hc.phi.assign(n, kUnset);
  std::unordered_map<Vertex, Vertex> id;
  Vertex count = 0;
  auto id_of = [&](Vertex label) {
    auto [it, inserted] = id.try_emplace(label, count);
    if (inserted) ++count;
    return it->second;
  };
  std::vector<EdgeSpec> edges;

  for (const auto& m : d.members) {
    const std::size_t k = m.graph.num_vertices();
    auto shape = k >= 3 ? is_solid_polygon(m.graph) : std::nullopt;
    if (shape && !shape->brittle()) {
      std::vector<Vertex> ring;
      for (Vertex local : shape->cycle_order) ring.push_back(id_of(m.labels[local]));
      for (std::size_t i = 0; i < ring.size(); ++i) {
        edges.push_back({{ring[i], ring[(i + 1) % ring.size()]}, Hypercactus::kCycleCapacity});
      }
      hc.cycles.push_back(std::move(ring));
    } else if (shape) {
      EdgeSpec all;
      all.capacity = Hypercactus::kBridgeCapacity;
      for (Vertex l : m.labels) all.pins.push_back(id_of(l));
      edges.push_back(std::move(all));
    } else {
      Vertex center = count++;
      hc.centers.push_back(center);
      for (Vertex local = 0; local < k; ++local) {
        Vertex label = m.labels[local];
        if (m.graph.degree(local) == d.lambda) {
          edges.push_back({{center, id_of(label)}, Hypercactus::kBridgeCapacity});
        } else if (d.is_marker(label)) {
          throw std::logic_error("marker without a trivial mincut in a prime member");
        } else {
          hc.phi[label] = center;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (hc.phi[v] != kUnset) continue;
    auto it = id.find(v);
    if (it == id.end()) throw std::logic_error("vertex missing from the hypercactus");
    hc.phi[v] = it->second;
  }
  std::size_t expected = edges.size();
  hc.structure = Hypergraph(count, std::move(edges));
  if (hc.structure.num_edges() != expected) throw std::logic_error("hypercactus pieces share an edge");
  if (count > 2 * n) throw std::logic_error("hypercactus has more than 2n vertices");
  return hc;
}

inline Hypercactus build_hypercactus(const Hypergraph& h, DecompositionOptions options = {}) {
  if (h.num_vertices() < 2) throw std::invalid_argument("hypercactus needs at least two vertices");
  return hypercactus_from_decomposition(h, canonical_decomposition(h, options));
}

struct FastCactusStats {
  Capacity lambda = 0;
  Capacity input_sum_deg = 0;
  Capacity sparsified_sum_deg = 0;
};

/// Builds the hypercactus of the (lambda + 1)-sparsifier, whose mincuts are
/// exactly those of H.
inline Hypercactus build_hypercactus_uncapacitated_fast(const Hypergraph& h, FastCactusStats* stats = nullptr) {
  if (h.num_vertices() < 2) throw std::invalid_argument("hypercactus needs at least two vertices");
  if (!h.is_uncapacitated()) throw std::invalid_argument("fast hypercactus needs an uncapacitated hypergraph");
  Capacity lambda = mincut_uncapacitated(h).value;
  auto index = build_index(h);
  auto sparse = extract_sparsifier(index, lambda + 1);
  Hypergraph merged(h.num_vertices(), sparse.graph.edge_specs());
  auto hc = build_hypercactus(merged);
  if (hc.lambda != lambda) throw std::logic_error("sparsifier changed the mincut value");
  if (stats) *stats = {lambda, h.sum_deg(), merged.sum_deg()};
  return hc;
}

/// S is a mincut of H iff phi(S) and phi(V - S) are disjoint and some
/// placement of the remaining structure vertices gives a cut of value
/// kStructureLambda. The best placement is found by max-flow.
inline bool is_mincut(const Hypercactus& hc, std::span<const Vertex> side) {
  const std::size_t n = hc.phi.size();
  auto in = indicator(n, side);
  detail::require_proper(in);
  const auto& g = hc.structure;
  std::vector<std::uint8_t> touch(g.num_vertices(), 0);
  for (Vertex v = 0; v < n; ++v) touch[hc.phi[v]] |= in[v] ? 1 : 2;
  for (auto t : touch) {
    if (t == 3) return false;
  }
  auto d = build_equivalent_digraph(g);
  std::size_t source = d.network.add_node(), sink = d.network.add_node();
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (touch[u] == 1) d.network.add_unbounded_arc(source, u);
    if (touch[u] == 2) d.network.add_unbounded_arc(u, sink);
  }
  auto value = static_cast<Capacity>(d.network.max_flow(source, sink));
  if (value < Hypercactus::kStructureLambda) throw std::logic_error("structure cut below its mincut value");
  return value == Hypercactus::kStructureLambda;
}

namespace detail {

inline std::vector<bool> reach_without(const Hypergraph& g, Vertex from, std::span<const EdgeId> removed) {
  std::vector<bool> blocked(g.num_edges(), false), seen(g.num_vertices(), false);
  for (EdgeId e : removed) blocked[e] = true;
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(u)) {
      if (blocked[e]) continue;
      blocked[e] = true;
      for (Vertex w : g.pins(e)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return seen;
}

}  // namespace detail

/// Calls f(side) for mincuts of the structure: each bridge, each pair of
/// edges on one cycle, and for each hyperedge either every single branch or,
/// with all_branch_subsets, every proper non-empty union of branches.
inline void for_each_structure_mincut(const Hypercactus& hc, bool all_branch_subsets,
                                      const std::function<void(const std::vector<bool>&)>& f) {
  const auto& g = hc.structure;
  std::set<std::pair<Vertex, Vertex>> ring_edges;
  for (const auto& ring : hc.cycles) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      Vertex a = ring[i], b = ring[(i + 1) % ring.size()];
      ring_edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  auto find_edge = [&](Vertex a, Vertex b) {
    for (EdgeId e : g.incident(a)) {
      auto p = g.pins(e);
      if (p.size() == 2 && ((p[0] == a && p[1] == b) || (p[0] == b && p[1] == a))) return e;
    }
    throw std::logic_error("cycle edge missing from the structure");
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto p = g.pins(e);
    EdgeId removed[1] = {e};
    if (p.size() == 2) {
      if (ring_edges.count({p[0], p[1]})) continue;
      f(detail::reach_without(g, p[0], removed));
      continue;
    }
    std::vector<std::vector<bool>> branches;
    for (Vertex u : p) branches.push_back(detail::reach_without(g, u, removed));
    if (!all_branch_subsets) {
      for (auto& b : branches) f(b);
      continue;
    }
    if (branches.size() > 20) throw std::length_error("hyperedge too large for branch enumeration");
    std::uint64_t count = (std::uint64_t{1} << (branches.size() - 1)) - 1;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      std::vector<bool> side = branches[0];
      for (std::size_t i = 1; i < branches.size(); ++i) {
        if (!((bits >> (i - 1)) & 1)) continue;
        for (std::size_t v = 0; v < side.size(); ++v) {
          if (branches[i][v]) side[v] = true;
        }
      }
      f(side);
    }
  }
  for (const auto& ring : hc.cycles) {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < ring.size(); ++i) ids.push_back(find_edge(ring[i], ring[(i + 1) % ring.size()]));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        EdgeId removed[2] = {ids[i], ids[j]};
        f(detail::reach_without(g, ring[j], removed));
      }
    }
  }
}

/// Distinct min edge-cut-sets of H, read off the structure and mapped back
/// through phi. Sorted; at most `limit` are returned.
inline std::vector<std::vector<EdgeId>> enumerate_min_edge_cut_sets(const Hypercactus& hc, const Hypergraph& h,
                                                                    std::size_t limit = SIZE_MAX) {
  const std::size_t n = h.num_vertices();
  if (hc.phi.size() != n) throw std::invalid_argument("hypercactus does not match hypergraph");
  std::set<std::vector<EdgeId>> found;
  for_each_structure_mincut(hc, false, [&](const std::vector<bool>& side) {
    std::vector<std::uint8_t> in(n, 0);
    std::size_t size = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (side[hc.phi[v]]) {
        in[v] = 1;
        ++size;
      }
    }
    if (size == 0 || size == n) return;
    auto edges = crossing_edges(h, in);
    Capacity value = 0;
    for (EdgeId e : edges) value += h.capacity(e);
    if (value != hc.lambda) throw std::logic_error("structure mincut does not map to a mincut of H");
    found.insert(std::move(edges));
  });
  std::vector<std::vector<EdgeId>> out;
  for (auto& s : found) {
    if (out.size() >= limit) break;
    out.push_back(s);
  }
  return out;
}

inline std::size_t count_min_edge_cut_sets(const Hypercactus& hc, const Hypergraph& h) {
  return enumerate_min_edge_cut_sets(hc, h).size();
}

/// True iff the structure is a hypercactus: with every hyperedge replaced by
/// a star on a new node, each biconnected block is one edge or one cycle.
inline bool is_hypercactus_structure(const Hypercactus& hc) {
  const auto& g = hc.structure;
  std::size_t nodes = g.num_vertices();
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto p = g.pins(e);
    if (p.size() == 2) {
      links.push_back({p[0], p[1]});
      continue;
    }
    std::size_t hub = nodes++;
    for (Vertex u : p) links.push_back({hub, u});
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);
  for (std::size_t i = 0; i < links.size(); ++i) {
    adj[links[i].first].push_back({links[i].second, i});
    adj[links[i].second].push_back({links[i].first, i});
  }
  std::vector<int> disc(nodes, -1), low(nodes, 0);
  std::vector<std::size_t> edge_stack;
  int timer = 0;
  bool ok = true;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent_link) {
    disc[u] = low[u] = timer++;
    for (auto [w, link] : adj[u]) {
      if (link == parent_link) continue;
      if (disc[w] < 0) {
        edge_stack.push_back(link);
        dfs(w, link);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::set<std::size_t> verts;
          std::size_t block_edges = 0;
          for (;;) {
            std::size_t l = edge_stack.back();
            edge_stack.pop_back();
            ++block_edges;
            verts.insert(links[l].first);
            verts.insert(links[l].second);
            if (l == link) break;
          }
          if (block_edges > 1 && block_edges != verts.size()) ok = false;
        }
      } else if (disc[w] < disc[u]) {
        edge_stack.push_back(link);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (std::size_t u = 0; u < nodes; ++u) {
    if (disc[u] < 0) dfs(u, SIZE_MAX);
  }
  return ok;
}

}  // namespace hcut
