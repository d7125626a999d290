// Equivalent digraph, tight graph, blocking-flow max-flow, enumeration of
// minimum s-t cuts and the split oracle built from them.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/ordering.hpp"

namespace hcut {

/// Directed flow network with paired residual arcs, solved by Dinic's
/// blocking-flow method. Arc ids count forward arcs in insertion order.
class FlowNetwork {
 public:
  using Flow = std::int64_t;
  /// Residual capacity used for unbounded arcs. Every finite capacity sum
  /// stays below it because total hypergraph capacity is capped at 2^40.
  static constexpr Flow kUnbounded = std::numeric_limits<Flow>::max() / 4;

  explicit FlowNetwork(std::size_t nodes = 0) : adj_(nodes) {}

  std::size_t add_node() {
    adj_.emplace_back();
    return adj_.size() - 1;
  }
  std::size_t num_nodes() const { return adj_.size(); }
  std::size_t num_arcs() const { return to_.size() / 2; }

  /// Adds u -> v with capacity cap; the paired arc v -> u gets reverse_cap
  /// (non-zero for an undirected edge).
  std::size_t add_arc(std::size_t u, std::size_t v, Flow cap, Flow reverse_cap = 0) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::invalid_argument("arc endpoint out of range");
    if (cap < 0 || reverse_cap < 0) throw std::invalid_argument("negative arc capacity");
    std::size_t id = num_arcs();
    push_half(u, v, cap);
    push_half(v, u, reverse_cap);
    infinite_.push_back(false);
    return id;
  }

  std::size_t add_unbounded_arc(std::size_t u, std::size_t v) {
    std::size_t id = add_arc(u, v, kUnbounded);
    infinite_[id] = true;
    return id;
  }

  bool is_unbounded(std::size_t arc) const { return infinite_[arc]; }
  std::size_t tail(std::size_t arc) const { return to_[2 * arc + 1]; }
  std::size_t head(std::size_t arc) const { return to_[2 * arc]; }
  Flow capacity(std::size_t arc) const { return cap_[2 * arc]; }
  /// Net flow along the forward direction of the arc.
  Flow flow(std::size_t arc) const { return flow_[2 * arc]; }

  /// Adds f units along the forward direction of the arc.
  void push(std::size_t arc, Flow f) {
    flow_[2 * arc] += f;
    flow_[2 * arc + 1] -= f;
  }

  void clear_flow() { std::fill(flow_.begin(), flow_.end(), 0); }

  /// Augments the current flow to a maximum s-t flow; returns the total value.
  Flow max_flow(std::size_t s, std::size_t t) {
    if (s == t) throw std::invalid_argument("source equals sink");
    std::vector<std::size_t> it(adj_.size());
    while (levels(s, t)) {
      for (std::size_t v = 0; v < adj_.size(); ++v) it[v] = 0;
      while (Flow f = augment(s, t, kUnbounded, it)) {
        (void)f;
      }
    }
    return excess_out(s);
  }

  /// Net flow leaving node v.
  Flow excess_out(std::size_t v) const {
    Flow total = 0;
    for (std::size_t a : adj_[v]) total += flow_[a];
    return total;
  }

  /// Nodes reachable from `from` along arcs with positive residual capacity.
  std::vector<bool> residual_reach(std::size_t from) const { return search(from, false); }
  /// Nodes that reach `to` along arcs with positive residual capacity.
  std::vector<bool> residual_coreach(std::size_t to) const { return search(to, true); }

  /// Extends `mark` by everything residual-reachable from (or, with
  /// reverse, reaching) the seed. Returns the newly marked nodes.
  std::vector<std::size_t> extend(std::vector<bool>& mark, std::size_t seed, bool reverse) const {
    std::vector<std::size_t> added;
    if (mark[seed]) return added;
    mark[seed] = true;
    added.push_back(seed);
    for (std::size_t i = 0; i < added.size(); ++i) {
      std::size_t u = added[i];
      for (std::size_t a : adj_[u]) {
        std::size_t w = to_[a];
        if (mark[w]) continue;
        bool open = reverse ? residual(a ^ 1) > 0 : residual(a) > 0;
        if (!open) continue;
        mark[w] = true;
        added.push_back(w);
      }
    }
    return added;
  }

 private:
  Flow residual(std::size_t half) const { return cap_[half] - flow_[half]; }

  void push_half(std::size_t u, std::size_t v, Flow cap) {
    adj_[u].push_back(to_.size());
    to_.push_back(v);
    cap_.push_back(cap);
    flow_.push_back(0);
  }

  std::vector<bool> search(std::size_t from, bool reverse) const {
    std::vector<bool> mark(adj_.size(), false);
    extend(mark, from, reverse);
    return mark;
  }

  bool levels(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t a : adj_[u]) {
        if (residual(a) > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          q.push(to_[a]);
        }
      }
    }
    return level_[t] >= 0;
  }

  Flow augment(std::size_t u, std::size_t t, Flow limit, std::vector<std::size_t>& it) {
    if (u == t) return limit;
    for (; it[u] < adj_[u].size(); ++it[u]) {
      std::size_t a = adj_[u][it[u]];
      std::size_t w = to_[a];
      if (residual(a) <= 0 || level_[w] != level_[u] + 1) continue;
      Flow got = augment(w, t, std::min(limit, residual(a)), it);
      if (got > 0) {
        flow_[a] += got;
        flow_[a ^ 1] -= got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> to_;
  std::vector<Flow> cap_;
  std::vector<Flow> flow_;
  std::vector<bool> infinite_;
  std::vector<int> level_;
};

/// Nodes are the vertices [0, n), then e- = n + e and e+ = n + m + e. For
/// every edge the arcs are consecutive: per pin v, v -> e- and e+ -> v, both
/// unbounded, then e- -> e+ with capacity c(e).
struct EquivalentDigraph {
  std::size_t n = 0;
  std::size_t m = 0;
  FlowNetwork network;
  std::vector<std::size_t> first_arc;

  std::size_t in_node(EdgeId e) const { return n + e; }
  std::size_t out_node(EdgeId e) const { return n + m + e; }
  std::size_t entry_arc(EdgeId e, std::size_t pin_index) const { return first_arc[e] + 2 * pin_index; }
  std::size_t exit_arc(EdgeId e, std::size_t pin_index) const { return first_arc[e] + 2 * pin_index + 1; }
  std::size_t bottleneck_arc(EdgeId e) const { return first_arc[e + 1] - 1; }
};

inline EquivalentDigraph build_equivalent_digraph(const Hypergraph& h) {
  EquivalentDigraph d;
  d.n = h.num_vertices();
  d.m = h.num_edges();
  d.network = FlowNetwork(d.n + 2 * d.m);
  for (EdgeId e = 0; e < d.m; ++e) {
    d.first_arc.push_back(d.network.num_arcs());
    for (Vertex v : h.pins(e)) {
      d.network.add_unbounded_arc(v, d.in_node(e));
      d.network.add_unbounded_arc(d.out_node(e), v);
    }
    d.network.add_arc(d.in_node(e), d.out_node(e), static_cast<FlowNetwork::Flow>(h.capacity(e)));
  }
  d.first_arc.push_back(d.network.num_arcs());
  return d;
}

/// lambda(s, t; H) by max-flow in the equivalent digraph.
inline Capacity st_connectivity(const Hypergraph& h, Vertex s, Vertex t) {
  if (s >= h.num_vertices() || t >= h.num_vertices() || s == t) throw std::invalid_argument("bad s-t pair");
  auto d = build_equivalent_digraph(h);
  return static_cast<Capacity>(d.network.max_flow(s, t));
}

/// Rank-2 shadow of H: edge e keeps its last two pins of a tight ordering.
struct TightGraph {
  std::size_t n = 0;
  std::vector<std::array<Vertex, 2>> ends;  // indexed by the edge of H it came from
  std::vector<Capacity> capacity;
};

inline TightGraph tight_graph(const Hypergraph& h, const VertexOrdering& ord) {
  if (ord.position.size() != h.num_vertices()) throw std::invalid_argument("ordering does not match hypergraph");
  TightGraph g;
  g.n = h.num_vertices();
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto p = h.pins(e);
    if (p.size() < 2) throw std::invalid_argument("edge with fewer than two pins");
    Vertex last = p[0], second = p[1];
    if (ord.position[second] > ord.position[last]) std::swap(last, second);
    for (std::size_t i = 2; i < p.size(); ++i) {
      if (ord.position[p[i]] > ord.position[last]) {
        second = last;
        last = p[i];
      } else if (ord.position[p[i]] > ord.position[second]) {
        second = p[i];
      }
    }
    g.ends.push_back({second, last});
    g.capacity.push_back(h.capacity(e));
  }
  return g;
}

struct LastPairFlow {
  VertexOrdering ordering;
  TightGraph graph;
  Vertex s = 0;
  Vertex t = 0;
  Capacity value = 0;
  /// The equivalent digraph of H carrying the lifted maximum flow.
  EquivalentDigraph digraph;
};

/// Max-flow between the last two vertices of a tight ordering, computed on
/// the tight graph and lifted into the equivalent digraph of H.
inline LastPairFlow max_flow_last_pair(const Hypergraph& h, std::span<const std::uint32_t> tie_rank = {}) {
  if (h.num_vertices() < 2) throw std::invalid_argument("max-flow needs at least two vertices");
  LastPairFlow out;
  out.ordering = compute_ordering(h, OrderingKind::kTight, 0, tie_rank);
  out.graph = tight_graph(h, out.ordering);
  std::size_t n = h.num_vertices();
  out.s = out.ordering.order[n - 2];
  out.t = out.ordering.order[n - 1];

  FlowNetwork g(n);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto c = static_cast<FlowNetwork::Flow>(out.graph.capacity[e]);
    g.add_arc(out.graph.ends[e][0], out.graph.ends[e][1], c, c);
  }
  out.value = static_cast<Capacity>(g.max_flow(out.s, out.t));

  out.digraph = build_equivalent_digraph(h);
  auto& net = out.digraph.network;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    FlowNetwork::Flow f = g.flow(e);
    if (f == 0) continue;
    Vertex from = out.graph.ends[e][0], to = out.graph.ends[e][1];
    if (f < 0) {
      std::swap(from, to);
      f = -f;
    }
    auto p = h.pins(e);
    auto from_idx = static_cast<std::size_t>(std::lower_bound(p.begin(), p.end(), from) - p.begin());
    auto to_idx = static_cast<std::size_t>(std::lower_bound(p.begin(), p.end(), to) - p.begin());
    net.push(out.digraph.entry_arc(e, from_idx), f);
    net.push(out.digraph.bottleneck_arc(e), f);
    net.push(out.digraph.exit_arc(e, to_idx), f);
  }
  return out;
}

/// Up to `ell` distinct minimum s-t cuts of H, each reported by its side
/// containing s. `digraph` must carry a maximum s-t flow. Closed sets of the
/// residual graph are branched on one undecided vertex of H at a time, so
/// every branch ends in a cut and distinct leaves differ on H.
inline std::vector<Cut> enumerate_min_st_cuts(const Hypergraph& h, const EquivalentDigraph& digraph, Vertex s,
                                              Vertex t, std::size_t ell) {
  const auto& net = digraph.network;
  std::vector<bool> in = net.residual_reach(s);
  if (in[t]) throw std::logic_error("flow is not maximum: t is residually reachable from s");
  std::vector<bool> out = net.residual_coreach(t);

  std::vector<Cut> cuts;
  struct Frame {
    std::vector<bool> in, out;
  };
  std::vector<Frame> stack;
  stack.push_back({std::move(in), std::move(out)});
  while (!stack.empty() && cuts.size() < ell) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    Vertex pick = 0;
    bool open = false;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      if (!f.in[v] && !f.out[v]) {
        pick = v;
        open = true;
        break;
      }
    }
    if (!open) {
      std::vector<Vertex> side;
      for (Vertex v = 0; v < h.num_vertices(); ++v) {
        if (f.in[v]) side.push_back(v);
      }
      cuts.push_back(make_cut(h, side));
      continue;
    }
    Frame excluded = f;
    net.extend(excluded.out, pick, true);
    net.extend(f.in, pick, false);
    for (std::size_t x = 0; x < f.in.size(); ++x) {
      if (f.in[x] && f.out[x]) throw std::logic_error("residual closure met the sink side");
    }
    stack.push_back(std::move(excluded));
    stack.push_back(std::move(f));
  }
  return cuts;
}

struct Split {
  Cut cut;
};

struct NoSplitPair {
  Vertex s = 0;
  Vertex t = 0;
};

using SplitVerdict = std::variant<Split, NoSplitPair>;

/// Finds a split of H (a mincut with at least two vertices per side) or a
/// pair {s, t} that no split separates. `lambda` must be lambda(H).
inline SplitVerdict split_oracle(const Hypergraph& h, Capacity lambda, std::span<const std::uint32_t> tie_rank = {}) {
  if (h.num_vertices() < 4) throw std::invalid_argument("split oracle needs at least four vertices");
  auto flow = max_flow_last_pair(h, tie_rank);
  if (flow.value < lambda) throw std::logic_error("s-t flow below the supplied mincut value");
  if (flow.value > lambda) return NoSplitPair{flow.s, flow.t};
  auto cuts = enumerate_min_st_cuts(h, flow.digraph, flow.s, flow.t, 3);
  std::size_t n = h.num_vertices();
  for (auto& cut : cuts) {
    if (cut.side.size() >= 2 && n - cut.side.size() >= 2) return Split{std::move(cut)};
  }
  return NoSplitPair{flow.s, flow.t};
}

}  // namespace hcut
