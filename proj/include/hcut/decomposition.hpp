// Prime and canonical decompositions of a hypergraph by its mincuts, solid
// polygon recognition, and the tree form that stores a decomposition in O(n).
//
// Every member is a contraction of the root hypergraph H. Members name their
// vertices by global labels: labels below n are vertices of H, labels from n
// upward are marker vertices shared by exactly two members.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/flow.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/mincut.hpp"

namespace hcut {

struct SolidPolygonShape {
  std::vector<Vertex> cycle_order;
  /// Capacity of every cycle edge; zero for a brittle polygon.
  Capacity a = 0;
  /// Capacity of the edge covering all vertices; zero when absent.
  Capacity b = 0;

  bool brittle() const { return a == 0; }
};

/// Recognizes a uniform cycle plus an optional edge over all vertices, or a
/// lone covering edge (brittle), on at least three vertices. Parallel edges
/// must already be merged. An edgeless hypergraph is brittle with b = 0.
inline std::optional<SolidPolygonShape> is_solid_polygon(const Hypergraph& h) {
  const std::size_t k = h.num_vertices();
  if (k < 3) return std::nullopt;
  SolidPolygonShape shape;
  std::vector<EdgeId> ring;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::size_t size = h.pins(e).size();
    if (size == k) shape.b += h.capacity(e);
    else if (size == 2) ring.push_back(e);
    else return std::nullopt;
  }
  if (ring.empty()) {
    shape.cycle_order.resize(k);
    std::iota(shape.cycle_order.begin(), shape.cycle_order.end(), 0u);
    return shape;
  }
  if (ring.size() != k) return std::nullopt;
  shape.a = h.capacity(ring[0]);
  constexpr Vertex kNone = UINT32_MAX;
  std::vector<std::array<Vertex, 2>> next(k, {kNone, kNone});
  for (EdgeId e : ring) {
    if (h.capacity(e) != shape.a) return std::nullopt;
    auto p = h.pins(e);
    for (int side = 0; side < 2; ++side) {
      auto& slot = next[p[side]];
      Vertex other = p[1 - side];
      if (slot[0] == kNone) slot[0] = other;
      else if (slot[1] == kNone) slot[1] = other;
      else return std::nullopt;
    }
  }
  Vertex prev = kNone, cur = 0;
  for (std::size_t step = 0; step < k; ++step) {
    if (next[cur][1] == kNone) return std::nullopt;
    shape.cycle_order.push_back(cur);
    Vertex to = next[cur][0] != prev ? next[cur][0] : next[cur][1];
    prev = cur;
    cur = to;
  }
  if (cur != 0) return std::nullopt;
  std::vector<Vertex> seen = shape.cycle_order;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
  return shape;
}

enum class MemberShape { kPrime, kSemiBrittle, kBrittle };

inline std::string_view to_string(MemberShape shape) {
  switch (shape) {
    case MemberShape::kPrime: return "prime";
    case MemberShape::kSemiBrittle: return "polygon";
    case MemberShape::kBrittle: return "brittle";
  }
  return "?";
}

/// Polygon shapes take precedence; on three vertices a member can be both.
inline MemberShape classify_member(const Hypergraph& g) {
  auto shape = is_solid_polygon(g);
  if (!shape) return MemberShape::kPrime;
  return shape->brittle() ? MemberShape::kBrittle : MemberShape::kSemiBrittle;
}

struct Member {
  /// Sorted global labels; local vertex i of `graph` is labels[i].
  std::vector<Vertex> labels;
  Hypergraph graph;
  /// Vertex of H -> local vertex.
  std::vector<Vertex> phi;

  Vertex label_of(Vertex v) const { return labels[phi[v]]; }
  std::optional<Vertex> local_of(Vertex label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<Vertex>(it - labels.begin());
  }
  bool contains(Vertex label) const { return local_of(label).has_value(); }
};

/// The member of H given by a map from vertices of H to global labels.
inline Member make_member(const Hypergraph& h, std::span<const Vertex> label_map) {
  if (label_map.size() != h.num_vertices()) throw std::invalid_argument("label map must be total");
  Member m;
  m.phi = compact_labels<Vertex>(label_map, &m.labels);
  m.graph = contract(h, m.phi).target;
  return m;
}

inline std::vector<Vertex> member_label_map(const Member& m) {
  std::vector<Vertex> map(m.phi.size());
  for (Vertex v = 0; v < map.size(); ++v) map[v] = m.label_of(v);
  return map;
}

struct Decomposition {
  std::size_t n = 0;
  Capacity lambda = 0;
  std::vector<Member> members;

  bool is_marker(Vertex label) const { return label >= n; }

  std::vector<Vertex> markers() const {
    std::vector<Vertex> out;
    for (const auto& m : members) {
      for (Vertex l : m.labels) {
        if (is_marker(l)) out.push_back(l);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// The two members sharing marker x.
  std::pair<std::size_t, std::size_t> members_of(Vertex x) const {
    std::vector<std::size_t> hit;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].contains(x)) hit.push_back(i);
    }
    if (!is_marker(x) || hit.size() != 2) throw std::invalid_argument("label is not a marker of this decomposition");
    return {hit[0], hit[1]};
  }

  Vertex next_label() const {
    Vertex next = static_cast<Vertex>(n);
    for (const auto& m : members) {
      if (!m.labels.empty()) next = std::max<Vertex>(next, m.labels.back() + 1);
    }
    return next;
  }
};

/// Splits member m along a split given by local vertex ids, putting the
/// fresh marker on both sides: the first result keeps `side`, the second
/// keeps the rest.
inline std::pair<Member, Member> simple_refinement(const Hypergraph& h, const Member& m,
                                                   std::span<const Vertex> side, Vertex marker, Capacity lambda) {
  const std::size_t k = m.graph.num_vertices();
  auto in = indicator(k, side);
  std::size_t count = detail::count_members(in);
  if (count < 2 || k - count < 2) throw std::invalid_argument("refinement needs a non-trivial cut");
  if (cut_value(m.graph, in) != lambda) throw std::invalid_argument("refinement cut is not a mincut");
  if (m.contains(marker) || marker < h.num_vertices()) throw std::invalid_argument("marker label is not fresh");
  std::vector<Vertex> keep(h.num_vertices()), rest(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    bool mine = in[m.phi[v]] != 0;
    keep[v] = mine ? m.label_of(v) : marker;
    rest[v] = mine ? marker : m.label_of(v);
  }
  return {make_member(h, keep), make_member(h, rest)};
}

/// The contraction of H that forgets marker x shared by members a and b.
inline Member glued_member(const Hypergraph& h, const Member& a, const Member& b, Vertex x) {
  std::vector<Vertex> map(h.num_vertices());
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    Vertex la = a.label_of(v);
    map[v] = la == x ? b.label_of(v) : la;
  }
  return make_member(h, map);
}

/// Replaces the two members sharing marker x by their gluing.
inline Decomposition glue(const Hypergraph& h, const Decomposition& d, Vertex x) {
  auto [i, j] = d.members_of(x);
  Decomposition out = d;
  out.members[i] = glued_member(h, d.members[i], d.members[j], x);
  out.members.erase(out.members.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

/// Undoes the contraction of labels s and t into `pair` inside member m:
/// vertices of H in `s_vertices` get label s, the rest of the pair gets t.
inline Member uncontract(const Hypergraph& h, const Member& m, Vertex pair, Vertex s, Vertex t,
                         std::span<const Vertex> s_vertices) {
  if (!m.contains(pair)) throw std::invalid_argument("member does not hold the contracted pair");
  if (s == t || m.contains(s) || m.contains(t)) throw std::invalid_argument("uncontracted labels must be fresh");
  std::vector<Vertex> map = member_label_map(m);
  std::vector<char> from_s(h.num_vertices(), 0);
  for (Vertex v : s_vertices) {
    if (map.at(v) != pair) throw std::invalid_argument("s vertex lies outside the contracted pair");
    from_s[v] = 1;
  }
  for (Vertex v = 0; v < map.size(); ++v) {
    if (map[v] == pair) map[v] = from_s[v] ? s : t;
  }
  return make_member(h, map);
}

struct DecompositionOptions {
  /// When set, oracle tie-breaks and the marker inspection order are drawn
  /// from this seed instead of following vertex and label order.
  std::optional<std::uint64_t> seed;
};

/// Decomposition into split-free members. `lambda` must be lambda(H).
inline Decomposition prime_decomposition(const Hypergraph& h, Capacity lambda, DecompositionOptions options = {}) {
  const std::size_t n = h.num_vertices();
  if (n == 0) throw std::invalid_argument("decomposition of an empty hypergraph");
  Decomposition d;
  d.n = n;
  d.lambda = lambda;
  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);

  Vertex next = static_cast<Vertex>(n);
  std::vector<char> is_pair;  // indexed by label - n
  auto fresh = [&](bool pair) {
    is_pair.push_back(pair ? 1 : 0);
    return next++;
  };
  std::unordered_map<Vertex, std::size_t> owner;  // pair label -> member index
  auto place = [&](std::size_t idx, Member m) {
    for (Vertex l : m.labels) {
      if (l >= n && is_pair[l - n]) owner[l] = idx;
    }
    if (idx == d.members.size()) d.members.push_back(std::move(m));
    else d.members[idx] = std::move(m);
  };

  struct Frame {
    bool solve = true;
    std::vector<Vertex> map;  // solve: vertex of H -> label
    Vertex ls = 0, lt = 0, pair = 0;
    std::vector<Vertex> s_roots;  // uncontract: vertices of H labelled ls
  };
  std::vector<Frame> stack;
  {
    Frame root;
    root.map.resize(n);
    std::iota(root.map.begin(), root.map.end(), 0u);
    stack.push_back(std::move(root));
  }

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.solve) {
      Member piece = make_member(h, f.map);
      const std::size_t k = piece.graph.num_vertices();
      if (k <= 3) {
        place(d.members.size(), std::move(piece));
        continue;
      }
      std::vector<std::uint32_t> rank;
      if (rng) {
        rank.resize(k);
        std::iota(rank.begin(), rank.end(), 0u);
        std::shuffle(rank.begin(), rank.end(), *rng);
      }
      auto verdict = split_oracle(piece.graph, lambda, rank);
      if (auto* split = std::get_if<Split>(&verdict)) {
        Vertex x = fresh(false);
        auto in = indicator(k, split->cut.side);
        Frame left, right;
        left.map.resize(n);
        right.map.resize(n);
        for (Vertex v = 0; v < n; ++v) {
          bool mine = in[piece.phi[v]] != 0;
          left.map[v] = mine ? f.map[v] : x;
          right.map[v] = mine ? x : f.map[v];
        }
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
      } else {
        auto pair = std::get<NoSplitPair>(verdict);
        Frame undo;
        undo.solve = false;
        undo.ls = piece.labels[pair.s];
        undo.lt = piece.labels[pair.t];
        undo.pair = fresh(true);
        Frame inner;
        inner.map = f.map;
        for (Vertex v = 0; v < n; ++v) {
          if (f.map[v] == undo.ls) undo.s_roots.push_back(v);
          if (f.map[v] == undo.ls || f.map[v] == undo.lt) inner.map[v] = undo.pair;
        }
        stack.push_back(std::move(undo));
        stack.push_back(std::move(inner));
      }
      continue;
    }

    auto it = owner.find(f.pair);
    if (it == owner.end()) throw std::logic_error("contracted pair vanished from the decomposition");
    std::size_t idx = it->second;
    owner.erase(it);
    Member g = uncontract(h, d.members[idx], f.pair, f.ls, f.lt, f.s_roots);
    std::vector<Vertex> map = member_label_map(g);
    bool refine = false;
    if (g.graph.num_vertices() >= 4) {
      Vertex pair_side[2] = {*g.local_of(f.ls), *g.local_of(f.lt)};
      refine = cut_value(g.graph, std::span<const Vertex>(pair_side, 2)) == lambda;
    }
    if (!refine) {
      place(idx, std::move(g));
      continue;
    }
    Vertex x = fresh(false);
    std::vector<Vertex> inner(n), outer(n);
    for (Vertex v = 0; v < n; ++v) {
      bool mine = map[v] == f.ls || map[v] == f.lt;
      inner[v] = mine ? map[v] : x;
      outer[v] = mine ? x : map[v];
    }
    place(idx, make_member(h, inner));
    place(d.members.size(), make_member(h, outer));
  }
  for (const auto& m : d.members) {
    for (Vertex l : m.labels) {
      if (l >= n && is_pair[l - n]) throw std::logic_error("contracted pair left in a member");
    }
  }
  return d;
}

/// Glues every marker whose two members form a solid polygon, starting from
/// a prime decomposition. The result is the unique minimal decomposition
/// whose members are prime or solid polygons.
inline Decomposition canonical_from_prime(const Hypergraph& h, Decomposition d, DecompositionOptions options = {}) {
  auto markers = d.markers();
  if (options.seed) {
    std::mt19937_64 rng(*options.seed ^ 0x9e3779b97f4a7c15ull);
    std::shuffle(markers.begin(), markers.end(), rng);
  }
  for (Vertex x : markers) {
    auto [i, j] = d.members_of(x);
    Member glued = glued_member(h, d.members[i], d.members[j], x);
    if (!is_solid_polygon(glued.graph)) continue;
    d.members[i] = std::move(glued);
    d.members.erase(d.members.begin() + static_cast<std::ptrdiff_t>(j));
  }
  return d;
}

inline Decomposition canonical_decomposition(const Hypergraph& h, DecompositionOptions options = {}) {
  if (h.num_vertices() < 2) throw std::invalid_argument("decomposition needs at least two vertices");
  Capacity lambda = global_mincut(h).value;
  return canonical_from_prime(h, prime_decomposition(h, lambda, options), options);
}

/// One split per marker: the vertices of H behind marker x as seen from the
/// first member holding it, normalized to the side without vertex 0.
inline std::set<std::vector<Vertex>> induced_splits(const Decomposition& d) {
  std::set<std::vector<Vertex>> out;
  for (Vertex x : d.markers()) {
    auto [i, j] = d.members_of(x);
    (void)j;
    std::vector<Vertex> side;
    for (Vertex v = 0; v < d.n; ++v) {
      if (d.members[i].label_of(v) == x) side.push_back(v);
    }
    if (!side.empty() && side.front() == 0) side = complement(d.n, side);
    out.insert(std::move(side));
  }
  return out;
}

/// Same decomposition up to marker labels.
inline bool equivalent(const Decomposition& a, const Decomposition& b) {
  return a.n == b.n && a.members.size() == b.members.size() && induced_splits(a) == induced_splits(b);
}

/// Calls f(side) for each mincut of a member, sides given in local ids and
/// containing local vertex 0. Stops early when f returns false. Brittle
/// members are enumerated lazily.
inline void for_each_member_mincut(const Hypergraph& g, Capacity lambda, MemberShape shape,
                                   const std::function<bool(const std::vector<Vertex>&)>& f) {
  const std::size_t k = g.num_vertices();
  if (k < 2) return;
  auto normalized = [&](std::vector<Vertex> side) {
    std::sort(side.begin(), side.end());
    if (side.front() != 0) side = complement(k, side);
    return side;
  };
  switch (shape) {
    case MemberShape::kPrime:
      for (Vertex v = 0; v < k; ++v) {
        if (g.degree(v) != lambda) continue;
        if (!f(normalized({v}))) return;
        if (k == 2) return;
      }
      return;
    case MemberShape::kSemiBrittle: {
      auto order = is_solid_polygon(g)->cycle_order;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          std::vector<Vertex> arc(order.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                  order.begin() + static_cast<std::ptrdiff_t>(j + 1));
          if (arc.size() == k) continue;
          if (!f(normalized(std::move(arc)))) return;
        }
      }
      return;
    }
    case MemberShape::kBrittle: {
      if (k > 63) throw std::length_error("brittle member too large to enumerate");
      std::uint64_t count = (std::uint64_t{1} << (k - 1)) - 1;
      for (std::uint64_t bits = 0; bits < count; ++bits) {
        std::vector<Vertex> side{0};
        for (Vertex v = 1; v < k; ++v) {
          if ((bits >> (v - 1)) & 1) side.push_back(v);
        }
        if (!f(side)) return;
      }
      return;
    }
  }
}

/// Mincuts of a member that is prime or a solid polygon, at most `limit`.
/// Throws when the member is neither (checked by decomposing it).
inline std::vector<Cut> mincuts_of_member(const Hypergraph& g, Capacity lambda,
                                          std::size_t limit = std::size_t{1} << 20) {
  MemberShape shape = classify_member(g);
  if (shape == MemberShape::kPrime && g.num_vertices() >= 4 && prime_decomposition(g, lambda).members.size() != 1) {
    throw std::invalid_argument("member is neither prime nor a solid polygon");
  }
  std::vector<Cut> out;
  for_each_member_mincut(g, lambda, shape, [&](const std::vector<Vertex>& side) {
    out.push_back(make_cut(g, side));
    return out.size() < limit;
  });
  return out;
}

/// Vertices of H mapped into the given local side of a member.
inline std::vector<Vertex> lift_side(const Member& m, std::span<const Vertex> local_side) {
  auto in = indicator(m.graph.num_vertices(), local_side);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < m.phi.size(); ++v) {
    if (in[m.phi[v]]) out.push_back(v);
  }
  return out;
}

struct TreeEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  Vertex marker = 0;
};

/// Vertex sets per member plus the marker-sharing edges: O(n) storage.
struct DecompositionTree {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> psi;
  std::vector<TreeEdge> edges;

  std::size_t storage() const {
    std::size_t total = 0;
    for (const auto& s : psi) total += s.size();
    return total;
  }
};

inline DecompositionTree tree_store(const Decomposition& d) {
  DecompositionTree t;
  t.n = d.n;
  for (const auto& m : d.members) t.psi.push_back(m.labels);
  for (Vertex x : d.markers()) {
    auto [i, j] = d.members_of(x);
    t.edges.push_back({i, j, x});
  }
  return t;
}

/// Rebuilds member `node`: each tree edge at the node contracts the vertices
/// of H stored beyond it into that edge's marker.
inline Member tree_load_member(const Hypergraph& h, const DecompositionTree& t, std::size_t node) {
  const std::size_t k = t.psi.size();
  if (node >= k) throw std::invalid_argument("tree node out of range");
  if (t.n != h.num_vertices()) throw std::invalid_argument("tree does not match hypergraph");
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> adj(k);
  for (const auto& e : t.edges) {
    adj[e.a].push_back({e.b, e.marker});
    adj[e.b].push_back({e.a, e.marker});
  }
  constexpr Vertex kUnset = UINT32_MAX;
  std::vector<Vertex> map(h.num_vertices(), kUnset);
  std::vector<Vertex> via(k, kUnset);
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> queue{node};
  seen[node] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t a = queue[qi];
    for (Vertex l : t.psi[a]) {
      if (l < t.n) map[l] = a == node ? l : via[a];
    }
    for (auto [b, x] : adj[a]) {
      if (seen[b]) continue;
      seen[b] = true;
      via[b] = a == node ? x : via[a];
      queue.push_back(b);
    }
  }
  if (std::find(map.begin(), map.end(), kUnset) != map.end()) throw std::invalid_argument("tree does not cover H");
  Member m = make_member(h, map);
  if (m.labels != t.psi[node]) throw std::logic_error("reloaded member does not match its stored vertex set");
  return m;
}

/// Text form: one line per member with 1-indexed vertices and markers
/// written x#i, then one line per tree edge.
inline std::string to_text(const Decomposition& d) {
  auto markers = d.markers();
  auto name = [&](Vertex l) {
    if (l < d.n) return std::to_string(l + 1);
    auto pos = std::lower_bound(markers.begin(), markers.end(), l) - markers.begin();
    return "x#" + std::to_string(pos);
  };
  std::ostringstream out;
  out << "members " << d.members.size() << " markers " << markers.size() << " lambda " << d.lambda << '\n';
  for (std::size_t i = 0; i < d.members.size(); ++i) {
    const auto& m = d.members[i];
    out << "member " << i << ' ' << to_string(classify_member(m.graph)) << ':';
    for (Vertex l : m.labels) out << ' ' << name(l);
    out << '\n';
  }
  for (const auto& e : tree_store(d).edges) out << "tree " << e.a << ' ' << e.b << ' ' << name(e.marker) << '\n';
  return out.str();
}

}  // namespace hcut
