// Capacitated hypergraph value type and contraction.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcut {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Capacity = std::uint64_t;

/// Bound on the total edge capacity of a hypergraph. Every sum the library
/// forms stays below 2^64 under this bound, including capacity-weighted
/// sum-deg for n < 2^23 and the 128-bit rational comparisons in approx.hpp.
inline constexpr Capacity kMaxTotalCapacity = Capacity{1} << 40;

enum class SmallEdgePolicy { kReject, kDrop };

struct BuildOptions {
  SmallEdgePolicy small_edges = SmallEdgePolicy::kDrop;
  /// Merge edges with identical pin sets into one edge with summed capacity.
  bool merge_parallel = true;
};

struct EdgeSpec {
  std::vector<Vertex> pins;
  Capacity capacity = 1;
};

inline Capacity checked_add(Capacity a, Capacity b) {
  if (b > std::numeric_limits<Capacity>::max() - a) throw std::overflow_error("capacity overflow");
  return a + b;
}

/// Immutable hypergraph on vertices [0, n). Pins of every edge are sorted and
/// distinct, every edge has at least two pins and a positive capacity.
/// Zero-capacity edges are discarded at construction since they cross no cut
/// with any weight.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(std::size_t n, std::vector<EdgeSpec> edges, BuildOptions options = {}) : n_(n) {
    if (n > std::numeric_limits<Vertex>::max()) throw std::length_error("too many vertices");
    std::vector<EdgeSpec> kept;
    kept.reserve(edges.size());
    for (auto& spec : edges) {
      auto& pins = spec.pins;
      std::sort(pins.begin(), pins.end());
      pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
      if (!pins.empty() && pins.back() >= n) {
        throw std::invalid_argument("pin " + std::to_string(pins.back()) + " out of range for n = " +
                                    std::to_string(n));
      }
      if (pins.size() < 2) {
        if (options.small_edges == SmallEdgePolicy::kReject) {
          throw std::invalid_argument("edge with fewer than two distinct pins");
        }
        continue;
      }
      if (spec.capacity == 0) continue;
      kept.push_back(std::move(spec));
    }
    if (options.merge_parallel) kept = merge_parallel_edges(std::move(kept));

    edge_begin_.reserve(kept.size() + 1);
    for (auto& spec : kept) {
      pins_.insert(pins_.end(), spec.pins.begin(), spec.pins.end());
      edge_begin_.push_back(pins_.size());
      capacity_.push_back(spec.capacity);
      total_capacity_ = checked_add(total_capacity_, spec.capacity);
      if (total_capacity_ > kMaxTotalCapacity) throw std::overflow_error("total capacity exceeds 2^40");
    }
    if (pins_.size() > std::numeric_limits<EdgeId>::max()) throw std::length_error("too many pins");
    build_incidence();
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return capacity_.size(); }
  /// Unweighted sum of degrees, p.
  std::size_t num_pins() const { return pins_.size(); }

  /// Capacity-weighted sum of degrees: sum over edges of |e| c(e).
  Capacity sum_deg() const {
    unsigned __int128 total = 0;
    for (EdgeId e = 0; e < num_edges(); ++e) total += static_cast<unsigned __int128>(pins(e).size()) * capacity_[e];
    if (total > std::numeric_limits<Capacity>::max()) throw std::overflow_error("sum-deg overflow");
    return static_cast<Capacity>(total);
  }

  std::span<const Vertex> pins(EdgeId e) const {
    return {pins_.data() + edge_begin_[e], edge_begin_[e + 1] - edge_begin_[e]};
  }
  Capacity capacity(EdgeId e) const { return capacity_[e]; }

  std::span<const EdgeId> incident(Vertex v) const {
    return {incident_.data() + vertex_begin_[v], vertex_begin_[v + 1] - vertex_begin_[v]};
  }

  /// Capacity-weighted degree, i.e. the value of the trivial cut {v}.
  Capacity degree(Vertex v) const {
    Capacity total = 0;
    for (EdgeId e : incident(v)) total += capacity_[e];
    return total;
  }

  Capacity total_capacity() const { return total_capacity_; }

  bool is_uncapacitated() const {
    return std::all_of(capacity_.begin(), capacity_.end(), [](Capacity c) { return c == 1; });
  }

  /// Largest number of incident edges over all vertices.
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, incident(v).size());
    return best;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(num_edges());
    for (EdgeId e = 0; e < num_edges(); ++e) {
      auto p = pins(e);
      out.push_back({std::vector<Vertex>(p.begin(), p.end()), capacity_[e]});
    }
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.pins_ == b.pins_ && a.edge_begin_ == b.edge_begin_ && a.capacity_ == b.capacity_;
  }

 private:
  // Keeps the first occurrence order of each distinct pin set.
  static std::vector<EdgeSpec> merge_parallel_edges(std::vector<EdgeSpec> edges) {
    std::vector<std::size_t> idx(edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto& pa = edges[a].pins;
      const auto& pb = edges[b].pins;
      if (pa.size() != pb.size()) return pa.size() < pb.size();
      return pa < pb;
    });
    std::vector<bool> keep(edges.size(), true);
    std::size_t i = 0;
    while (i < idx.size()) {
      std::size_t j = i + 1;
      while (j < idx.size() && edges[idx[j]].pins == edges[idx[i]].pins) {
        edges[idx[i]].capacity = checked_add(edges[idx[i]].capacity, edges[idx[j]].capacity);
        keep[idx[j]] = false;
        ++j;
      }
      i = j;
    }
    std::vector<EdgeSpec> out;
    out.reserve(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (keep[e]) out.push_back(std::move(edges[e]));
    }
    return out;
  }

  void build_incidence() {
    vertex_begin_.assign(n_ + 1, 0);
    for (Vertex v : pins_) ++vertex_begin_[v + 1];
    for (std::size_t v = 0; v < n_; ++v) vertex_begin_[v + 1] += vertex_begin_[v];
    incident_.resize(pins_.size());
    std::vector<std::size_t> fill(vertex_begin_.begin(), vertex_begin_.end() - 1);
    for (EdgeId e = 0; e < num_edges(); ++e) {
      for (Vertex v : pins(e)) incident_[fill[v]++] = e;
    }
  }

  std::size_t n_ = 0;
  std::vector<Vertex> pins_;
  std::vector<std::size_t> edge_begin_{0};
  std::vector<Capacity> capacity_;
  std::vector<std::size_t> vertex_begin_{0};
  std::vector<EdgeId> incident_;
  Capacity total_capacity_ = 0;
};

/// A phi-contraction: target vertex phi[v] is the image of source vertex v.
struct ContractionMap {
  Hypergraph target;
  std::vector<Vertex> phi;
};

/// Contracts every preimage phi^-1(u) into u. phi must be total on the source
/// and surjective onto [0, max(phi) + 1). Edges left with fewer than two pins
/// are dropped; edges with identical images are merged.
inline ContractionMap contract(const Hypergraph& h, std::span<const Vertex> phi) {
  if (phi.size() != h.num_vertices()) throw std::invalid_argument("contraction map must be total");
  std::size_t target_n = 0;
  for (Vertex u : phi) target_n = std::max<std::size_t>(target_n, std::size_t{u} + 1);
  std::vector<bool> hit(target_n, false);
  for (Vertex u : phi) hit[u] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("contraction map is not surjective");
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    EdgeSpec spec;
    spec.capacity = h.capacity(e);
    for (Vertex v : h.pins(e)) spec.pins.push_back(phi[v]);
    std::sort(spec.pins.begin(), spec.pins.end());
    spec.pins.erase(std::unique(spec.pins.begin(), spec.pins.end()), spec.pins.end());
    if (spec.pins.size() >= 2) edges.push_back(std::move(spec));
  }
  return {Hypergraph(target_n, std::move(edges)), std::vector<Vertex>(phi.begin(), phi.end())};
}

/// Relabels arbitrary labels to a dense range [0, k) ordered by label value.
/// Returns the dense map and, through `distinct`, the sorted label list.
template <typename Label>
std::vector<Vertex> compact_labels(std::span<const Label> labels, std::vector<Label>* distinct = nullptr) {
  std::vector<Label> values(labels.begin(), labels.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Vertex> dense(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    dense[i] = static_cast<Vertex>(std::lower_bound(values.begin(), values.end(), labels[i]) - values.begin());
  }
  if (distinct) *distinct = std::move(values);
  return dense;
}

}  // namespace hcut
