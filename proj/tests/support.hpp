#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hcut/hypergraph.hpp"
#include "hcut/io.hpp"

namespace hcut::testing {

struct RandomSpec {
  std::size_t min_n = 2;
  std::size_t max_n = 9;
  std::size_t max_m = 14;
  std::size_t max_rank = 4;
  Capacity max_capacity = 1;
};

inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> pick_n(spec.min_n, spec.max_n);
  std::size_t n = pick_n(rng);
  std::uniform_int_distribution<std::size_t> pick_m(0, spec.max_m);
  std::size_t m = pick_m(rng);
  std::uniform_int_distribution<std::size_t> pick_rank(2, std::max<std::size_t>(2, std::min(spec.max_rank, n)));
  std::uniform_int_distribution<Capacity> pick_cap(1, spec.max_capacity);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t r = pick_rank(rng);
    edges.push_back({{all.begin(), all.begin() + static_cast<std::ptrdiff_t>(r)}, pick_cap(rng)});
  }
  return Hypergraph(n, std::move(edges), {SmallEdgePolicy::kDrop, spec.max_capacity > 1});
}

/// Random hypergraph that is connected: a random spanning path of
/// hyperedges is added first.
inline Hypergraph random_connected(std::mt19937_64& rng, const RandomSpec& spec = {}) {
  Hypergraph base = random_hypergraph(rng, spec);
  std::size_t n = base.num_vertices();
  auto edges = base.edge_specs();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<Capacity> pick_cap(1, spec.max_capacity);
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({{perm[i], perm[i + 1]}, pick_cap(rng)});
  return Hypergraph(n, std::move(edges), {SmallEdgePolicy::kDrop, spec.max_capacity > 1});
}

/// n even: edges e_i = {v_i, v_{n/2}, ..., v_n} for 1 <= i < n/2, written
/// 1-indexed. Every connected subhypergraph keeps all edges, so deletion
/// alone cannot bring sum-deg below quadratic.
inline Hypergraph quadratic_family(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (Vertex i = 0; i + 1 < n / 2; ++i) {
    EdgeSpec e{{i}};
    for (Vertex v = static_cast<Vertex>(n / 2 - 1); v < n; ++v) e.pins.push_back(v);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges), {SmallEdgePolicy::kReject, false});
}

inline std::string fixture_path(const std::string& name) { return std::string(HCUT_FIXTURE_DIR) + "/" + name; }

inline Hypergraph fixture(const std::string& name) { return read_hypergraph_file(fixture_path(name)).graph; }

}  // namespace hcut::testing
