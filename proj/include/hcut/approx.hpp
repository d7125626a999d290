// (2 + eps)-approximate mincut by repeated alpha-contraction of MA orderings,
// and the capacity reduction that bounds the number of rounds.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/hypergraph.hpp"
#include "hcut/ordering.hpp"

namespace hcut {

/// Non-negative exact fraction num / den.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    std::uint64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return {num, den};
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline constexpr std::uint64_t kMaxEpsilonTerm = std::uint64_t{1} << 20;

/// Parses "0.1", "2" or "1/10" into an exact positive rational. Numerator
/// and denominator must stay within 2^20 after reduction.
inline Rational parse_epsilon(std::string_view text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("bad epsilon '" + std::string(text) + "'"); };
  auto parse_uint = [&](std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t num = 0, den = 0;
    if (!parse_uint(text.substr(0, slash), num) || !parse_uint(text.substr(slash + 1), den) || den == 0) return fail();
    r = Rational::reduced(num, den);
  } else {
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (dot != std::string_view::npos && frac.empty()) return fail();
    if (frac.size() > 12) return fail();
    std::uint64_t w = 0, f = 0, scale = 1;
    if (!whole.empty() && !parse_uint(whole, w)) return fail();
    if (whole.empty() && frac.empty()) return fail();
    if (!frac.empty() && !parse_uint(frac, f)) return fail();
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    if (w > kMaxEpsilonTerm) return fail();
    r = Rational::reduced(w * scale + f, scale);
  }
  if (r.num == 0 || r.num > kMaxEpsilonTerm || r.den > kMaxEpsilonTerm) return fail();
  return r;
}

enum class TightnessRule {
  /// Consecutive vertices stay together while d(V_i, v_{i+1}) >= alpha.
  kAdjacency,
  /// Queyranne ordering, together while (d + d') / 2 >= alpha.
  kQueyranneAverage,
};

struct AlphaPartition {
  VertexOrdering ordering;
  Rational alpha;
  /// Maximal alpha-tight runs of the ordering, in order.
  std::vector<std::vector<Vertex>> blocks;
};

namespace detail {

// key >= alpha, exactly.
inline bool reaches(Capacity key, std::uint64_t key_den, const Rational& alpha) {
  using U = unsigned __int128;
  return U(key) * alpha.den >= U(alpha.num) * key_den;
}

}  // namespace detail

inline AlphaPartition alpha_partition(const VertexOrdering& ord, Rational alpha,
                                      TightnessRule rule = TightnessRule::kAdjacency) {
  AlphaPartition part;
  part.ordering = ord;
  part.alpha = alpha;
  for (std::size_t i = 0; i < ord.order.size(); ++i) {
    bool joins = false;
    if (i > 0) {
      joins = rule == TightnessRule::kAdjacency ? detail::reaches(ord.adjacency[i], 1, alpha)
                                                : detail::reaches(ord.adjacency[i] + ord.inner[i], 2, alpha);
    }
    if (!joins) part.blocks.emplace_back();
    part.blocks.back().push_back(ord.order[i]);
  }
  return part;
}

/// Contracts every maximal alpha-tight block of the ordering to one vertex;
/// block i becomes target vertex i.
inline ContractionMap alpha_contraction(const Hypergraph& h, const VertexOrdering& ord, Rational alpha,
                                        TightnessRule rule = TightnessRule::kAdjacency) {
  if (ord.order.size() != h.num_vertices()) throw std::invalid_argument("ordering does not match hypergraph");
  auto part = alpha_partition(ord, alpha, rule);
  std::vector<Vertex> phi(h.num_vertices());
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    for (Vertex v : part.blocks[b]) phi[v] = static_cast<Vertex>(b);
  }
  return contract(h, phi);
}

struct ApproxRound {
  std::size_t vertices = 0;
  /// Capacity of edges spanning all vertices, removed before this round.
  Capacity spanning = 0;
  /// Minimum weighted degree, including all spanning capacity removed so far.
  Capacity delta = 0;
  Capacity sum_deg_before = 0;
  Capacity sum_deg_after = 0;
};

struct ApproxResult {
  /// Empty when no round ran (fewer than two vertices): the unbounded answer.
  std::optional<Capacity> value;
  std::vector<ApproxRound> rounds;
};

/// Returns v with lambda(H) <= v <= (2 + eps) lambda(H). Edges containing
/// every vertex cross every cut, so they are removed and their capacity is
/// carried as an offset on every later candidate.
inline ApproxResult approximate_mincut(const Hypergraph& h, Rational eps,
                                       TightnessRule rule = TightnessRule::kAdjacency) {
  if (eps.num == 0) throw std::invalid_argument("eps must be positive");
  ApproxResult result;
  Hypergraph g = h;
  Capacity offset = 0;
  auto consider = [&](Capacity v) { result.value = result.value ? std::min(*result.value, v) : v; };

  while (g.num_vertices() >= 2) {
    ApproxRound round;
    round.vertices = g.num_vertices();
    std::vector<EdgeSpec> rest;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto p = g.pins(e);
      if (p.size() == g.num_vertices()) round.spanning += g.capacity(e);
      else rest.push_back({{p.begin(), p.end()}, g.capacity(e)});
    }
    if (round.spanning > 0) g = Hypergraph(g.num_vertices(), std::move(rest));
    offset += round.spanning;

    Capacity min_degree = std::numeric_limits<Capacity>::max();
    for (Vertex v = 0; v < g.num_vertices(); ++v) min_degree = std::min(min_degree, g.degree(v));
    round.delta = offset + min_degree;
    round.sum_deg_before = g.sum_deg();
    consider(round.delta);
    if (min_degree == 0) {
      result.rounds.push_back(round);
      break;
    }
    // alpha = min_degree / (2 + eps)
    Rational alpha{min_degree * eps.den, 2 * eps.den + eps.num};
    auto kind = rule == TightnessRule::kAdjacency ? OrderingKind::kMA : OrderingKind::kQueyranne;
    auto next = alpha_contraction(g, compute_ordering(g, kind), alpha, rule).target;
    round.sum_deg_after = next.sum_deg();
    if (next.num_vertices() >= g.num_vertices()) throw std::logic_error("alpha-contraction made no progress");
    if (rule == TightnessRule::kAdjacency) {
      using U = unsigned __int128;
      if (U(round.sum_deg_after) * (2 * eps.den + eps.num) > U(round.sum_deg_before) * (2 * eps.den)) {
        throw std::logic_error("alpha-contraction did not shrink sum-deg by 2 / (2 + eps)");
      }
    }
    result.rounds.push_back(round);
    g = std::move(next);
  }
  return result;
}

struct CapacityReduction {
  /// Minimum of d(V_{i-1}, v_i) over i > 1 of one MA ordering.
  Capacity beta = 0;
  ContractionMap reduced;
};

/// The 2 n beta-contraction, which keeps lambda and caps sum-deg at
/// O(n^2 beta). With beta = 0 the input is disconnected and is returned
/// unchanged.
inline CapacityReduction capacity_reduction(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw std::invalid_argument("capacity reduction needs at least two vertices");
  auto ord = compute_ordering(h, OrderingKind::kMA);
  CapacityReduction out;
  out.beta = *std::min_element(ord.adjacency.begin() + 1, ord.adjacency.end());
  if (out.beta == 0) {
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), 0u);
    out.reduced = contract(h, identity);
    return out;
  }
  out.reduced = alpha_contraction(h, ord, Rational{2 * n * out.beta, 1});
  return out;
}

}  // namespace hcut
