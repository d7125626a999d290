// Exhaustive oracles over all bipartitions. Exponential in n; used by the
// test suites and by `hcut verify` to check every algorithm at desk scale.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcut/cut.hpp"
#include "hcut/hypergraph.hpp"

namespace hcut {

inline constexpr std::size_t kDefaultBruteBound = 16;

namespace detail {

using Mask = std::uint64_t;

class CutEnumerator {
 public:
  CutEnumerator(const Hypergraph& h, std::size_t max_n) : h_(h) {
    if (h.num_vertices() > max_n || h.num_vertices() > 30) {
      throw std::length_error("brute force refused: n = " + std::to_string(h.num_vertices()) +
                              " exceeds bound " + std::to_string(max_n));
    }
    full_ = (Mask{1} << h.num_vertices()) - 1;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      Mask m = 0;
      for (Vertex v : h.pins(e)) m |= Mask{1} << v;
      edge_mask_.push_back(m);
    }
  }

  Mask full() const { return full_; }

  Capacity value(Mask side) const {
    Capacity total = 0;
    for (EdgeId e = 0; e < edge_mask_.size(); ++e) {
      if ((edge_mask_[e] & side) && (edge_mask_[e] & ~side & full_)) total += h_.capacity(e);
    }
    return total;
  }

  std::vector<EdgeId> edges(Mask side) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_mask_.size(); ++e) {
      if ((edge_mask_[e] & side) && (edge_mask_[e] & ~side & full_)) out.push_back(e);
    }
    return out;
  }

  /// Calls f(mask) for every side that contains vertex 0 and is not V.
  template <typename F>
  void for_each_side(F&& f) const {
    std::size_t n = h_.num_vertices();
    if (n < 2) return;
    Mask rest = Mask{1} << (n - 1);
    for (Mask bits = 0; bits + 1 < rest; ++bits) f((bits << 1) | 1);
  }

 private:
  const Hypergraph& h_;
  Mask full_ = 0;
  std::vector<Mask> edge_mask_;
};

inline std::vector<Vertex> mask_to_side(Mask m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

// Lexicographic comparison of the sorted vertex lists of two masks.
inline bool lex_less(Mask a, Mask b) { return mask_to_side(a) < mask_to_side(b); }

}  // namespace detail

struct BruteMincut {
  Capacity value = 0;
  Cut cut;
};

/// Minimum over all 2^(n-1) - 1 bipartitions. Among minimizers the
/// lexicographically smallest side containing vertex 0 is returned.
inline BruteMincut brute_mincut(const Hypergraph& h, std::size_t max_n = kDefaultBruteBound) {
  if (h.num_vertices() < 2) throw std::invalid_argument("mincut needs at least two vertices");
  detail::CutEnumerator cuts(h, max_n);
  Capacity best = std::numeric_limits<Capacity>::max();
  detail::Mask best_side = 0;
  cuts.for_each_side([&](detail::Mask s) {
    Capacity v = cuts.value(s);
    if (v < best || (v == best && detail::lex_less(s, best_side))) {
      best = v;
      best_side = s;
    }
  });
  auto side = detail::mask_to_side(best_side);
  return {best, make_cut(h, side)};
}

/// All sides (containing vertex 0) whose cut value equals lambda(H).
inline std::vector<std::vector<Vertex>> brute_all_mincuts(const Hypergraph& h,
                                                          std::size_t max_n = kDefaultBruteBound) {
  Capacity lambda = brute_mincut(h, max_n).value;
  detail::CutEnumerator cuts(h, max_n);
  std::vector<std::vector<Vertex>> out;
  cuts.for_each_side([&](detail::Mask s) {
    if (cuts.value(s) == lambda) out.push_back(detail::mask_to_side(s));
  });
  return out;
}

/// The distinct min edge-cut-sets {delta(S) : c(S) = lambda}.
inline std::set<std::vector<EdgeId>> brute_min_edge_cut_sets(const Hypergraph& h,
                                                             std::size_t max_n = kDefaultBruteBound) {
  Capacity lambda = brute_mincut(h, max_n).value;
  detail::CutEnumerator cuts(h, max_n);
  std::set<std::vector<EdgeId>> out;
  cuts.for_each_side([&](detail::Mask s) {
    if (cuts.value(s) == lambda) out.insert(cuts.edges(s));
  });
  return out;
}

/// lambda(s, t; H) by enumeration.
inline Capacity brute_st_connectivity(const Hypergraph& h, Vertex s, Vertex t,
                                      std::size_t max_n = kDefaultBruteBound) {
  if (s == t || s >= h.num_vertices() || t >= h.num_vertices()) throw std::invalid_argument("bad s-t pair");
  detail::CutEnumerator cuts(h, max_n);
  Capacity best = std::numeric_limits<Capacity>::max();
  cuts.for_each_side([&](detail::Mask m) {
    bool has_s = (m >> s) & 1, has_t = (m >> t) & 1;
    if (has_s != has_t) best = std::min(best, cuts.value(m));
  });
  return best;
}

/// Every minimum s-t cut, reported as the side containing s.
inline std::vector<std::vector<Vertex>> brute_min_st_cuts(const Hypergraph& h, Vertex s, Vertex t,
                                                          std::size_t max_n = kDefaultBruteBound) {
  Capacity best = brute_st_connectivity(h, s, t, max_n);
  detail::CutEnumerator cuts(h, max_n);
  std::vector<std::vector<Vertex>> out;
  cuts.for_each_side([&](detail::Mask m) {
    bool has_s = (m >> s) & 1, has_t = (m >> t) & 1;
    if (has_s != has_t && cuts.value(m) == best) {
      out.push_back(detail::mask_to_side(has_s ? m : (cuts.full() & ~m)));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff no mincut has two or more vertices on each side.
inline bool brute_is_prime(const Hypergraph& h, Capacity lambda, std::size_t max_n = kDefaultBruteBound) {
  std::size_t n = h.num_vertices();
  if (n < 4) return true;
  detail::CutEnumerator cuts(h, max_n);
  bool prime = true;
  cuts.for_each_side([&](detail::Mask m) {
    auto k = static_cast<std::size_t>(std::popcount(m));
    if (k >= 2 && n - k >= 2 && cuts.value(m) == lambda) prime = false;
  });
  return prime;
}

}  // namespace hcut
