// Invariant battery: every module's properties checked against the
// brute-force oracles on one small hypergraph.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "hcut/approx.hpp"
#include "hcut/brute.hpp"
#include "hcut/cactus.hpp"
#include "hcut/cut.hpp"
#include "hcut/decomposition.hpp"
#include "hcut/flow.hpp"
#include "hcut/mincut.hpp"
#include "hcut/ordering.hpp"
#include "hcut/sparsify.hpp"

namespace hcut {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

namespace detail {

class CheckLog {
 public:
  explicit CheckLog(std::string name) { result_.name = std::move(name); }

  // Records the first failure only.
  void expect(bool ok, const std::string& what) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = what;
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

inline std::vector<Vertex> side_of(std::uint64_t mask, std::size_t n) {
  std::vector<Vertex> side;
  for (Vertex v = 0; v < n; ++v) {
    if ((mask >> v) & 1) side.push_back(v);
  }
  return side;
}

inline std::string show(std::span<const Vertex> side) {
  std::string out = "{";
  for (std::size_t i = 0; i < side.size(); ++i) out += (i ? " " : "") + std::to_string(side[i] + 1);
  return out + "}";
}

inline bool within_factor(Capacity v, Capacity lambda, Rational eps) {
  using U = unsigned __int128;
  return v >= lambda && U(v) * eps.den <= U(lambda) * (2 * eps.den + eps.num);
}

constexpr OrderingKind kKinds[] = {OrderingKind::kMA, OrderingKind::kTight, OrderingKind::kQueyranne};

inline void check_mincut(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  for (auto kind : kKinds) {
    CheckLog log("mincut." + std::string(to_string(kind)));
    auto res = global_mincut(h, kind);
    log.expect(res.value == lambda, "value " + std::to_string(res.value) + ", brute " + std::to_string(lambda));
    log.expect(cut_value(h, res.witness.side) == res.value, "witness " + show(res.witness.side) + " does not revalidate");
    r.checks.push_back(log.done());
  }
}

inline void check_orderings(const Hypergraph& h, VerifyReport& r) {
  const std::size_t n = h.num_vertices();
  for (auto kind : kKinds) {
    CheckLog greedy("ordering." + std::string(to_string(kind)) + ".greedy");
    CheckLog pendant("ordering." + std::string(to_string(kind)) + ".pendant");
    for (Vertex start = 0; start < n; ++start) {
      auto ord = compute_ordering(h, kind, start);
      std::vector<Vertex> prefix;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
          for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Vertex> vj{ord.order[j]};
            Capacity d = capacity_between(h, {prefix, vj});
            Capacity dp = capacity_within(h, prefix, vj);
            greedy.expect(ord.attach[i] >= detail::ordering_key(kind, d, dp),
                          "start " + std::to_string(start + 1) + ": position " + std::to_string(i + 1) +
                              " is not greedy");
          }
        }
        prefix.push_back(ord.order[i]);
      }
      auto pair = pendant_pair(ord);
      pendant.expect(pair.value == brute_st_connectivity(h, pair.s, pair.t, n),
                     "start " + std::to_string(start + 1) + ": last pair is not pendant");
    }
    r.checks.push_back(greedy.done());
    r.checks.push_back(pendant.done());
  }
  CheckLog ma("ordering.ma.consecutive");
  auto ord = compute_ordering(h, OrderingKind::kMA);
  for (std::size_t i = 1; i < n; ++i) {
    ma.expect(brute_st_connectivity(h, ord.order[i - 1], ord.order[i], n) >= ord.adjacency[i],
              "lambda(v_" + std::to_string(i) + ", v_" + std::to_string(i + 1) + ") below d(V_i, v_i+1)");
  }
  r.checks.push_back(ma.done());
}

inline void check_sparsifier(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  const std::size_t n = h.num_vertices();
  auto index = build_index(h);
  CheckLog preserve("sparsify.cut_preservation");
  CheckLog size("sparsify.sum_deg");
  for (std::size_t k = 0; k <= h.max_degree() + 1; ++k) {
    auto hk = extract_sparsifier(index, k).graph;
    size.expect(hk.sum_deg() <= 2 * k * n, "k = " + std::to_string(k) + ": sum-deg " + std::to_string(hk.sum_deg()));
    detail::CutEnumerator full(h, n), sparse(hk, n);
    full.for_each_side([&](Mask m) {
      preserve.expect(sparse.value(m) >= std::min<Capacity>(k, full.value(m)),
                      "k = " + std::to_string(k) + ": cut " + show(side_of(m, n)) + " lost capacity");
    });
  }
  r.checks.push_back(preserve.done());
  r.checks.push_back(size.done());
  CheckLog fast("sparsify.mincut");
  auto res = mincut_uncapacitated(h);
  fast.expect(res.value == lambda, "value " + std::to_string(res.value) + ", brute " + std::to_string(lambda));
  r.checks.push_back(fast.done());
}

inline void check_approx(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  CheckLog interval("approx.interval");
  for (Rational eps : {Rational{1, 1}, Rational{1, 10}, Rational{1, 100}}) {
    for (auto rule : {TightnessRule::kAdjacency, TightnessRule::kQueyranneAverage}) {
      auto res = approximate_mincut(h, eps, rule);
      interval.expect(res.value && within_factor(*res.value, lambda, eps),
                      "eps " + std::to_string(eps.num) + "/" + std::to_string(eps.den) + " left the interval");
    }
  }
  r.checks.push_back(interval.done());
  CheckLog beta("approx.beta");
  auto red = capacity_reduction(h);
  beta.expect(red.beta <= lambda && lambda <= h.num_vertices() * red.beta,
              "beta " + std::to_string(red.beta) + " does not bracket lambda " + std::to_string(lambda));
  if (red.reduced.target.num_vertices() >= 2) {
    beta.expect(brute_mincut(red.reduced.target, h.num_vertices()).value == lambda, "reduction changed lambda");
  }
  r.checks.push_back(beta.done());
}

inline void check_flow(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  const std::size_t n = h.num_vertices();
  auto last = max_flow_last_pair(h);
  CheckLog enumerate("flow.enumeration");
  enumerate.expect(last.value == brute_st_connectivity(h, last.s, last.t, n), "last-pair flow is not maximum");
  auto all = brute_min_st_cuts(h, last.s, last.t, n);
  auto cuts = enumerate_min_st_cuts(h, last.digraph, last.s, last.t, 3);
  std::set<std::vector<Vertex>> distinct;
  for (const auto& c : cuts) {
    distinct.insert(c.side);
    enumerate.expect(std::binary_search(all.begin(), all.end(), c.side), show(c.side) + " is not a minimum s-t cut");
  }
  enumerate.expect(cuts.size() == std::min<std::size_t>(3, all.size()) && distinct.size() == cuts.size(),
                   std::to_string(cuts.size()) + " cuts returned, " + std::to_string(all.size()) + " exist");
  r.checks.push_back(enumerate.done());
  if (n < 4) return;
  CheckLog oracle("flow.split_oracle");
  auto verdict = split_oracle(h, lambda);
  if (auto* split = std::get_if<Split>(&verdict)) {
    const auto& side = split->cut.side;
    oracle.expect(cut_value(h, side) == lambda && side.size() >= 2 && n - side.size() >= 2,
                  show(side) + " is not a split");
  } else {
    auto pair = std::get<NoSplitPair>(verdict);
    for (const auto& side : brute_all_mincuts(h, n)) {
      bool s_in = std::binary_search(side.begin(), side.end(), pair.s);
      bool t_in = std::binary_search(side.begin(), side.end(), pair.t);
      oracle.expect(s_in == t_in || side.size() < 2 || n - side.size() < 2,
                    "split " + show(side) + " separates the certified pair");
    }
  }
  r.checks.push_back(oracle.done());
}

inline void check_decomposition(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  const std::size_t n = h.num_vertices();
  CheckLog prime("decomp.prime");
  auto pd = prime_decomposition(h, lambda);
  for (const auto& m : pd.members) {
    prime.expect(brute_is_prime(m.graph, lambda, n), "member " + show(m.labels) + " has a split");
  }
  r.checks.push_back(prime.done());

  auto d = canonical_from_prime(h, pd);
  CheckLog standard("decomp.standard");
  for (const auto& m : d.members) {
    if (classify_member(m.graph) != MemberShape::kPrime) continue;
    standard.expect(brute_is_prime(m.graph, lambda, n),
                    "member " + show(m.labels) + " is neither prime nor a polygon");
  }
  r.checks.push_back(standard.done());

  CheckLog cut_map("decomp.cut_map");
  std::set<std::vector<EdgeId>> lifted;
  for (const auto& m : d.members) {
    for_each_member_mincut(m.graph, lambda, classify_member(m.graph), [&](const std::vector<Vertex>& local) {
      auto cut = make_cut(h, lift_side(m, local));
      cut_map.expect(cut.value == lambda, "lifted " + show(cut.side) + " is not a mincut");
      lifted.insert(cut.edge_cut_set);
      return true;
    });
  }
  auto family = brute_min_edge_cut_sets(h, n);
  cut_map.expect(lifted == family, std::to_string(lifted.size()) + " lifted edge-cut-sets, brute finds " +
                                       std::to_string(family.size()));
  r.checks.push_back(cut_map.done());

  CheckLog unique("decomp.unique");
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    unique.expect(equivalent(d, canonical_decomposition(h, {.seed = seed})),
                  "seed " + std::to_string(seed) + " gives a different decomposition");
  }
  r.checks.push_back(unique.done());

  CheckLog count("decomp.count");
  count.expect(family.size() <= n * (n - 1) / 2, std::to_string(family.size()) + " min edge-cut-sets");
  r.checks.push_back(count.done());
}

inline void check_cactus(const Hypergraph& h, Capacity lambda, VerifyReport& r) {
  const std::size_t n = h.num_vertices();
  auto hc = build_hypercactus(h);
  CheckLog corr("cactus.correspondence");
  detail::CutEnumerator cuts(h, n);
  cuts.for_each_side([&](Mask m) {
    auto side = side_of(m, n);
    corr.expect(is_mincut(hc, side) == (cuts.value(m) == lambda), "disagreement on " + show(side));
  });
  auto listed = enumerate_min_edge_cut_sets(hc, h);
  corr.expect(std::set<std::vector<EdgeId>>(listed.begin(), listed.end()) == brute_min_edge_cut_sets(h, n),
              "enumerated edge-cut-sets differ from brute force");
  r.checks.push_back(corr.done());

  CheckLog shape("cactus.structure");
  shape.expect(is_hypercactus_structure(hc), "structure is not a hypercactus");
  shape.expect(hc.structure.num_vertices() <= 2 * n, "more than 2n structure vertices");
  r.checks.push_back(shape.done());

  if (!h.is_uncapacitated()) return;
  CheckLog fast("cactus.fast");
  auto quick = build_hypercactus_uncapacitated_fast(h);
  fast.expect(enumerate_min_edge_cut_sets(quick, h) == listed, "fast path gives a different mincut family");
  r.checks.push_back(fast.done());
}

}  // namespace detail

/// Runs the whole battery. Capacitated inputs skip the sparsifier checks.
inline VerifyReport verify_instance(const Hypergraph& h, std::size_t max_n = 12) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw std::invalid_argument("verification needs at least two vertices");
  if (n > max_n || n > kDefaultBruteBound) throw std::length_error("instance too large for the brute-force battery");
  VerifyReport r;
  Capacity lambda = brute_mincut(h, n).value;
  detail::check_mincut(h, lambda, r);
  detail::check_orderings(h, r);
  if (h.is_uncapacitated()) detail::check_sparsifier(h, lambda, r);
  detail::check_approx(h, lambda, r);
  detail::check_flow(h, lambda, r);
  detail::check_decomposition(h, lambda, r);
  detail::check_cactus(h, lambda, r);
  return r;
}

/// Pairs whose connectivity an ordering-based k-sparsifier fails to keep.
struct SparsifierViolation {
  OrderingKind kind = OrderingKind::kMA;
  std::size_t k = 0;
  /// (u, v, lambda_H(u, v), lambda_{H_k}(u, v)); u < v.
  std::vector<std::array<std::size_t, 4>> pairs;
};

/// For the given ordering kind, the smallest k whose sparsifier built on
/// that ordering drops some lambda(u, v) below min(k, lambda_H(u, v)).
inline std::optional<SparsifierViolation> smallest_sparsifier_violation(const Hypergraph& h, OrderingKind kind) {
  if (!h.is_uncapacitated()) throw std::invalid_argument("sparsifier check needs an uncapacitated hypergraph");
  const std::size_t n = h.num_vertices();
  auto index = build_index(h, compute_ordering(h, kind));
  std::vector<std::vector<Capacity>> local(n, std::vector<Capacity>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) local[u][v] = brute_st_connectivity(h, u, v, n);
  }
  for (std::size_t k = 1; k <= h.max_degree(); ++k) {
    auto hk = extract_sparsifier(index, k).graph;
    SparsifierViolation found{kind, k, {}};
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        Capacity got = brute_st_connectivity(hk, u, v, n);
        if (got < std::min<Capacity>(k, local[u][v])) found.pairs.push_back({u, v, local[u][v], got});
      }
    }
    if (!found.pairs.empty()) return found;
  }
  return std::nullopt;
}

}  // namespace hcut
