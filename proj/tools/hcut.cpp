#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcut/approx.hpp"
#include "hcut/cactus.hpp"
#include "hcut/decomposition.hpp"
#include "hcut/io.hpp"
#include "hcut/mincut.hpp"
#include "hcut/sparsify.hpp"
#include "hcut/verify.hpp"

namespace {

using namespace hcut;
using json = nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kTooSmall = 3, kCapacitated = 4, kTooLarge = 5 };

struct UsageError : std::runtime_error {
  int code;
  UsageError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

Hypergraph load(const std::string& path, std::size_t min_n = 2) {
  if (!std::ifstream(path)) throw UsageError(kBadInput, "cannot open " + path);
  auto file = read_hypergraph_file(path);
  if (file.graph.num_vertices() < min_n) {
    throw UsageError(kTooSmall, "need at least " + std::to_string(min_n) + " vertices, got " +
                                    std::to_string(file.graph.num_vertices()));
  }
  return std::move(file.graph);
}

std::vector<Vertex> one_indexed(std::span<const Vertex> side) {
  std::vector<Vertex> out(side.begin(), side.end());
  for (auto& v : out) ++v;
  return out;
}

std::string join(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

OrderingKind parse_kind(const std::string& name) {
  if (name == "ma") return OrderingKind::kMA;
  if (name == "tight") return OrderingKind::kTight;
  return OrderingKind::kQueyranne;
}

int cmd_mincut(const std::string& path, const std::string& ordering, bool as_json) {
  auto h = load(path);
  auto start = std::chrono::steady_clock::now();
  auto res = global_mincut(h, parse_kind(ordering));
  double ms = millis_since(start);
  if (cut_value(h, res.witness.side) != res.value) throw std::logic_error("witness does not revalidate");
  auto side = one_indexed(res.witness.side);
  if (as_json) {
    std::cout << json{{"lambda", res.value}, {"side", side}, {"ordering", ordering}, {"time_ms", ms}}.dump() << '\n';
  } else {
    std::cout << "lambda " << res.value << "\nside " << join(side) << "\ntime_ms " << ms << '\n';
  }
  return kOk;
}

int cmd_approx(const std::string& path, const std::string& eps_text, const std::string& rule_name, bool as_json) {
  Rational eps;
  try {
    eps = parse_epsilon(eps_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(kBadInput, e.what());
  }
  auto h = load(path);
  auto start = std::chrono::steady_clock::now();
  Capacity beta = 0;
  Hypergraph g = h;
  if (!h.is_uncapacitated()) {
    auto red = capacity_reduction(h);
    beta = red.beta;
    g = std::move(red.reduced.target);
  }
  auto rule = rule_name == "adjacency" ? TightnessRule::kAdjacency : TightnessRule::kQueyranneAverage;
  auto res = approximate_mincut(g, eps, rule);
  double ms = millis_since(start);
  Capacity value = *res.value;
  if (as_json) {
    json out = {{"value", value}, {"eps", eps_text}, {"rounds", res.rounds.size()}, {"time_ms", ms}};
    if (!h.is_uncapacitated()) out["beta"] = beta;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "value " << value << "\nrounds " << res.rounds.size() << '\n';
    if (!h.is_uncapacitated()) std::cout << "beta " << beta << '\n';
    std::cout << "time_ms " << ms << '\n';
  }
  return kOk;
}

int cmd_sparsify(const std::string& path, std::size_t k, const std::string& out_path, bool deletion_only) {
  auto h = load(path, 1);
  if (!h.is_uncapacitated()) throw UsageError(kCapacitated, "sparsify needs an uncapacitated hypergraph");
  auto index = build_index(h);
  Hypergraph hk;
  if (deletion_only) {
    std::vector<EdgeSpec> specs;
    for (EdgeId e : extract_sparsifier_deletion_only(index, k)) {
      auto p = h.pins(e);
      specs.push_back({{p.begin(), p.end()}, 1});
    }
    hk = Hypergraph(h.num_vertices(), std::move(specs), {SmallEdgePolicy::kReject, false});
  } else {
    hk = extract_sparsifier(index, k).graph;
    if (hk.sum_deg() > 2 * k * h.num_vertices()) throw std::logic_error("sparsifier exceeds 2kn pins");
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  write_hypergraph(out, hk);
  std::cout << "edges " << h.num_edges() << " -> " << hk.num_edges() << "\nsum_deg_before " << h.sum_deg()
            << "\nsum_deg_after " << hk.sum_deg() << "\nbound_2kn " << 2 * k * h.num_vertices() << '\n';
  return kOk;
}

int cmd_decompose(const std::string& path, bool prime) {
  auto h = load(path);
  Capacity lambda = global_mincut(h).value;
  auto d = prime ? prime_decomposition(h, lambda) : canonical_decomposition(h);
  std::cout << to_text(d);
  return kOk;
}

int cmd_cactus(const std::string& path, const std::string& out_path, bool fast) {
  auto h = load(path);
  if (fast && !h.is_uncapacitated()) throw UsageError(kCapacitated, "--fast needs an uncapacitated hypergraph");
  auto hc = fast ? build_hypercactus_uncapacitated_fast(h) : build_hypercactus(h);
  std::ofstream out(out_path);
  std::ofstream map(out_path + ".map");
  if (!out || !map) throw std::runtime_error("cannot write " + out_path);
  write_hypergraph(out, hc.structure);
  for (Vertex v = 0; v < hc.phi.size(); ++v) map << v + 1 << ' ' << hc.phi[v] + 1 << '\n';
  std::cout << "lambda " << hc.lambda << "\nvertices " << hc.structure.num_vertices() << "\nmin_edge_cut_sets "
            << count_min_edge_cut_sets(hc, h) << '\n';
  return kOk;
}

int cmd_verify(const std::string& path, std::size_t max_n) {
  auto h = load(path);
  if (h.num_vertices() > max_n || h.num_vertices() > kDefaultBruteBound) {
    throw UsageError(kTooLarge, "n = " + std::to_string(h.num_vertices()) + " exceeds --max-n " +
                                    std::to_string(std::min(max_n, kDefaultBruteBound)));
  }
  auto report = verify_instance(h, max_n);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  if (h.is_uncapacitated()) {
    for (auto kind : {OrderingKind::kTight, OrderingKind::kQueyranne}) {
      auto found = smallest_sparsifier_violation(h, kind);
      if (!found) continue;
      std::size_t shown = 0;
      for (auto [u, v, full, kept] : found->pairs) {
        if (shown++ == 5) break;
        std::cout << "note " << to_string(kind) << " sparsifier k=" << found->k << ": lambda_Hk(" << u + 1 << ','
                  << v + 1 << ") = " << kept << " < " << std::min<std::size_t>(found->k, full) << '\n';
      }
    }
  }
  std::cout << (report.passed() ? "verify ok" : "verify failed") << '\n';
  return report.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph minimum cuts, sparsifiers and hypercactus representations"};
  app.require_subcommand(1);

  std::string file;
  std::string ordering = "ma";
  std::string eps = "1";
  std::string rule = "adjacency";
  std::string out_path;
  std::size_t k = 0;
  std::size_t max_n = 12;
  bool as_json = false, deletion_only = false, prime = false, canonical = false, fast = false;

  auto* mincut = app.add_subcommand("mincut", "exact global minimum cut");
  mincut->add_option("file", file, "hypergraph file")->required();
  mincut->add_option("--ordering", ordering)->check(CLI::IsMember({"ma", "tight", "queyranne"}));
  mincut->add_flag("--json", as_json);

  auto* approx = app.add_subcommand("approx", "(2 + eps)-approximate minimum cut");
  approx->add_option("file", file)->required();
  approx->add_option("--eps", eps, "positive rational, e.g. 0.1 or 1/10");
  approx->add_option("--rule", rule)->check(CLI::IsMember({"adjacency", "queyranne"}));
  approx->add_flag("--json", as_json);

  auto* sparsify = app.add_subcommand("sparsify", "k-sparsifier of an uncapacitated hypergraph");
  sparsify->add_option("file", file)->required();
  sparsify->add_option("-k", k)->required();
  sparsify->add_option("-o", out_path)->required();
  sparsify->add_flag("--deletion-only", deletion_only);

  auto* decompose = app.add_subcommand("decompose", "prime or canonical decomposition");
  decompose->add_option("file", file)->required();
  auto* prime_flag = decompose->add_flag("--prime", prime);
  decompose->add_flag("--canonical", canonical)->excludes(prime_flag);

  auto* cactus = app.add_subcommand("cactus", "hypercactus representation of all minimum cuts");
  cactus->add_option("file", file)->required();
  cactus->add_option("-o", out_path)->required();
  cactus->add_flag("--fast", fast, "build on the (lambda + 1)-sparsifier");

  auto* verify = app.add_subcommand("verify", "check every algorithm against brute force");
  verify->add_option("file", file)->required();
  verify->add_option("--max-n", max_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (mincut->parsed()) return cmd_mincut(file, ordering, as_json);
    if (approx->parsed()) return cmd_approx(file, eps, rule, as_json);
    if (sparsify->parsed()) return cmd_sparsify(file, k, out_path, deletion_only);
    if (decompose->parsed()) return cmd_decompose(file, prime);
    if (cactus->parsed()) return cmd_cactus(file, out_path, fast);
    if (verify->parsed()) return cmd_verify(file, max_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kFailed;
}
