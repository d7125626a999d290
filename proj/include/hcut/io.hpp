// Text hypergraph files: header "m n [fmt]", then one edge per line with
// 1-indexed pins, preceded by the capacity when fmt = 1. Lines starting
// with '%' and blank lines are ignored.
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcut/hypergraph.hpp"

namespace hcut {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct HypergraphFile {
  Hypergraph graph;
  int fmt = 0;
  /// Edges as written, before parallel edges are merged.
  std::vector<EdgeSpec> edges;
};

namespace detail {

inline std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(line.substr(i, j - i)) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace detail

inline HypergraphFile read_hypergraph(std::istream& in, BuildOptions options = {}) {
  HypergraphFile file;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t m = 0, n = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || view[first] == '%') continue;
    auto nums = detail::parse_numbers(view, line_no);
    if (!have_header) {
      if (nums.size() < 2 || nums.size() > 3) throw ParseError(line_no, "header must be 'm n [fmt]'");
      m = nums[0];
      n = nums[1];
      if (nums.size() == 3) {
        if (nums[2] != 0 && nums[2] != 1) throw ParseError(line_no, "fmt must be 0 or 1");
        file.fmt = static_cast<int>(nums[2]);
      }
      if (n > UINT32_MAX) throw ParseError(line_no, "too many vertices");
      have_header = true;
      continue;
    }
    if (file.edges.size() == m) throw ParseError(line_no, "more edge lines than the header declares");
    EdgeSpec spec;
    std::size_t at = 0;
    if (file.fmt == 1) {
      if (nums.empty() || nums[0] == 0) throw ParseError(line_no, "capacity must be a positive integer");
      spec.capacity = nums[0];
      at = 1;
    }
    for (; at < nums.size(); ++at) {
      if (nums[at] < 1 || nums[at] > n) {
        throw ParseError(line_no, "pin " + std::to_string(nums[at]) + " outside [1, " + std::to_string(n) + "]");
      }
      spec.pins.push_back(static_cast<Vertex>(nums[at] - 1));
    }
    if (spec.pins.size() < 2) throw ParseError(line_no, "edge needs at least two pins");
    std::vector<Vertex> sorted = spec.pins;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line_no, "repeated pin in edge");
    }
    file.edges.push_back(std::move(spec));
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (file.edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(file.edges.size()));
  }
  try {
    file.graph = Hypergraph(static_cast<std::size_t>(n), file.edges, options);
  } catch (const std::exception& e) {
    throw ParseError(line_no, e.what());
  }
  return file;
}

inline HypergraphFile read_hypergraph_file(const std::string& path, BuildOptions options = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in, options);
}

inline HypergraphFile parse_hypergraph(std::string_view text, BuildOptions options = {}) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in, options);
}

/// Writes fmt 1 when any capacity differs from 1, fmt 0 otherwise.
inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  bool capacitated = !h.is_uncapacitated();
  out << h.num_edges() << ' ' << h.num_vertices();
  if (capacitated) out << " 1";
  out << '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    if (capacitated) {
      out << h.capacity(e);
      first = false;
    }
    for (Vertex v : h.pins(e)) {
      if (!first) out << ' ';
      out << v + 1;
      first = false;
    }
    out << '\n';
  }
}

inline std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace hcut
