#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpath/approx.hpp"
#include "kpath/graph.hpp"
#include "kpath/tree.hpp"

namespace kpath {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kMaxIntegerWeight = std::int64_t{1} << 30;

// Graph file:
//   p <directed|undirected> <n> <m>
//   e <u> <v> <w>        (exactly m lines, 1 <= u, v <= n)
// Lines starting with '#' and blank lines are ignored. A weight containing
// '.' switches the whole graph to real mode. A repeated (u, v) pair (either
// orientation when undirected) keeps its first weight and adds a warning.
WeightedGraph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string format_graph(const WeightedGraph& g);

// Tree file: "t <k>" then k-1 lines "e <a> <b>", nodes 1..k, node 1 the root.
TreePattern parse_tree(std::string_view text);

std::string format_tree(const TreePattern& t);

std::string read_file(const std::string& path);

// Fields of the JSON report. Vertices are 0-based here and written 1-based.
struct ReportFields {
  std::string mode;  // exact | bounded | approx | tree | tree-approx | oracle
  int k = 0;
  std::uint64_t seed = 0;
  int repetitions = 0;
  std::optional<double> weight;
  bool integral_weight = true;
  bool tree_pattern = false;  // selects the "embedding" key over "path"
  std::optional<std::vector<int>> path;
  std::optional<std::vector<int>> embedding;
  std::optional<double> elapsed_ms;
  std::optional<std::vector<IterationTrace>> iterations;
};

std::string to_json(const ReportFields& r, bool pretty = false);

}  // namespace kpath
