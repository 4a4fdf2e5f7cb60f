#include "kpath/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace kpath {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

int parse_index(std::string_view s, int line, int limit, const char* what) {
  int v = 0;
  if (!parse_number(s, v)) throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  if (v < 1 || v > limit) throw ParseError(line, std::string(what) + " out of range: " + std::string(s));
  return v - 1;
}

// Calls fn(line_number, tokens) for every non-comment, non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    const auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens.front().front() != '#') fn(line_no, tokens);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string format_weight(double w, WeightKind kind) {
  if (kind == WeightKind::Integer) return std::to_string(integer_weight(w));
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  std::string s(buf, ptr);
  // Keep the decimal point so the file re-parses in real mode.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

nlohmann::ordered_json vertex_list(const std::vector<int>& vs) {
  auto arr = nlohmann::ordered_json::array();
  for (int v : vs) arr.push_back(v + 1);
  return arr;
}

}  // namespace

WeightedGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  WeightedGraph g;
  bool have_header = false;
  int declared_m = 0;
  int seen_edges = 0;
  int last_line = 0;
  bool real = false;
  std::vector<std::pair<std::string_view, int>> raw_weights;  // token, line
  std::set<std::pair<int, int>> present;

  for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    last_line = line;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tok.size() != 4) throw ParseError(line, "header must be 'p <directed|undirected> <n> <m>'");
      if (tok[1] == "directed") {
        g.directed = true;
      } else if (tok[1] == "undirected") {
        g.directed = false;
      } else {
        throw ParseError(line, "unknown graph kind '" + std::string(tok[1]) + "'");
      }
      if (!parse_number(tok[2], g.n) || g.n < 1) throw ParseError(line, "bad vertex count");
      if (!parse_number(tok[3], declared_m) || declared_m < 0) throw ParseError(line, "bad edge count");
      have_header = true;
      return;
    }
    if (tok[0] != "e") throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    if (!have_header) throw ParseError(line, "missing header");
    if (tok.size() != 4) throw ParseError(line, "edge must be 'e <u> <v> <w>'");
    if (++seen_edges > declared_m) throw ParseError(line, "more edge lines than declared");
    const int u = parse_index(tok[1], line, g.n, "vertex");
    const int v = parse_index(tok[2], line, g.n, "vertex");
    if (tok[3].find('.') != std::string_view::npos) real = true;
    const auto key = g.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!present.insert(key).second) {
      if (warnings) {
        warnings->push_back("line " + std::to_string(line) + ": duplicate edge " + std::to_string(u + 1) + " " +
                            std::to_string(v + 1) + " ignored");
      }
      return;
    }
    g.edges.push_back({u, v, 0.0});
    raw_weights.emplace_back(tok[3], line);
  });
  if (!have_header) throw ParseError(last_line == 0 ? 1 : last_line, "missing header");
  if (seen_edges != declared_m) {
    throw ParseError(last_line, "expected " + std::to_string(declared_m) + " edge lines, found " +
                                    std::to_string(seen_edges));
  }

  g.kind = real ? WeightKind::Real : WeightKind::Integer;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [token, line] = raw_weights[i];
    if (real) {
      double w = 0.0;
      if (!parse_number(token, w)) throw ParseError(line, "bad weight '" + std::string(token) + "'");
      if (!std::isfinite(w)) throw RangeError("line " + std::to_string(line) + ": weight is not finite");
      g.edges[i].w = w;
    } else {
      std::int64_t w = 0;
      if (!parse_number(token, w)) throw ParseError(line, "bad weight '" + std::string(token) + "'");
      if (w > kMaxIntegerWeight || w < -kMaxIntegerWeight) {
        throw RangeError("line " + std::to_string(line) + ": integer weight out of range");
      }
      g.edges[i].w = static_cast<double>(w);
    }
  }
  return g;
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << (g.directed ? "directed" : "undirected") << ' ' << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << format_weight(e.w, g.kind) << '\n';
  return out.str();
}

TreePattern parse_tree(std::string_view text) {
  TreePattern t;
  bool have_header = false;
  int last_line = 0;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& tok) {
    last_line = line;
    if (tok[0] == "t") {
      if (have_header) throw ParseError(line, "duplicate header");
      if (tok.size() != 2 || !parse_number(tok[1], t.k) || t.k < 1) throw ParseError(line, "header must be 't <k>'");
      have_header = true;
      return;
    }
    if (tok[0] != "e") throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    if (!have_header) throw ParseError(line, "missing header");
    if (tok.size() != 3) throw ParseError(line, "edge must be 'e <a> <b>'");
    const int a = parse_index(tok[1], line, t.k, "node");
    const int b = parse_index(tok[2], line, t.k, "node");
    t.edges.emplace_back(a, b);
  });
  if (!have_header) throw ParseError(last_line == 0 ? 1 : last_line, "missing header");
  try {
    validate_tree(t);
  } catch (const MalformedTree& e) {
    throw ParseError(last_line, std::string("malformed tree: ") + e.what());
  }
  return t;
}

std::string format_tree(const TreePattern& t) {
  std::ostringstream out;
  out << "t " << t.k << '\n';
  for (const auto& [a, b] : t.edges) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string to_json(const ReportFields& r, bool pretty) {
  nlohmann::ordered_json j;
  if (!r.weight) {
    j["weight"] = nullptr;
  } else if (r.integral_weight) {
    j["weight"] = integer_weight(*r.weight);
  } else {
    j["weight"] = *r.weight;
  }
  const auto& vertices = r.tree_pattern ? r.embedding : r.path;
  const char* key = r.tree_pattern ? "embedding" : "path";
  if (vertices) {
    j[key] = vertex_list(*vertices);
  } else {
    j[key] = nullptr;
  }
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["repetitions"] = r.repetitions;
  j["mode"] = r.mode;
  if (r.elapsed_ms) {
    j["elapsed_ms"] = *r.elapsed_ms;
  } else {
    j["elapsed_ms"] = nullptr;
  }
  if (r.iterations) {
    auto trace = nlohmann::ordered_json::array();
    for (const IterationTrace& it : *r.iterations) {
      trace.push_back({{"L", it.lower}, {"U", it.upper}, {"X", it.x}, {"delta", it.delta}, {"cap", it.cap},
                       {"found", it.found}});
    }
    j["iterations"] = {{"count", r.iterations->size()}, {"trace", trace}};
  }
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace kpath
