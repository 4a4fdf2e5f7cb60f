#include "cli.hpp"

#include <cstdint>
#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "kpath/approx.hpp"
#include "kpath/bench.hpp"
#include "kpath/exact.hpp"
#include "kpath/io.hpp"
#include "kpath/ktree.hpp"
#include "kpath/oracle.hpp"
#include "kpath/recover.hpp"

namespace kpath::cli {
namespace {

struct Options {
  std::string graph_file;
  std::string tree_file;
  int k = 0;
  double eps = 0.1;
  std::optional<double> cap;
  std::string seed = "0xC0FFEE";
  int reps = 60;
  int threads = 1;
  std::optional<double> declared_m;
  bool recover = false;
  bool json = false;
  bool no_timing = false;
};

struct BenchOptions {
  std::string mode = "exact";
  int n = 30;
  std::vector<int> ks{4, 5, 6};
  std::vector<std::int64_t> ms{10};
  std::vector<double> eps{0.1};
  int runs = 3;
  std::optional<int> reps;  // 1 for exact and tree timing, 20 for approx
  double edge_prob = 0.2;
  std::string seed = "0xC0FFEE";
};

std::uint64_t parse_seed(const std::string& s) {
  if (s == "random") {
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
  }
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(s, &used, 0);
  if (used != s.size()) throw std::invalid_argument("bad seed '" + s + "'");
  return v;
}

void add_common(CLI::App* cmd, Options& o, bool needs_k) {
  cmd->add_option("graph", o.graph_file, "Graph file")->required();
  auto* k = cmd->add_option("-k", o.k, "Pattern size in vertices");
  if (needs_k) k->required();
  cmd->add_option("--seed", o.seed, "Seed (integer or 'random')");
  cmd->add_option("--reps", o.reps, "Repetitions per amplified solve")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--M", o.declared_m, "Declared weight bound (default: max |w|)");
  cmd->add_flag("--recover", o.recover, "Also emit the path or embedding");
  cmd->add_flag("--json", o.json, "Pretty-print the JSON report");
  cmd->add_flag("--no-timing", o.no_timing, "Write elapsed_ms as null (byte-stable output)");
}

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int run(const std::string& mode) {
    std::vector<std::string> warnings;
    graph_ = parse_graph(read_file(o_.graph_file), &warnings);
    for (const auto& w : warnings) err_ << "warning: " << w << '\n';
    if (o_.declared_m && graph_.max_abs_weight() > *o_.declared_m) {
      throw RangeError("a weight exceeds the declared bound --M");
    }
    seed_ = parse_seed(o_.seed);
    if (!o_.tree_file.empty()) tree_ = parse_tree(read_file(o_.tree_file));
    fields_.tree_pattern = tree_.has_value();

    fields_.mode = mode;
    fields_.seed = seed_;
    fields_.repetitions = o_.reps;
    fields_.k = o_.k;
    if (mode == "exact" || mode == "bounded") return path_exact(mode == "bounded");
    if (mode == "approx") return path_approx();
    if (mode == "tree") return tree_exact();
    if (mode == "tree-approx") return tree_approx();
    return oracle();
  }

 private:
  ExactConfig exact_config() const {
    ExactConfig cfg;
    cfg.k = o_.k;
    cfg.repetitions = o_.reps;
    cfg.seed = seed_;
    cfg.threads = o_.threads;
    return cfg;
  }

  ApproxConfig approx_config() const {
    ApproxConfig cfg;
    cfg.k = o_.k;
    cfg.epsilon = o_.eps;
    cfg.seed = seed_;
    cfg.inner = exact_config();
    return cfg;
  }

  void require_integer() const {
    if (graph_.kind != WeightKind::Integer) throw std::invalid_argument("this mode needs integer weights");
  }

  void require_approx_weights() const {
    if (graph_.has_negative_weight()) throw std::invalid_argument("approximation needs positive weights in [1, M]");
  }

  int emit(double elapsed_ms) {
    if (!o_.no_timing) fields_.elapsed_ms = elapsed_ms;
    out_ << to_json(fields_, o_.json) << '\n';
    return fields_.weight ? kFound : kNoSolution;
  }

  void set_weight(const std::optional<std::int64_t>& w) {
    if (w) fields_.weight = static_cast<double>(*w);
  }

  int path_exact(bool bounded) {
    require_integer();
    ExactConfig cfg = exact_config();
    if (bounded) {
      if (!o_.cap) throw std::invalid_argument("bounded mode needs --cap");
      if (graph_.has_negative_weight()) throw std::invalid_argument("bounded mode needs nonnegative weights");
      cfg.cap = o_.cap;
    }
    const SolveReport r = o_.recover ? recover_path(graph_, RecoverConfig::defaults(cfg, graph_.n))
                                     : min_kpath_weight(graph_, cfg);
    set_weight(r.weight);
    if (o_.recover && r.weight) fields_.path = r.vertices;
    return emit(r.elapsed_ms);
  }

  int path_approx() {
    require_approx_weights();
    const ApproxReport r = approx_min_kpath(graph_, approx_config());
    return emit_approx(r, false);
  }

  int emit_approx(const ApproxReport& r, bool tree) {
    fields_.weight = r.weight;
    fields_.integral_weight = false;
    fields_.iterations = r.trace;
    if (o_.recover && r.weight) (tree ? fields_.embedding : fields_.path) = r.vertices;
    return emit(r.elapsed_ms);
  }

  const TreePattern& tree() const {
    if (!tree_) throw std::invalid_argument("this mode needs --tree <file>");
    return *tree_;
  }

  int tree_exact() {
    require_integer();
    const TreePattern& t = tree();
    fields_.k = t.k;
    ExactConfig cfg = exact_config();
    cfg.k = t.k;
    const SolveReport r = o_.recover ? recover_tree_vertices(graph_, t, RecoverConfig::defaults(cfg, graph_.n))
                                     : min_ktree_weight(graph_, t, cfg);
    set_weight(r.weight);
    if (o_.recover && r.weight) fields_.embedding = r.vertices;
    return emit(r.elapsed_ms);
  }

  int tree_approx() {
    require_approx_weights();
    const TreePattern& t = tree();
    fields_.k = t.k;
    ApproxConfig cfg = approx_config();
    cfg.k = t.k;
    return emit_approx(approx_min_ktree(graph_, t, cfg), true);
  }

  int oracle() {
    const auto start = std::chrono::steady_clock::now();
    fields_.integral_weight = graph_.kind == WeightKind::Integer;
    fields_.repetitions = 0;
    if (tree_) {
      fields_.k = tree_->k;
      if (const auto r = oracle_min_ktree(graph_, *tree_)) {
        fields_.weight = r->weight;
        fields_.embedding = r->mapping;
      }
    } else {
      if (o_.k < 1) throw std::invalid_argument("oracle mode needs -k or --tree");
      if (const auto r = oracle_min_kpath(graph_, o_.k)) {
        fields_.weight = r->weight;
        fields_.path = r->vertices;
      }
    }
    return emit(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  WeightedGraph graph_;
  std::optional<TreePattern> tree_;
  std::uint64_t seed_ = kDefaultSeed;
  ReportFields fields_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-weight k-path and k-tree solver"};
  app.require_subcommand(1);
  Options o;
  BenchOptions b;

  auto* exact = app.add_subcommand("exact", "Exact minimum k-path weight");
  add_common(exact, o, true);
  auto* bounded = app.add_subcommand("bounded", "Exact minimum k-path weight at most --cap");
  add_common(bounded, o, true);
  bounded->add_option("--cap", o.cap, "Weight bound B")->required();
  auto* approx = app.add_subcommand("approx", "(1+eps)-approximate minimum k-path");
  add_common(approx, o, true);
  approx->add_option("--eps", o.eps, "Approximation parameter")->check(CLI::PositiveNumber);
  auto* tree = app.add_subcommand("tree", "Exact minimum-weight copy of a tree");
  add_common(tree, o, false);
  tree->add_option("--tree", o.tree_file, "Tree file")->required();
  auto* tree_approx = app.add_subcommand("tree-approx", "(1+eps)-approximate minimum tree copy");
  add_common(tree_approx, o, false);
  tree_approx->add_option("--tree", o.tree_file, "Tree file")->required();
  tree_approx->add_option("--eps", o.eps, "Approximation parameter")->check(CLI::PositiveNumber);
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answer");
  add_common(oracle, o, false);
  oracle->add_option("--tree", o.tree_file, "Tree file (k-tree oracle)");

  auto* bench = app.add_subcommand("bench", "Scaling harness; CSV of median timings");
  bench->add_option("--mode", b.mode, "exact | approx | tree");
  bench->add_option("--n", b.n, "Vertices");
  bench->add_option("--ks", b.ks, "Pattern sizes")->delimiter(',');
  bench->add_option("--Ms", b.ms, "Weight bounds")->delimiter(',');
  bench->add_option("--eps", b.eps, "Approximation parameters")->delimiter(',');
  bench->add_option("--runs", b.runs, "Runs per cell (median)")->check(CLI::Range(3, 1000));
  bench->add_option("--reps", b.reps, "Repetitions per solve")->check(CLI::PositiveNumber);
  bench->add_option("--edge-prob", b.edge_prob, "Edge probability");
  bench->add_option("--seed", b.seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kFound;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (bench->parsed()) {
      BenchGrid grid;
      grid.mode = b.mode;
      grid.n = b.n;
      grid.ks = b.ks;
      grid.ms = b.ms;
      grid.epsilons = b.eps;
      grid.runs = b.runs;
      grid.repetitions = b.reps.value_or(b.mode == "approx" ? 20 : 1);
      grid.edge_prob = b.edge_prob;
      grid.seed = parse_seed(b.seed);
      write_bench_csv(out, run_bench(grid));
      return kFound;
    }
    const std::string mode = app.get_subcommands().front()->get_name();
    return Runner(o, out, err).run(mode);
  } catch (const SolverFailure& e) {
    err << "failure: " << e.what() << '\n';
    return kInternalFailure;
  } catch (const std::logic_error& e) {  // invalid_argument, MalformedTree-derived checks
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {  // ParseError, RangeError, LimitExceeded, I/O
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace kpath::cli
