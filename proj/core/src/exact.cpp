#include "kpath/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <span>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kpath/amplify.hpp"

namespace kpath {
namespace {

struct IntArc {
  int from;
  int to;
  int w;
};

// Group rows per cache block: about 16 KiB of one vector.
std::size_t block_rows(const RingParams& p) {
  const std::size_t target = std::max<std::size_t>(1, (std::size_t{4} << 10) / static_cast<std::size_t>(p.cap()));
  return std::min(p.group_size(), std::bit_floor(target));
}

// Left-to-right evaluation of 1 * B_1 ... B_{k-1} * x. The product
// y * x_i * z^w * vec[i] for arc (i, j) is split into a lift of vec[i],
// shared by every arc leaving i, and a scaled shift into vec'[j].
//
// Each layer is computed one block of group rows at a time: lifting row g
// reads only rows g and g ^ v, and a shift stays within its row, so a block
// of every vector's next value depends only on matching blocks of the
// current values. Degrees above (layer - 1) * max_w are known to be zero and
// are skipped.
RingElement evaluate_arcs(int n, int k, std::span<const IntArc> arcs, Rng& rng, const RingContext& ring) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<GroupVector> lifts(un);
  for (auto& v : lifts) v = {static_cast<std::uint32_t>(rng.bits(k))};

  std::int64_t top = 0;
  for (const IntArc& a : arcs) top = std::max<std::int64_t>(top, a.w);
  const int cap = ring->cap();
  const std::size_t groups = ring->group_size();
  const std::size_t step = block_rows(*ring);
  const auto row_bytes = static_cast<std::size_t>(cap);
  auto reachable = [&](int layer) { return static_cast<int>(std::min<std::int64_t>(cap, (layer - 1) * top + 1)); };

  std::vector<RingElement> current(un, RingElement::one(ring));
  std::vector<RingElement> next(un, RingElement(ring));
  // Lifted values of one block; only rows [first, first + step) are used.
  std::vector<RingElement> lifted(un, RingElement(ring));
  std::vector<char> live(un, 1);
  std::vector<FieldElement> ys(arcs.size());
  for (int layer = 1; layer < k; ++layer) {
    for (FieldElement& y : ys) y = gf_random(rng, ring->field().params());
    std::vector<char> next_live(un, 0);
    for (const IntArc& a : arcs) {
      if (live[static_cast<std::size_t>(a.from)]) next_live[static_cast<std::size_t>(a.to)] = 1;
    }
    const int extent = reachable(layer);
    const auto clear_bytes = static_cast<std::size_t>(reachable(layer + 1));
    for (std::size_t first = 0; first < groups; first += step) {
      const RowWindow win{first, step, extent};
      for (std::size_t i = 0; i < un; ++i) {
        if (live[i]) ra_lift_into(lifted[i], current[i], lifts[i], win);
        if (!next_live[i]) continue;
        std::uint8_t* rows = next[i].raw().data();
        for (std::size_t g = first; g < first + step; ++g) std::fill_n(rows + g * row_bytes, clear_bytes, std::uint8_t{0});
      }
      for (std::size_t t = 0; t < arcs.size(); ++t) {
        const IntArc& a = arcs[t];
        const auto from = static_cast<std::size_t>(a.from);
        if (!live[from]) continue;
        ra_accumulate_term(next[static_cast<std::size_t>(a.to)], lifted[from], ys[t], a.w, win);
      }
    }
    std::swap(current, next);
    live = std::move(next_live);
  }
  // Degrees at or above reachable(k) may hold stale values from earlier layers.
  const RowWindow final_win{0, groups, reachable(k)};
  RingElement total(ring);
  for (std::size_t i = 0; i < un; ++i) {
    if (!live[i]) continue;
    ra_lift_into(lifted[i], current[i], lifts[i], final_win);
    ra_accumulate_term(total, lifted[i], FieldElement{1}, 0, final_win);
  }
  return total;
}

std::vector<IntArc> integer_arcs(const WeightedGraph& g) {
  std::vector<IntArc> out;
  for (const Arc& a : g.arcs()) out.push_back({a.from, a.to, static_cast<int>(integer_weight(a.w))});
  return out;
}

// Everything a single run needs that does not depend on the random draws.
class WalkInstance {
 public:
  WalkInstance(const WeightedGraph& g, int k, std::optional<double> cap) : n_(g.n), k_(k) {
    WeightedGraph work = g;
    if (cap) {
      if (g.has_negative_weight()) throw std::invalid_argument("bounded solver needs nonnegative weights");
      const double bound = std::floor(*cap);
      std::erase_if(work.edges, [&](const Edge& e) { return e.w > bound; });
      degree_cap_ = bound < 0 ? 0 : static_cast<int>(bound) + 1;
    } else {
      ShiftedGraph shifted = normalize_weights(g, k);
      work = std::move(shifted.graph);
      offset_ = shifted.offset;
      const std::int64_t top = integer_weight(work.max_weight());
      degree_cap_ = static_cast<int>((k - 1) * top + 1);
    }
    arcs_ = integer_arcs(work);
    if (degree_cap_ > 0) ring_ = make_ring(k, degree_cap_);
  }

  std::optional<std::int64_t> run(std::uint64_t seed) const {
    Rng rng(seed);
    return run(rng);
  }

  std::optional<std::int64_t> run(Rng& rng) const {
    if (!ring_) return std::nullopt;
    const auto low = ra_min_degree(evaluate_arcs(n_, k_, arcs_, rng, ring_));
    if (!low) return std::nullopt;
    return low->degree - offset_;
  }

 private:
  int n_;
  int k_;
  std::int64_t offset_ = 0;
  int degree_cap_ = 0;
  std::vector<IntArc> arcs_;
  RingContext ring_;
};

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void check_exact_input(const WeightedGraph& g, int k, const std::optional<double>& cap) {
  if (k < 1 || k > kMaxPatternSize) {
    throw std::invalid_argument("k must be in [1, " + std::to_string(kMaxPatternSize) + "]");
  }
  if (g.kind != WeightKind::Integer) throw std::invalid_argument("exact solvers need integer weights");
  if (cap && *cap < 0) throw std::invalid_argument("cap must be nonnegative");
}

ShiftedGraph shift_weights(const WeightedGraph& g, int k, std::int64_t shift) {
  ShiftedGraph out{g, static_cast<std::int64_t>(k - 1) * shift};
  for (Edge& e : out.graph.edges) e.w += static_cast<double>(shift);
  return out;
}

ShiftedGraph normalize_weights(const WeightedGraph& g, int k) {
  return shift_weights(g, k, -integer_weight(g.min_weight()));
}

RingElement evaluate_walk_polynomial(const WeightedGraph& g, int k, Rng& rng, const RingContext& ring) {
  if (g.has_negative_weight()) throw std::invalid_argument("evaluate_walk_polynomial: negative weight");
  return evaluate_arcs(g.n, k, integer_arcs(g), rng, ring);
}

std::optional<std::int64_t> min_kpath_weight_once(const WeightedGraph& g, int k, Rng& rng,
                                                  std::optional<double> cap) {
  check_exact_input(g, k, cap);
  if (k > g.n) return std::nullopt;
  if (k == 1) return 0;
  WalkInstance instance(g, k, cap);
  return instance.run(rng);
}

SolveReport min_kpath_weight(const WeightedGraph& g, const ExactConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  check_exact_input(g, cfg.k, cfg.cap);
  if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  SolveReport report;
  report.seed = cfg.seed;
  report.repetitions_used = cfg.repetitions;
  if (cfg.k <= g.n) {
    if (cfg.k == 1) {
      report.weight = 0;
      report.vertices = {0};
    } else {
      const WalkInstance instance(g, cfg.k, cfg.cap);
      report.weight = amplify_min(cfg.repetitions, cfg.seed, cfg.threads,
                                  [&](std::uint64_t s) { return instance.run(s); });
    }
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

SolveReport bounded_min_kpath_weight(const WeightedGraph& g, int k, double bound, ExactConfig cfg) {
  cfg.k = k;
  cfg.cap = bound;
  return min_kpath_weight(g, cfg);
}

bool kpath_attains(const WeightedGraph& g, const ExactConfig& cfg, std::int64_t d) {
  check_exact_input(g, cfg.k, cfg.cap);
  if (cfg.k > g.n) return false;
  if (cfg.k == 1) return d == 0;
  const WalkInstance instance(g, cfg.k, cfg.cap);
  return amplify_attains(cfg.repetitions, cfg.seed, d, [&](std::uint64_t s) { return instance.run(s); });
}

}  // namespace kpath
