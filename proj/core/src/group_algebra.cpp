#include "kpath/group_algebra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace kpath {
namespace {

void require_same(const RingElement& p, const RingElement& q, const char* what) {
  if (!p.params().compatible(q.params())) {
    throw std::invalid_argument(std::string(what) + ": operands belong to different rings");
  }
}

// In-place unnormalized Walsh-Hadamard transform over the group index.
// Each group vector owns a contiguous block of `block` words; arithmetic
// wraps modulo 2^64, which is exact for everything read back below.
void walsh_hadamard(std::vector<std::uint64_t>& a, std::size_t group_size, std::size_t block) {
  for (std::size_t h = 1; h < group_size; h <<= 1) {
    for (std::size_t i = 0; i < group_size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        std::uint64_t* lo = a.data() + j * block;
        std::uint64_t* hi = a.data() + (j + h) * block;
        for (std::size_t t = 0; t < block; ++t) {
          const std::uint64_t x = lo[t];
          const std::uint64_t y = hi[t];
          lo[t] = x + y;
          hi[t] = x - y;
        }
      }
    }
  }
}

// One past the highest degree carrying a nonzero coefficient.
std::size_t degree_extent(const RingElement& e) {
  const std::size_t cap = static_cast<std::size_t>(e.cap());
  const std::size_t groups = e.params().group_size();
  std::size_t extent = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::uint8_t* row = e.raw().data() + g * cap;
    for (std::size_t d = cap; d > extent; --d) {
      if (row[d - 1] != 0) {
        extent = d;
        break;
      }
    }
  }
  return extent;
}

}  // namespace

RingParams::RingParams(int k, int cap) : RingParams(k, cap, field_for_k(k)) {}

RingParams::RingParams(int k, int cap, FieldParams field) : k_(k), cap_(cap), field_(field) {
  if (k < 1 || k > kMaxGroupRank) throw std::invalid_argument("RingParams: k out of range");
  if (cap < 1) throw std::invalid_argument("RingParams: cap must be at least 1");
}

RingContext make_ring(int k, int cap) { return std::make_shared<const RingParams>(k, cap); }

RingElement::RingElement(RingContext ctx) : ctx_(std::move(ctx)), data_(ctx_->size(), 0) {}

RingElement RingElement::one(RingContext ctx) {
  RingElement e(std::move(ctx));
  e.data_[0] = 1;
  return e;
}

RingElement RingElement::term(RingContext ctx, GroupVector g, int degree, FieldElement y) {
  RingElement e(std::move(ctx));
  if (degree < e.cap()) e.set(g, degree, y);
  return e;
}

bool RingElement::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t c) { return c == 0; });
}

void RingElement::clear() { std::fill(data_.begin(), data_.end(), std::uint8_t{0}); }

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same(*this, other, "ra_add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

RingElement ra_add(const RingElement& p, const RingElement& q) {
  RingElement r = p;
  r += q;
  return r;
}

void ra_accumulate_term(RingElement& dst, const RingElement& src, FieldElement y, int w) {
  ra_accumulate_term(dst, src, y, w, RowWindow::all(src.params()));
}

void ra_accumulate_term(RingElement& dst, const RingElement& src, FieldElement y, int w, RowWindow win) {
  require_same(dst, src, "ra_accumulate_term");
  if (w < 0) throw std::invalid_argument("ra_accumulate_term: negative degree shift");
  const int cap = src.cap();
  if (y.bits == 0 || w >= cap) return;
  const std::uint8_t* scale = src.params().field().row(static_cast<std::uint8_t>(y.bits));
  const auto len = static_cast<std::size_t>(std::min(win.degrees, cap - w));
  const auto stride = static_cast<std::size_t>(cap);
  const std::uint8_t* in = src.raw().data();
  std::uint8_t* out = dst.raw().data();
  for (std::size_t g = win.first_row; g < win.first_row + win.rows; ++g) {
    const std::uint8_t* from = in + g * stride;
    std::uint8_t* to = out + g * stride + w;
    for (std::size_t d = 0; d < len; ++d) to[d] ^= scale[from[d]];
  }
}

void ra_lift_into(RingElement& out, const RingElement& src, GroupVector v) {
  ra_lift_into(out, src, v, RowWindow::all(src.params()));
}

void ra_lift_into(RingElement& out, const RingElement& src, GroupVector v, RowWindow win) {
  require_same(out, src, "ra_lift_into");
  const auto stride = static_cast<std::size_t>(src.cap());
  const auto len = static_cast<std::size_t>(std::min(win.degrees, src.cap()));
  const std::uint8_t* in = src.raw().data();
  std::uint8_t* to = out.raw().data();
  for (std::size_t g = win.first_row; g < win.first_row + win.rows; ++g) {
    const std::uint8_t* a = in + g * stride;
    const std::uint8_t* b = in + (g ^ v.bits) * stride;
    std::uint8_t* r = to + g * stride;
    for (std::size_t d = 0; d < len; ++d) r[d] = a[d] ^ b[d];
  }
}

RingElement ra_mul_monomial(const RingElement& p, FieldElement y, GroupVector v, int w) {
  if (w < 0) throw std::invalid_argument("ra_mul_monomial: negative degree shift");
  RingElement lifted(p.context());
  ra_lift_into(lifted, p, v);
  RingElement result(p.context());
  ra_accumulate_term(result, lifted, y, w);
  return result;
}

RingElement ra_mul_naive(const RingElement& p, const RingElement& q) {
  require_same(p, q, "ra_mul_naive");
  const RingParams& params = p.params();
  const std::size_t cap = static_cast<std::size_t>(params.cap());
  const std::size_t groups = params.group_size();
  RingElement r(p.context());
  std::uint8_t* out = r.raw().data();
  const std::uint8_t* qa = q.raw().data();
  const std::size_t p_extent = degree_extent(p);
  const std::size_t q_extent = degree_extent(q);
  for (std::size_t v = 0; v < groups; ++v) {
    for (std::size_t d1 = 0; d1 < p_extent; ++d1) {
      const std::uint8_t c = p.raw()[v * cap + d1];
      if (c == 0) continue;
      const std::uint8_t* scale = params.field().row(c);
      for (std::size_t g = 0; g < groups; ++g) {
        const std::uint8_t* from = qa + g * cap;
        std::uint8_t* to = out + (v ^ g) * cap + d1;
        for (std::size_t d2 = 0; d2 < q_extent && d1 + d2 < cap; ++d2) to[d2] ^= scale[from[d2]];
      }
    }
  }
  return r;
}

RingElement ra_mul_fast(const RingElement& p, const RingElement& q) {
  require_same(p, q, "ra_mul_fast");
  const RingParams& params = p.params();
  const int k = params.k();
  // The transform is computed modulo 2^64; recovering a coefficient mod 2
  // after dividing by 2^k needs bit k, so k must stay below 64.
  if (k >= 63) throw std::invalid_argument("ra_mul_fast: group rank too large for 64-bit accumulators");
  const int ell = params.field().ell();
  const std::size_t cap = static_cast<std::size_t>(params.cap());
  const std::size_t groups = params.group_size();
  const std::size_t bits_in = static_cast<std::size_t>(ell);
  const std::size_t bits_out = 2 * bits_in - 1;

  // Lift every field coefficient to a 0/1 integer polynomial in x.
  auto lift = [&](const RingElement& e) {
    std::vector<std::uint64_t> a(groups * cap * bits_in, 0);
    const auto raw = e.raw();
    for (std::size_t i = 0; i < groups * cap; ++i) {
      for (std::size_t b = 0; b < bits_in; ++b) a[i * bits_in + b] = (raw[i] >> b) & 1U;
    }
    return a;
  };
  const std::size_t p_extent = degree_extent(p);
  const std::size_t q_extent = degree_extent(q);
  std::vector<std::uint64_t> ph = lift(p);
  std::vector<std::uint64_t> qh = lift(q);
  walsh_hadamard(ph, groups, cap * bits_in);
  walsh_hadamard(qh, groups, cap * bits_in);

  // Pointwise in the transform domain: schoolbook convolution over the
  // degree dimension and over the bit-polynomial dimension.
  std::vector<std::uint64_t> rh(groups * cap * bits_out, 0);
  for (std::size_t s = 0; s < groups; ++s) {
    const std::uint64_t* ps = ph.data() + s * cap * bits_in;
    const std::uint64_t* qs = qh.data() + s * cap * bits_in;
    std::uint64_t* rs = rh.data() + s * cap * bits_out;
    for (std::size_t d1 = 0; d1 < p_extent; ++d1) {
      const std::uint64_t* pa = ps + d1 * bits_in;
      if (std::all_of(pa, pa + bits_in, [](std::uint64_t x) { return x == 0; })) continue;
      for (std::size_t d2 = 0; d2 < q_extent && d1 + d2 < cap; ++d2) {
        const std::uint64_t* qb = qs + d2 * bits_in;
        std::uint64_t* acc = rs + (d1 + d2) * bits_out;
        for (std::size_t a = 0; a < bits_in; ++a) {
          const std::uint64_t x = pa[a];
          if (x == 0) continue;
          for (std::size_t b = 0; b < bits_in; ++b) acc[a + b] += x * qb[b];
        }
      }
    }
  }
  walsh_hadamard(rh, groups, cap * bits_out);

  // Unnormalized inverse = 2^k * true value; its parity sits at bit k.
  RingElement r(p.context());
  const std::uint32_t modpoly = params.field().params().modpoly;
  auto out = r.raw();
  for (std::size_t i = 0; i < groups * cap; ++i) {
    std::uint64_t poly = 0;
    for (std::size_t c = 0; c < bits_out; ++c) poly |= ((rh[i * bits_out + c] >> k) & 1U) << c;
    out[i] = static_cast<std::uint8_t>(poly_mod(poly, modpoly));
  }
  return r;
}

std::optional<MinDegree> ra_min_degree(const RingElement& p) {
  const std::size_t cap = static_cast<std::size_t>(p.cap());
  const std::size_t groups = p.params().group_size();
  std::size_t best = cap;
  std::size_t witness = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const std::uint8_t* row = p.raw().data() + g * cap;
    const std::size_t limit = best;  // strict improvement keeps the smallest witness
    for (std::size_t d = 0; d < limit; ++d) {
      if (row[d] != 0) {
        best = d;
        witness = g;
        break;
      }
    }
  }
  if (best == cap) return std::nullopt;
  const GroupVector w{static_cast<std::uint32_t>(witness)};
  return MinDegree{static_cast<int>(best), w, p.at(w, static_cast<int>(best))};
}

RingElement ra_product_of_lifted_vectors(const RingContext& ctx, std::span<const GroupVector> vs) {
  RingElement acc = RingElement::one(ctx);
  RingElement next(ctx);
  for (GroupVector v : vs) {
    ra_lift_into(next, acc, v);
    std::swap(acc, next);
  }
  return acc;
}

RingElement ra_all_vectors(const RingContext& ctx) {
  RingElement j(ctx);
  for (std::size_t g = 0; g < ctx->group_size(); ++g) j.set({static_cast<std::uint32_t>(g)}, 0, {1});
  return j;
}

int gf2_rank(std::span<const GroupVector> vs) {
  std::array<std::uint32_t, 32> basis{};  // basis[b] has leading bit b
  int rank = 0;
  for (GroupVector v : vs) {
    std::uint32_t x = v.bits;
    while (x != 0) {
      const int lead = std::bit_width(x) - 1;
      if (basis[lead] == 0) {
        basis[lead] = x;
        ++rank;
        break;
      }
      x ^= basis[lead];
    }
  }
  return rank;
}

bool linearly_independent(std::span<const GroupVector> vs) {
  return gf2_rank(vs) == static_cast<int>(vs.size());
}

}  // namespace kpath
