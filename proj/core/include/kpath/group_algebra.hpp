#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "kpath/gf2e.hpp"

namespace kpath {

// Element of Z_2^k; the group product is XOR and 0 is the identity.
struct GroupVector {
  std::uint32_t bits = 0;

  friend bool operator==(GroupVector, GroupVector) = default;
  friend constexpr GroupVector operator*(GroupVector a, GroupVector b) { return {a.bits ^ b.bits}; }
};

inline constexpr int kMaxGroupRank = 30;

// Shared description of the truncated ring R = (F[Z_2^k])[z] / (z^cap).
// Elements hold a shared_ptr to one of these, so the multiplication table
// is built once per solve.
class RingParams {
 public:
  // Throws std::invalid_argument when k, cap or the field are out of range.
  RingParams(int k, int cap);
  RingParams(int k, int cap, FieldParams field);

  int k() const { return k_; }
  int cap() const { return cap_; }
  std::size_t group_size() const { return std::size_t{1} << k_; }
  std::size_t size() const { return group_size() * static_cast<std::size_t>(cap_); }
  const GaloisField& field() const { return field_; }

  bool compatible(const RingParams& other) const {
    return k_ == other.k_ && cap_ == other.cap_ && field_.params() == other.field_.params();
  }

 private:
  int k_;
  int cap_;
  GaloisField field_;
};

using RingContext = std::shared_ptr<const RingParams>;

RingContext make_ring(int k, int cap);

// Dense 2^k x cap table of field coefficients, stored group-major:
// entry (v, d) lives at v * cap + d. Memory is 2^k * cap bytes.
class RingElement {
 public:
  explicit RingElement(RingContext ctx);

  static RingElement zero(RingContext ctx) { return RingElement(std::move(ctx)); }
  static RingElement one(RingContext ctx);
  // y * z^w * g for a single group vector g.
  static RingElement term(RingContext ctx, GroupVector g, int degree, FieldElement y);

  const RingContext& context() const { return ctx_; }
  const RingParams& params() const { return *ctx_; }
  int cap() const { return ctx_->cap(); }

  FieldElement at(GroupVector v, int degree) const { return {data_[index(v, degree)]}; }
  void set(GroupVector v, int degree, FieldElement c) { data_[index(v, degree)] = static_cast<std::uint8_t>(c.bits); }

  std::span<const std::uint8_t> row(GroupVector v) const {
    return {data_.data() + std::size_t{v.bits} * ctx_->cap(), static_cast<std::size_t>(ctx_->cap())};
  }
  std::span<std::uint8_t> row(GroupVector v) {
    return {data_.data() + std::size_t{v.bits} * ctx_->cap(), static_cast<std::size_t>(ctx_->cap())};
  }
  std::span<const std::uint8_t> raw() const { return data_; }
  std::span<std::uint8_t> raw() { return data_; }

  bool is_zero() const;
  void clear();

  RingElement& operator+=(const RingElement& other);

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ctx_->compatible(*b.ctx_) && a.data_ == b.data_;
  }

 private:
  std::size_t index(GroupVector v, int degree) const {
    return std::size_t{v.bits} * static_cast<std::size_t>(ctx_->cap()) + static_cast<std::size_t>(degree);
  }

  RingContext ctx_;
  std::vector<std::uint8_t> data_;
};

struct MinDegree {
  int degree;
  GroupVector witness;
  FieldElement coefficient;
};

// Entry-wise sum. Mismatched contexts throw std::invalid_argument.
RingElement ra_add(const RingElement& p, const RingElement& q);

// y * z^w * (1_G + v) * p, truncated at the cap.
RingElement ra_mul_monomial(const RingElement& p, FieldElement y, GroupVector v, int w);

// Convolution over Z_2^k x [0, cap); the reference product.
RingElement ra_mul_naive(const RingElement& p, const RingElement& q);

// Same product through an exact integer Walsh-Hadamard transform.
RingElement ra_mul_fast(const RingElement& p, const RingElement& q);

// Smallest degree with a nonzero coefficient; the witness is the smallest
// group vector carrying a nonzero entry at that degree.
std::optional<MinDegree> ra_min_degree(const RingElement& p);

// Product of (1_G + v_i) in F[G] (degree 0 only).
RingElement ra_product_of_lifted_vectors(const RingContext& ctx, std::span<const GroupVector> vs);

// Group rows [first_row, first_row + rows) restricted to degrees below
// `degrees`. The windowed kernels below read and write only inside it, which
// lets callers block a computation for cache.
struct RowWindow {
  std::size_t first_row = 0;
  std::size_t rows = 0;
  int degrees = 0;
  static RowWindow all(const RingParams& p) { return {0, p.group_size(), p.cap()}; }
};

// dst += y * z^w * src.
void ra_accumulate_term(RingElement& dst, const RingElement& src, FieldElement y, int w);
// Same, for the rows of `win` and source degrees below win.degrees.
void ra_accumulate_term(RingElement& dst, const RingElement& src, FieldElement y, int w, RowWindow win);

// out = (1_G + v) * src; out must share src's context.
void ra_lift_into(RingElement& out, const RingElement& src, GroupVector v);
// Same, writing only the rows and degrees of `win`.
void ra_lift_into(RingElement& out, const RingElement& src, GroupVector v, RowWindow win);

// J: every group vector with coefficient 1 at degree 0.
RingElement ra_all_vectors(const RingContext& ctx);

// True iff the vectors are linearly independent over GF(2).
bool linearly_independent(std::span<const GroupVector> vs);

int gf2_rank(std::span<const GroupVector> vs);

}  // namespace kpath
