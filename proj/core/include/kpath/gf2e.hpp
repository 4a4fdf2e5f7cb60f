#pragma once

#include <cstdint>
#include <vector>

#include "kpath/rng.hpp"

namespace kpath {

// GF(2^ell) described by a monic irreducible polynomial. Bit i of modpoly
// is the coefficient of x^i; bit ell is always set.
struct FieldParams {
  int ell = 0;
  std::uint32_t modpoly = 0;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

// An element of GF(2^ell) as an ell-bit polynomial over GF(2).
struct FieldElement {
  std::uint32_t bits = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
};

inline constexpr int kMaxFieldDegree = 30;

// Field degree used for a pattern of k vertices: ceil(log2 k) + 3, so that
// k / 2^ell <= 1/8.
int field_degree_for(int k);

// Carry-less product of two GF(2)[x] polynomials (operands below 2^31).
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

// Remainder of a GF(2)[x] polynomial modulo another.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m);

// True iff m (degree >= 1) has no factor of degree 1..deg(m)/2.
bool is_irreducible(std::uint64_t m);

// Smallest monic irreducible of the given degree. Throws
// std::invalid_argument unless 1 <= ell <= 30.
FieldParams find_irreducible(int ell);

FieldParams field_for_k(int k);

constexpr FieldElement gf_add(FieldElement a, FieldElement b) { return {a.bits ^ b.bits}; }

FieldElement gf_mul(FieldElement a, FieldElement b, const FieldParams& p);

FieldElement gf_pow(FieldElement a, std::uint64_t e, const FieldParams& p);

// Uniform over all 2^ell elements.
inline FieldElement gf_random(Rng& rng, const FieldParams& p) {
  return {static_cast<std::uint32_t>(rng.bits(p.ell))};
}

// Small field (ell <= 8) with a full multiplication table. Coefficients
// of ring elements are stored as bytes against this table.
class GaloisField {
 public:
  static constexpr int kMaxTableDegree = 8;

  explicit GaloisField(FieldParams params);

  const FieldParams& params() const { return params_; }
  int ell() const { return params_.ell; }
  std::uint32_t order() const { return std::uint32_t{1} << params_.ell; }

  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return table_[(std::size_t{a} << params_.ell) | b]; }

  // Row of the table for a fixed left operand: row[b] = a * b.
  const std::uint8_t* row(std::uint8_t a) const { return &table_[std::size_t{a} << params_.ell]; }

 private:
  FieldParams params_;
  std::vector<std::uint8_t> table_;
};

}  // namespace kpath
