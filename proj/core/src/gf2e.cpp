#include "kpath/gf2e.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace kpath {

int field_degree_for(int k) {
  if (k < 1) throw std::invalid_argument("field_degree_for: k must be positive");
  const int log2k = std::bit_width(static_cast<unsigned>(k - 1));  // ceil(log2 k)
  return log2k + 3;
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  for (std::uint32_t rest = b; rest != 0; rest >>= 1, shifted <<= 1) {
    if (rest & 1U) acc ^= shifted;
  }
  return acc;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("poly_mod: zero modulus");
  const int deg_m = std::bit_width(m) - 1;
  for (int deg_a = std::bit_width(a) - 1; deg_a >= deg_m; deg_a = std::bit_width(a) - 1) {
    a ^= m << (deg_a - deg_m);
  }
  return a;
}

bool is_irreducible(std::uint64_t m) {
  const int deg = std::bit_width(m) - 1;
  if (deg < 1) return false;
  // Trial division by every polynomial of degree 1..deg/2.
  for (std::uint64_t d = 2; static_cast<int>(std::bit_width(d)) - 1 <= deg / 2; ++d) {
    if (poly_mod(m, d) == 0) return false;
  }
  return true;
}

FieldParams find_irreducible(int ell) {
  if (ell < 1 || ell > kMaxFieldDegree) {
    throw std::invalid_argument("find_irreducible: degree out of range: " + std::to_string(ell));
  }
  const std::uint64_t top = std::uint64_t{1} << ell;
  for (std::uint64_t low = 0; low < top; ++low) {
    const std::uint64_t candidate = top | low;
    if (is_irreducible(candidate)) return {ell, static_cast<std::uint32_t>(candidate)};
  }
  // Irreducible polynomials exist in every degree.
  throw std::logic_error("find_irreducible: none found");
}

FieldParams field_for_k(int k) { return find_irreducible(field_degree_for(k)); }

FieldElement gf_mul(FieldElement a, FieldElement b, const FieldParams& p) {
  return {static_cast<std::uint32_t>(poly_mod(clmul(a.bits, b.bits), p.modpoly))};
}

FieldElement gf_pow(FieldElement a, std::uint64_t e, const FieldParams& p) {
  FieldElement result{1};
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = gf_mul(result, a, p);
    a = gf_mul(a, a, p);
  }
  return result;
}

GaloisField::GaloisField(FieldParams params) : params_(params) {
  if (params.ell < 1 || params.ell > kMaxTableDegree) {
    throw std::invalid_argument("GaloisField: table fields need 1 <= ell <= 8");
  }
  const std::uint32_t q = order();
  table_.resize(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      table_[(std::size_t{a} << params.ell) | b] = static_cast<std::uint8_t>(gf_mul({a}, {b}, params).bits);
    }
  }
}

}  // namespace kpath
