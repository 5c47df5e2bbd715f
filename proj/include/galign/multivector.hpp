#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "galign/vec.hpp"

namespace galign::ga {

// General element of the 8-dimensional algebra over R^3. Coefficients are
// stored against the basis
//
//   index:  0    1    2    3    4      5      6      7
//   blade:  1    e1   e2   e3   e2e3   e3e1   e1e2   e1e2e3
//
// so a multivector a + b + I c + I d has coefficients
// {a, b1, b2, b3, c1, c2, c3, d} with I = e1e2e3.
struct Multivector {
  std::array<double, 8> coeff{};

  constexpr Multivector() = default;
  explicit constexpr Multivector(const std::array<double, 8>& c) : coeff(c) {}

  static constexpr Multivector scalar(double a) {
    Multivector m;
    m.coeff[0] = a;
    return m;
  }
  static constexpr Multivector vector(const Vec3& b) {
    Multivector m;
    m.coeff[1] = b.x;
    m.coeff[2] = b.y;
    m.coeff[3] = b.z;
    return m;
  }
  // c holds the coefficients of I e1, I e2, I e3, i.e. of e2e3, e3e1, e1e2.
  static constexpr Multivector bivector(const Vec3& c) {
    Multivector m;
    m.coeff[4] = c.x;
    m.coeff[5] = c.y;
    m.coeff[6] = c.z;
    return m;
  }
  static constexpr Multivector trivector(double d) {
    Multivector m;
    m.coeff[7] = d;
    return m;
  }
  static constexpr Multivector from_parts(double a, const Vec3& b, const Vec3& c, double d) {
    return Multivector({a, b.x, b.y, b.z, c.x, c.y, c.z, d});
  }
  static constexpr Multivector pseudoscalar() { return trivector(1.0); }

  constexpr double scalar_coeff() const { return coeff[0]; }
  constexpr Vec3 vector_part() const { return {coeff[1], coeff[2], coeff[3]}; }
  constexpr Vec3 bivector_part() const { return {coeff[4], coeff[5], coeff[6]}; }
  constexpr double trivector_coeff() const { return coeff[7]; }

  constexpr Multivector operator+(const Multivector& o) const {
    Multivector out;
    for (size_t i = 0; i < 8; ++i) out.coeff[i] = coeff[i] + o.coeff[i];
    return out;
  }
  constexpr Multivector operator-(const Multivector& o) const {
    Multivector out;
    for (size_t i = 0; i < 8; ++i) out.coeff[i] = coeff[i] - o.coeff[i];
    return out;
  }
  constexpr Multivector operator-() const {
    Multivector out;
    for (size_t i = 0; i < 8; ++i) out.coeff[i] = -coeff[i];
    return out;
  }
  constexpr Multivector operator*(double s) const {
    Multivector out;
    for (size_t i = 0; i < 8; ++i) out.coeff[i] = coeff[i] * s;
    return out;
  }
  constexpr Multivector& operator+=(const Multivector& o) {
    for (size_t i = 0; i < 8; ++i) coeff[i] += o.coeff[i];
    return *this;
  }
};

constexpr Multivector operator*(double s, const Multivector& m) { return m * s; }

namespace detail {

// Signed basis-index pair: e_p e_q = sign * e_index.
struct BasisProduct {
  int8_t sign;
  uint8_t index;
};

// Each basis blade as a bitmask over {e1,e2,e3} plus the sign relating the
// blade to the ascending-sorted product of its generators (e3e1 = -e1e3).
inline constexpr std::array<uint8_t, 8> kBladeMask = {0b000, 0b001, 0b010, 0b100,
                                                      0b110, 0b101, 0b011, 0b111};
inline constexpr std::array<int8_t, 8> kBladeSign = {+1, +1, +1, +1, +1, -1, +1, +1};

// Swaps needed to merge two ascending generator lists given as bitmasks.
constexpr int reorder_parity(uint8_t a, uint8_t b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(static_cast<unsigned>(a & b));
    a >>= 1;
  }
  return swaps & 1;
}

constexpr std::array<std::array<BasisProduct, 8>, 8> make_basis_table() {
  std::array<uint8_t, 8> mask_to_index{};
  for (uint8_t i = 0; i < 8; ++i) mask_to_index[kBladeMask[i]] = i;

  std::array<std::array<BasisProduct, 8>, 8> table{};
  for (uint8_t p = 0; p < 8; ++p) {
    for (uint8_t q = 0; q < 8; ++q) {
      const uint8_t xm = kBladeMask[p] ^ kBladeMask[q];
      const uint8_t k = mask_to_index[xm];
      int sign = kBladeSign[p] * kBladeSign[q] * kBladeSign[k];
      if (reorder_parity(kBladeMask[p], kBladeMask[q]) != 0) sign = -sign;
      table[p][q] = BasisProduct{static_cast<int8_t>(sign), k};
    }
  }
  return table;
}

inline constexpr std::array<std::array<BasisProduct, 8>, 8> kBasisTable = make_basis_table();

// Hand-derived basis rules; the generated table must reproduce them.
static_assert(kBasisTable[1][1].sign == 1 && kBasisTable[1][1].index == 0);   // e1 e1 = 1
static_assert(kBasisTable[1][2].sign == 1 && kBasisTable[1][2].index == 6);   // e1 e2 = e1e2
static_assert(kBasisTable[2][1].sign == -1 && kBasisTable[2][1].index == 6);  // e2 e1 = -e1e2
static_assert(kBasisTable[3][1].sign == 1 && kBasisTable[3][1].index == 5);   // e3 e1 = e3e1
static_assert(kBasisTable[7][7].sign == -1 && kBasisTable[7][7].index == 0);  // I I = -1
static_assert(kBasisTable[7][1].sign == 1 && kBasisTable[7][1].index == 4);   // I e1 = e2e3
static_assert(kBasisTable[4][5].sign == -1 && kBasisTable[4][5].index == 6);  // e2e3 e3e1 = -e1e2
static_assert(kBasisTable[6][1].sign == -1 && kBasisTable[6][1].index == 2);  // e1e2 e1 = -e2

}  // namespace detail

// The geometric product, expanded through the precomputed structure-constant
// table. Total on all of G^3 x G^3.
constexpr Multivector geometric_product(const Multivector& m1, const Multivector& m2) {
  Multivector out;
  for (size_t p = 0; p < 8; ++p) {
    const double a = m1.coeff[p];
    if (a == 0.0) continue;
    for (size_t q = 0; q < 8; ++q) {
      const detail::BasisProduct t = detail::kBasisTable[p][q];
      out.coeff[t.index] += t.sign * a * m2.coeff[q];
    }
  }
  return out;
}

constexpr Multivector operator*(const Multivector& m1, const Multivector& m2) {
  return geometric_product(m1, m2);
}

// Outer product of two vectors: the bivector part of their geometric product,
// equal to I (u x v).
constexpr Multivector wedge(const Vec3& u, const Vec3& v) {
  return Multivector::bivector(cross(u, v));
}

// Reverse: flips the sign of the bivector and trivector parts.
constexpr Multivector reverse(const Multivector& m) {
  return Multivector::from_parts(m.scalar_coeff(), m.vector_part(), -m.bivector_part(),
                                 -m.trivector_coeff());
}

// Scalar projection <M>.
constexpr double scalar_part(const Multivector& m) { return m.coeff[0]; }

}  // namespace galign::ga
