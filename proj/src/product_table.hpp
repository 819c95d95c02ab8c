#pragma once

// Internal: signed blade-product tables for the four signatures, shared by
// the multivector arithmetic and the extended-precision exponential.

#include <array>
#include <bit>
#include <cstdint>

#include "galog/multivector.hpp"

namespace galog::detail {

// Blade bitmasks in slot order [1, e1, e2, e3, e12, e13, e23, e123].
inline constexpr std::array<unsigned, 8> kBladeMask = {0b000, 0b001, 0b010, 0b100,
                                                       0b011, 0b101, 0b110, 0b111};
inline constexpr std::array<unsigned, 8> kMaskToIndex = {0, 1, 2, 4, 3, 5, 6, 7};

// Sign from reordering the concatenated generators of two canonical blades:
// counts the transpositions needed to merge, one per (i in a, j in b, i > j).
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

struct ProductTable {
  std::array<std::array<std::int8_t, 8>, 8> sign{};
  std::array<std::array<std::uint8_t, 8>, 8> index{};
};

constexpr ProductTable make_table(std::array<int, 3> sq) {
  ProductTable t{};
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const unsigned ma = kBladeMask[i];
      const unsigned mb = kBladeMask[j];
      int s = reorder_sign(ma, mb);
      const unsigned common = ma & mb;
      for (int k = 0; k < 3; ++k)
        if (common & (1u << k)) s *= sq[k];
      t.sign[i][j] = static_cast<std::int8_t>(s);
      t.index[i][j] = static_cast<std::uint8_t>(kMaskToIndex[ma ^ mb]);
    }
  }
  return t;
}

inline constexpr std::array<ProductTable, 4> kTables = {
    make_table(basis_squares(Signature::cl03)),
    make_table(basis_squares(Signature::cl30)),
    make_table(basis_squares(Signature::cl12)),
    make_table(basis_squares(Signature::cl21)),
};

inline const ProductTable& table_for(Signature s) {
  return kTables[static_cast<int>(s)];
}

// v·v, B·B and the e123 coefficient of v^B, accumulated in extended
// precision: the a±² combinations built from these cancel heavily and feed
// branch angles that the round-trip tolerance is sensitive to.
struct DotWedge80 {
  long double vv;
  long double bb;
  long double wedge;
};

inline DotWedge80 dot_wedge_split80(Signature sig, const std::array<double, 3>& v,
                                    const std::array<double, 3>& b) {
  const ProductTable& t = table_for(sig);
  long double vv = 0.0L, bb = 0.0L, wedge = 0.0L;
  for (int i = 0; i < 3; ++i) {
    vv += t.sign[1 + i][1 + i] * static_cast<long double>(v[i]) * v[i];
    bb += t.sign[4 + i][4 + i] * static_cast<long double>(b[i]) * b[i];
    for (int j = 0; j < 3; ++j)
      if (t.index[1 + i][4 + j] == 7)
        wedge += t.sign[1 + i][4 + j] * static_cast<long double>(v[i]) * b[j];
  }
  return {vv, bb, wedge};
}

}  // namespace galog::detail
