// SPDX-License-Identifier: Apache-2.0

#ifndef QEMBED_CUBE_HPP
#define QEMBED_CUBE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qembed {

/// Dimension guard for hypercube hosts: Q_n has 2^n vertices and the
/// graph guard is 2^20 of them.
inline constexpr int kMaxCubeDim = 20;

/// A vertex of Q_dim, identified with the integer whose binary digits are
/// its coordinates (bit k of `bits` is coordinate k).
struct CubeVertex {
  std::uint32_t bits = 0;
  int dim = 1;

  CubeVertex() = default;
  CubeVertex(std::uint32_t bits_, int dim_) : bits(bits_), dim(dim_) {
    if (dim < 1 || dim > kMaxCubeDim) {
      throw std::invalid_argument("hypercube dimension " + std::to_string(dim) +
                                  " outside [1, 20]");
    }
    if (bits >> dim) {
      throw std::invalid_argument("vertex bits out of range for Q_" +
                                  std::to_string(dim));
    }
  }

  friend bool operator==(const CubeVertex&, const CubeVertex&) = default;
};

inline std::uint32_t cube_mask(int dim) {
  return (dim >= 32) ? ~std::uint32_t{0} : (std::uint32_t{1} << dim) - 1;
}

/// The vertex with all dim coordinates flipped.
inline CubeVertex antipode(CubeVertex v) {
  return CubeVertex(v.bits ^ cube_mask(v.dim), v.dim);
}

/// Hamming distance; equals the graph distance in Q_n.
inline int hamming_distance(CubeVertex x, CubeVertex y) {
  if (x.dim != y.dim) {
    throw std::invalid_argument("hamming_distance: dimension mismatch");
  }
  return std::popcount(x.bits ^ y.bits);
}

inline int hamming_distance(std::uint32_t x, std::uint32_t y) {
  return std::popcount(x ^ y);
}

/// Reflected binary Gray code. Consecutive codes (cyclically, over the
/// whole range [0, 2^n)) differ in exactly one bit.
inline CubeVertex gray_code(std::uint64_t index, int dim) {
  if (dim < 1 || dim > kMaxCubeDim) {
    throw std::invalid_argument("gray_code: dimension outside [1, 20]");
  }
  if (index >= (std::uint64_t{1} << dim)) {
    throw std::invalid_argument("gray_code: index " + std::to_string(index) +
                                " out of range for Q_" + std::to_string(dim));
  }
  return CubeVertex(static_cast<std::uint32_t>(index ^ (index >> 1)), dim);
}

}  // namespace qembed

#endif
