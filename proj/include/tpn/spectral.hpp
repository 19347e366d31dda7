#pragma once

#include <optional>
#include <vector>

#include "tpn/rat_matrix.hpp"

namespace tpn {

struct SpectralProjection {
  bool semisimple = false;
  std::optional<RatMatrix> projector;  // onto ker B along range B, when semisimple
};

// Eigenvalue 0 of B is semi-simple iff ker(B^2) = ker(B), in which case
// kernel and range are complementary and the projector onto the kernel
// along the range is well defined.
inline SpectralProjection spectral_projection_at_zero(const RatMatrix& b) {
  if (b.rows() != b.cols()) throw NotSquare();
  const std::size_t n = b.rows();

  std::size_t rank_b = rank(b);
  std::size_t rank_b2 = rank(b * b);
  if (rank_b != rank_b2) return {false, std::nullopt};

  auto kernel = kernel_basis(b);
  const std::size_t k = kernel.size();

  // Column-space basis of B: the columns at pivot positions of its rref.
  auto pivots = rref(b).pivot_cols;
  RatMatrix basis(n, n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = kernel[j][i];
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, k + j) = b.at(i, pivots[j]);

  auto basis_inv = inverse(basis);
  if (!basis_inv) return {false, std::nullopt};  // unreachable when ranks agree

  RatMatrix selector(n, n);
  for (std::size_t i = 0; i < k; ++i) selector.at(i, i) = 1;
  return {true, basis * selector * *basis_inv};
}

}  // namespace tpn
