#pragma once

#include <cstddef>
#include <vector>

#include "polyprod/matrix.hpp"

namespace polyprod {

/// Smith normal form of an integer matrix M: left * M * right = D, where
/// left and right are unimodular and D is diagonal with positive entries
/// d_1 | d_2 | ... | d_r followed by zeros.
struct SmithForm {
  std::vector<BigInt> diagonal;  // the r nonzero invariant factors
  BigMatrix left;                // rows x rows; empty when not requested
  BigMatrix right;               // cols x cols; empty when not requested

  std::size_t rank() const { return diagonal.size(); }
  /// The diagonal matrix D with the shape of M.
  BigMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

/// Pivots on the smallest absolute value, ties broken by row-major index.
SmithForm smith_normal_form(const BigMatrix& m, bool with_transforms = true);
SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = true);

/// Invariant factors only (no transforms).
std::vector<BigInt> invariant_factors(const IntMatrix& m);

/// Invariant-factor form of a finite abelian group given as a direct sum of
/// cyclic groups Z/t_i (each t_i > 1): result entries > 1, each dividing the next.
std::vector<BigInt> normalize_torsion(const std::vector<BigInt>& cyclic_orders);

}  // namespace polyprod
