#pragma once

#include <cstddef>
#include <vector>

#include "netfunc/numeric.hpp"

namespace netfunc {

/// Row-major dense matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = Matrix<double>;
using IntegerMatrix = Matrix<BigInt>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Throws Error(SingularZ) when a pivot magnitude drops below `pivot_tol`.
std::vector<double> solve_partial_pivot(DenseMatrix a, std::vector<double> b, double pivot_tol);

struct JacobiOptions {
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Throws Error(ConvergenceFailure) if the off-diagonal norm does not fall
/// below tolerance * max(1, ||A||_F) within the sweep budget.
std::vector<double> jacobi_eigenvalues(DenseMatrix a, const JacobiOptions& options = {});

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(IntegerMatrix a);

}  // namespace netfunc
