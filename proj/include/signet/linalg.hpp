#pragma once

#include <cstddef>
#include <vector>

#include "signet/errors.hpp"

// Dense linear algebra at desk scale (n <= 50). Everything is O(n^3) or
// better and keeps plain row-major storage; no BLAS.

namespace signet {

using Vec = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const Vec& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& x);
Matrix transpose(const Matrix& a);

double max_abs(const Matrix& a);
double max_abs(const Vec& x);
double dot(const Vec& a, const Vec& b);

/// det(a) by LU factorization with partial pivoting; exact-singular input
/// yields 0.
double lu_determinant(Matrix a);

/// Solves a x = b by LU with partial pivoting. A pivot smaller than
/// rel_pivot_tol times the largest initial entry of `a` counts as singular.
Vec lu_solve(Matrix a, const Vec& b, double rel_pivot_tol = 1e-13);

/// Rank by row-echelon reduction with partial pivoting; pivots below
/// rel_tol times the largest pivot seen so far are treated as zero.
std::size_t echelon_rank(Matrix a, double rel_tol = 1e-9);

struct Eigensystem {
  Vec values;      // ascending
  Matrix vectors;  // column k pairs with values[k]; orthonormal
};

/// Cyclic Jacobi rotations for a symmetric matrix. Converged when every
/// off-diagonal magnitude is <= 1e-12 times the Frobenius norm; throws
/// Errc::no_convergence after max_sweeps sweeps. Symmetry is the caller's
/// responsibility (see spectral::symmetric_eigenvalues for the checked way in).
Eigensystem jacobi_eigensystem(Matrix m, int max_sweeps = 100);

}  // namespace signet
