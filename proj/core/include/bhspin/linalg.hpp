#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace bhspin::linalg {

inline constexpr std::size_t kMaxDim = 9;

/// Dense square real matrix of dimension n <= 9, stored row-major inline.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n);
  /// Row-major construction; the list length must be a perfect square <= 81.
  Matrix(std::initializer_list<double> row_major);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }

  double& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * kMaxDim + col]; }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * kMaxDim + col];
  }

  [[nodiscard]] Matrix transposed() const;
  [[nodiscard]] double trace() const noexcept;
  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] double frobenius_norm() const noexcept;
  [[nodiscard]] bool is_symmetric(double tol) const noexcept;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);

 private:
  std::size_t n_ = 0;
  std::array<double, kMaxDim * kMaxDim> data_{};
};

/// Every matrix handed to the eigensolver is expected to be symmetric.
using SymMatrix = Matrix;

/// Symmetry tolerance applied to eigensolver input (absolute).
inline constexpr double kSymmetryTolerance = 1e-13;

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi rotations. Converges when the off-diagonal Frobenius norm
/// drops to 1e-14 of the input norm; at most 100 sweeps.
///
/// Throws InvalidArgument if the input is asymmetric beyond kSymmetryTolerance
/// (scaled by the largest entry when that exceeds one).
[[nodiscard]] EigenDecomposition sym_eigen(const SymMatrix& m);

/// Eigenvalues only, ascending.
[[nodiscard]] std::vector<double> sym_eigenvalues(const SymMatrix& m);

/// exp(scale * m) through the eigendecomposition.
[[nodiscard]] SymMatrix sym_expm(const SymMatrix& m, double scale);

/// (f(x + h) - f(x - h)) / (2h). Requires h > 0.
[[nodiscard]] double central_diff(const std::function<double(double)>& f, double x, double h);

}  // namespace bhspin::linalg
