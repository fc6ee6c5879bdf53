#include "bhspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bhspin/errors.hpp"

namespace bhspin::linalg {

namespace {

void check_dim(std::size_t n) {
  if (n > kMaxDim) {
    throw InvalidArgument("matrix dimension " + std::to_string(n) + " exceeds " +
                          std::to_string(kMaxDim));
  }
}

void check_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("matrix dimension mismatch");
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

Matrix::Matrix(std::size_t n) : n_(n) { check_dim(n); }

Matrix::Matrix(std::initializer_list<double> row_major) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(row_major.size()))));
  if (n * n != row_major.size()) throw InvalidArgument("initializer list is not a square matrix");
  check_dim(n);
  n_ = n;
  std::size_t k = 0;
  for (double v : row_major) {
    (*this)(k / n, k % n) = v;
    ++k;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::trace() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  }
  return m;
}

double Matrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
  }
  return std::sqrt(s);
}

bool Matrix::is_symmetric(double tol) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b);
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_dim(a, b);
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  }
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  }
  return c;
}

EigenDecomposition sym_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  const double scale = std::max(1.0, m.max_abs());
  if (!m.is_symmetric(kSymmetryTolerance * scale)) {
    throw InvalidArgument("eigensolver input is not symmetric");
  }

  // Work on the exactly symmetrized input.
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  }
  Matrix v = Matrix::identity(n);

  const double threshold = 1e-14 * a.frobenius_norm();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that annihilates a(p, q) (Golub & Van Loan 8.5.2).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors = Matrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> sym_eigenvalues(const SymMatrix& m) { return sym_eigen(m).values; }

SymMatrix sym_expm(const SymMatrix& m, double scale) {
  const EigenDecomposition eig = sym_eigen(m);
  const std::size_t n = m.dim();
  std::array<double, kMaxDim> w{};
  for (std::size_t k = 0; k < n; ++k) w[k] = std::exp(scale * eig.values[k]);

  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += eig.vectors(i, k) * w[k] * eig.vectors(j, k);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return out;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
  if (!(h > 0.0)) throw InvalidArgument("central_diff step must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace bhspin::linalg
