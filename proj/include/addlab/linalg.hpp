#pragma once

#include <complex>
#include <vector>

namespace addlab {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  std::vector<Complex>& data() { return a_; }
  const std::vector<Complex>& data() const { return a_; }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  bool is_hermitian(double tol) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);

// Multiply matrix by vector.
std::vector<Complex> operator*(const Matrix& a, const std::vector<Complex>& x);

struct Eigensystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j is the eigenvector for values[j]
};

// Eigendecomposition of a Hermitian matrix (throws std::domain_error if
// the input is not Hermitian to 1e-10, std::runtime_error on LAPACK failure).
Eigensystem eig_hermitian(const Matrix& a);

// Singular values, non-increasing.
std::vector<double> singular_values(const Matrix& a);

}  // namespace addlab
