#include "addlab/linalg.hpp"

#include <cmath>
#include <stdexcept>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace addlab {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
  return m;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : a_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix add: shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix subtract: shape mismatch");
  Matrix c = a;
  for (std::size_t k = 0; k < c.data().size(); ++k) c.data()[k] -= b.data()[k];
  return c;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix c = a;
  for (auto& z : c.data()) z *= s;
  return c;
}

std::vector<Complex> operator*(const Matrix& a, const std::vector<Complex>& x) {
  if (a.cols() != int(x.size())) throw std::invalid_argument("matrix-vector: shape mismatch");
  std::vector<Complex> y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Eigensystem eig_hermitian(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("eig_hermitian: matrix not square");
  if (!a.is_hermitian(1e-10)) throw std::domain_error("eig_hermitian: matrix not Hermitian");
  const int n = a.rows();
  Eigensystem es;
  es.values.resize(n);
  es.vectors = a;
  int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', n, es.vectors.data().data(), n,
                           es.values.data());
  if (info != 0) throw std::runtime_error("zheev failed, info=" + std::to_string(info));
  return es;
}

std::vector<double> singular_values(const Matrix& a) {
  const int m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) throw std::invalid_argument("singular_values: empty matrix");
  Matrix work = a;
  const int k = std::min(m, n);
  std::vector<double> s(k);
  std::vector<double> superb(std::max(1, k - 1));
  int info = LAPACKE_zgesvd(LAPACK_ROW_MAJOR, 'N', 'N', m, n, work.data().data(), n, s.data(),
                            nullptr, 1, nullptr, 1, superb.data());
  if (info != 0) throw std::runtime_error("zgesvd failed, info=" + std::to_string(info));
  return s;
}

}  // namespace addlab
