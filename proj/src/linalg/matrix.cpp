#include "fgm/linalg/matrix.hpp"

#include <cmath>

#include "fgm/common.hpp"
#include "fgm/linalg/kernels.hpp"

namespace fgm {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch in +=");
  kernels::active().axpy(data_.data(), other.data_.data(), 1.0,
                         static_cast<int>(data_.size()));
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix shape mismatch in A*B");
  Matrix c(a.rows(), b.cols());
  kernels::active().gemm_acc(c.data(), a.data(), b.data(), a.rows(), a.cols(),
                             b.cols());
  return c;
}

Matrix multiply_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw ValidationError("matrix shape mismatch in A^T*B");
  Matrix c(a.cols(), b.cols());
  kernels::active().gemm_tn_acc(c.data(), a.data(), b.data(), a.cols(),
                                a.rows(), b.cols());
  return c;
}

Matrix multiply_nt(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols())
    throw ValidationError("matrix shape mismatch in A*B^T");
  Matrix c(a.rows(), b.rows());
  kernels::active().gemm_nt_acc(c.data(), a.data(), b.data(), a.rows(),
                                a.cols(), b.rows());
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

void add_scaled(Matrix& dst, const Matrix& src, double alpha) {
  if (dst.rows() != src.rows() || dst.cols() != src.cols())
    throw ValidationError("matrix shape mismatch in add_scaled");
  kernels::active().axpy(dst.data(), src.data(), alpha,
                         static_cast<int>(dst.size()));
}

double trace_dot(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix shape mismatch in trace_dot");
  return kernels::active().dot(a.data(), b.data(),
                               static_cast<int>(a.size()));
}

double max_abs(const Matrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    v = std::max(v, std::abs(m.data()[i]));
  return v;
}

double frobenius_norm(const Matrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    acc += m.data()[i] * m.data()[i];
  return std::sqrt(acc);
}

bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::isfinite(m.data()[i])) return false;
  return true;
}

Matrix column_slab(const Matrix& m, int c0, int width) {
  Matrix out(m.rows(), width);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < width; ++c) out(r, c) = m(r, c0 + c);
  return out;
}

void add_into_columns(Matrix& dst, int c0, const Matrix& src) {
  for (int r = 0; r < src.rows(); ++r)
    for (int c = 0; c < src.cols(); ++c) dst(r, c0 + c) += src(r, c);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ValidationError("matrix shape mismatch in max_abs_diff");
  double v = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    v = std::max(v, std::abs(a.data()[i] - b.data()[i]));
  return v;
}

}  // namespace fgm
