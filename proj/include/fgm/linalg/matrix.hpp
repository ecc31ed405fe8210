#pragma once

#include <cstddef>
#include <vector>

namespace fgm {

// Dense real matrix, row-major, zero-initialized. Products go through the
// runtime-dispatched kernels.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator*=(double s);

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);     // A * B
Matrix multiply_tn(const Matrix& a, const Matrix& b);  // A^T * B
Matrix multiply_nt(const Matrix& a, const Matrix& b);  // A * B^T
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);
void add_scaled(Matrix& dst, const Matrix& src, double alpha);  // dst += a*src

// tr(A^T B) = elementwise dot; the trace in the inverse Fourier transform.
double trace_dot(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);
bool all_finite(const Matrix& m);

// Contiguous copy of columns [c0, c0+width).
Matrix column_slab(const Matrix& m, int c0, int width);
// dst(:, c0:c0+src.cols()) += src
void add_into_columns(Matrix& dst, int c0, const Matrix& src);

// Largest |a_ij - b_ij|; requires equal shapes.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace fgm
