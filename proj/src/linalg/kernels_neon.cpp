// NEON variants of the dense kernels (aarch64, 2-lane f64). Selected by the
// runtime dispatch in kernels.cpp; Advanced SIMD is mandatory on aarch64 so
// no probe is needed.

#include <arm_neon.h>

#include "fgm/linalg/kernels.hpp"

namespace fgm::kernels {

namespace {

inline void row_axpy_neon(double* crow, const double* brow, double av, int n) {
  const float64x2_t va = vdupq_n_f64(av);
  int j = 0;
  for (; j + 4 <= n; j += 4) {
    float64x2_t c0 = vld1q_f64(crow + j);
    float64x2_t c1 = vld1q_f64(crow + j + 2);
    c0 = vfmaq_f64(c0, va, vld1q_f64(brow + j));
    c1 = vfmaq_f64(c1, va, vld1q_f64(brow + j + 2));
    vst1q_f64(crow + j, c0);
    vst1q_f64(crow + j + 2, c1);
  }
  for (; j < n; ++j) crow[j] += av * brow[j];
}

void gemm_acc_neon(double* c, const double* a, const double* b, int m, int k,
                   int n) {
  for (int i = 0; i < m; ++i) {
    double* crow = c + static_cast<std::size_t>(i) * n;
    const double* arow = a + static_cast<std::size_t>(i) * k;
    for (int l = 0; l < k; ++l)
      row_axpy_neon(crow, b + static_cast<std::size_t>(l) * n, arow[l], n);
  }
}

void gemm_tn_acc_neon(double* c, const double* a, const double* b, int m,
                      int k, int n) {
  for (int l = 0; l < k; ++l) {
    const double* arow = a + static_cast<std::size_t>(l) * m;
    const double* brow = b + static_cast<std::size_t>(l) * n;
    for (int i = 0; i < m; ++i)
      row_axpy_neon(c + static_cast<std::size_t>(i) * n, brow, arow[i], n);
  }
}

double dot_neon(const double* x, const double* y, int len) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < len; ++i) acc += x[i] * y[i];
  return acc;
}

void gemm_nt_acc_neon(double* c, const double* a, const double* b, int m,
                      int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j)
      crow[j] += dot_neon(arow, b + static_cast<std::size_t>(j) * k, k);
  }
}

void axpy_neon(double* y, const double* x, double a, int len) {
  row_axpy_neon(y, x, a, len);
}

void rot_neon(double* x, double* y, int len, double c, double s) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t vs = vdupq_n_f64(s);
  int i = 0;
  for (; i + 2 <= len; i += 2) {
    float64x2_t xi = vld1q_f64(x + i);
    float64x2_t yi = vld1q_f64(y + i);
    float64x2_t nx = vfmaq_f64(vmulq_f64(vs, yi), vc, xi);
    float64x2_t ny = vfmsq_f64(vmulq_f64(vc, yi), vs, xi);
    vst1q_f64(x + i, nx);
    vst1q_f64(y + i, ny);
  }
  for (; i < len; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -s * xi + c * yi;
  }
}

constexpr Ops kNeonOps = {gemm_acc_neon, gemm_tn_acc_neon, gemm_nt_acc_neon,
                          dot_neon, axpy_neon, rot_neon};

}  // namespace

const Ops& neon_ops() { return kNeonOps; }

}  // namespace fgm::kernels
