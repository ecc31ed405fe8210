// AVX2/FMA variants of the dense kernels. This translation unit is compiled
// with -mavx2 -mfma; it must only be reached through the runtime dispatch in
// kernels.cpp.

#include <immintrin.h>

#include "fgm/linalg/kernels.hpp"

namespace fgm::kernels {

namespace {

// Inner update crow[0..n) += av * brow[0..n), 8 doubles per step.
inline void row_axpy_avx2(double* crow, const double* brow, double av, int n) {
  const __m256d va = _mm256_set1_pd(av);
  int j = 0;
  for (; j + 8 <= n; j += 8) {
    __m256d c0 = _mm256_loadu_pd(crow + j);
    __m256d c1 = _mm256_loadu_pd(crow + j + 4);
    c0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j), c0);
    c1 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j + 4), c1);
    _mm256_storeu_pd(crow + j, c0);
    _mm256_storeu_pd(crow + j + 4, c1);
  }
  for (; j + 4 <= n; j += 4) {
    __m256d c0 = _mm256_loadu_pd(crow + j);
    c0 = _mm256_fmadd_pd(va, _mm256_loadu_pd(brow + j), c0);
    _mm256_storeu_pd(crow + j, c0);
  }
  for (; j < n; ++j) crow[j] += av * brow[j];
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void gemm_acc_avx2(double* c, const double* a, const double* b, int m, int k,
                   int n) {
  for (int i = 0; i < m; ++i) {
    double* crow = c + static_cast<std::size_t>(i) * n;
    const double* arow = a + static_cast<std::size_t>(i) * k;
    for (int l = 0; l < k; ++l)
      row_axpy_avx2(crow, b + static_cast<std::size_t>(l) * n, arow[l], n);
  }
}

void gemm_tn_acc_avx2(double* c, const double* a, const double* b, int m,
                      int k, int n) {
  for (int l = 0; l < k; ++l) {
    const double* arow = a + static_cast<std::size_t>(l) * m;
    const double* brow = b + static_cast<std::size_t>(l) * n;
    for (int i = 0; i < m; ++i)
      row_axpy_avx2(c + static_cast<std::size_t>(i) * n, brow, arow[i], n);
  }
}

double dot_avx2(const double* x, const double* y, int len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  int i = 0;
  for (; i + 8 <= len; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                           _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= len; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                           acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < len; ++i) acc += x[i] * y[i];
  return acc;
}

void gemm_nt_acc_avx2(double* c, const double* a, const double* b, int m,
                      int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j)
      crow[j] += dot_avx2(arow, b + static_cast<std::size_t>(j) * k, k);
  }
}

void axpy_avx2(double* y, const double* x, double a, int len) {
  row_axpy_avx2(y, x, a, len);
}

void rot_avx2(double* x, double* y, int len, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  int i = 0;
  for (; i + 4 <= len; i += 4) {
    __m256d xi = _mm256_loadu_pd(x + i);
    __m256d yi = _mm256_loadu_pd(y + i);
    __m256d nx = _mm256_fmadd_pd(vc, xi, _mm256_mul_pd(vs, yi));
    __m256d ny = _mm256_fmsub_pd(vc, yi, _mm256_mul_pd(vs, xi));
    _mm256_storeu_pd(x + i, nx);
    _mm256_storeu_pd(y + i, ny);
  }
  for (; i < len; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -s * xi + c * yi;
  }
}

constexpr Ops kAvx2Ops = {gemm_acc_avx2, gemm_tn_acc_avx2, gemm_nt_acc_avx2,
                          dot_avx2, axpy_avx2, rot_avx2};

}  // namespace

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace fgm::kernels
