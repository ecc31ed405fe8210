#pragma once

#include <vector>

namespace fgm::kernels {

enum class Backend { Scalar, Avx2, Neon };

// Dense double-precision primitives behind the matrix layer. All matrices are
// row-major and contiguous. Every backend implements the same contract; the
// scalar implementation is the reference the SIMD variants are tested against.
struct Ops {
  // C += A * B      (C: m x n, A: m x k, B: k x n)
  void (*gemm_acc)(double* c, const double* a, const double* b, int m, int k,
                   int n);
  // C += A^T * B    (A: k x m, B: k x n, C: m x n)
  void (*gemm_tn_acc)(double* c, const double* a, const double* b, int m,
                      int k, int n);
  // C += A * B^T    (A: m x k, B: n x k, C: m x n)
  void (*gemm_nt_acc)(double* c, const double* a, const double* b, int m,
                      int k, int n);
  double (*dot)(const double* x, const double* y, int len);
  // y += a * x
  void (*axpy)(double* y, const double* x, double a, int len);
  // [x; y] <- [c*x + s*y; -s*x + c*y]
  void (*rot)(double* x, double* y, int len, double c, double s);
};

const Ops& scalar_ops();

// Backend selected at load time: best SIMD variant the CPU supports, unless
// the FGM_KERNELS environment variable (scalar|avx2|neon) says otherwise.
const Ops& active();
Backend active_backend();
const char* backend_name(Backend b);
std::vector<Backend> available_backends();

// Returns false (and leaves the selection unchanged) if the requested
// backend is not available on this host.
bool set_backend(Backend b);
void reset_backend();

}  // namespace fgm::kernels
