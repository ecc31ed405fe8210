#include "fgm/linalg/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace fgm::kernels {

namespace {

void gemm_acc_scalar(double* c, const double* a, const double* b, int m, int k,
                     int n) {
  for (int i = 0; i < m; ++i) {
    double* crow = c + static_cast<std::size_t>(i) * n;
    const double* arow = a + static_cast<std::size_t>(i) * k;
    for (int l = 0; l < k; ++l) {
      const double av = arow[l];
      const double* brow = b + static_cast<std::size_t>(l) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_tn_acc_scalar(double* c, const double* a, const double* b, int m,
                        int k, int n) {
  for (int l = 0; l < k; ++l) {
    const double* arow = a + static_cast<std::size_t>(l) * m;
    const double* brow = b + static_cast<std::size_t>(l) * n;
    for (int i = 0; i < m; ++i) {
      const double av = arow[i];
      double* crow = c + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void gemm_nt_acc_scalar(double* c, const double* a, const double* b, int m,
                        int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = a + static_cast<std::size_t>(i) * k;
    double* crow = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double* brow = b + static_cast<std::size_t>(j) * k;
      double acc = 0.0;
      for (int l = 0; l < k; ++l) acc += arow[l] * brow[l];
      crow[j] += acc;
    }
  }
}

double dot_scalar(const double* x, const double* y, int len) {
  double acc = 0.0;
  for (int i = 0; i < len; ++i) acc += x[i] * y[i];
  return acc;
}

void axpy_scalar(double* y, const double* x, double a, int len) {
  for (int i = 0; i < len; ++i) y[i] += a * x[i];
}

void rot_scalar(double* x, double* y, int len, double c, double s) {
  for (int i = 0; i < len; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi + s * yi;
    y[i] = -s * xi + c * yi;
  }
}

constexpr Ops kScalarOps = {gemm_acc_scalar, gemm_tn_acc_scalar,
                            gemm_nt_acc_scalar, dot_scalar, axpy_scalar,
                            rot_scalar};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(FGM_HAVE_AVX2_SOURCES)
const Ops& avx2_ops();  // kernels_avx2.cpp
// Probe lives in this TU, which is built without -mavx2, so it is safe to
// call on any x86-64 host.
bool host_supports_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif
#if defined(FGM_HAVE_NEON_SOURCES)
const Ops& neon_ops();  // kernels_neon.cpp
#endif

namespace {

struct Selection {
  const Ops* ops;
  Backend backend;
};

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(FGM_HAVE_AVX2_SOURCES)
      return host_supports_avx2();
#else
      return false;
#endif
    case Backend::Neon:
#if defined(FGM_HAVE_NEON_SOURCES)
      return true;  // Advanced SIMD is mandatory on aarch64.
#else
      return false;
#endif
  }
  return false;
}

Selection make_selection(Backend b) {
  switch (b) {
#if defined(FGM_HAVE_AVX2_SOURCES)
    case Backend::Avx2:
      return {&avx2_ops(), Backend::Avx2};
#endif
#if defined(FGM_HAVE_NEON_SOURCES)
    case Backend::Neon:
      return {&neon_ops(), Backend::Neon};
#endif
    default:
      return {&kScalarOps, Backend::Scalar};
  }
}

Selection default_selection() {
  if (const char* env = std::getenv("FGM_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return make_selection(Backend::Scalar);
    if (std::strcmp(env, "avx2") == 0 && backend_available(Backend::Avx2))
      return make_selection(Backend::Avx2);
    if (std::strcmp(env, "neon") == 0 && backend_available(Backend::Neon))
      return make_selection(Backend::Neon);
  }
  if (backend_available(Backend::Avx2)) return make_selection(Backend::Avx2);
  if (backend_available(Backend::Neon)) return make_selection(Backend::Neon);
  return make_selection(Backend::Scalar);
}

std::atomic<const Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};

void ensure_selected() {
  if (g_ops.load(std::memory_order_acquire) == nullptr) {
    Selection sel = default_selection();
    g_backend.store(sel.backend, std::memory_order_relaxed);
    g_ops.store(sel.ops, std::memory_order_release);
  }
}

}  // namespace

const Ops& active() {
  ensure_selected();
  return *g_ops.load(std::memory_order_acquire);
}

Backend active_backend() {
  ensure_selected();
  return g_backend.load(std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::Scalar};
  if (backend_available(Backend::Avx2)) out.push_back(Backend::Avx2);
  if (backend_available(Backend::Neon)) out.push_back(Backend::Neon);
  return out;
}

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  Selection sel = make_selection(b);
  g_backend.store(sel.backend, std::memory_order_relaxed);
  g_ops.store(sel.ops, std::memory_order_release);
  return true;
}

void reset_backend() {
  Selection sel = default_selection();
  g_backend.store(sel.backend, std::memory_order_relaxed);
  g_ops.store(sel.ops, std::memory_order_release);
}

}  // namespace fgm::kernels
