#include "fgm/linalg/svd.hpp"

#include <algorithm>
#include <cmath>

#include "fgm/common.hpp"
#include "fgm/linalg/kernels.hpp"

namespace fgm {

namespace {
constexpr double kOrthTol = 1e-14;
constexpr int kMaxSweeps = 60;
}  // namespace

std::vector<double> singular_values(const Matrix& m) {
  if (!all_finite(m)) throw ValidationError("singular_values: non-finite entries");
  if (m.rows() == 0 || m.cols() == 0) return {};

  // Work on whichever orientation has fewer vectors to orthogonalize.
  Matrix w = m.rows() <= m.cols() ? m : transpose(m);
  const int nv = w.rows();
  const int len = w.cols();
  const auto& ops = kernels::active();

  // Cyclic sweeps of plane rotations on row pairs until all pairs are
  // numerically orthogonal.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < nv - 1; ++p) {
      double* rp = w.data() + static_cast<std::size_t>(p) * len;
      for (int q = p + 1; q < nv; ++q) {
        double* rq = w.data() + static_cast<std::size_t>(q) * len;
        const double alpha = ops.dot(rp, rp, len);
        const double beta = ops.dot(rq, rq, len);
        const double gamma = ops.dot(rp, rq, len);
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha * beta)) continue;
        // Annihilates the (p,q) Gram entry: t solves t^2 - 2*zeta*t - 1 = 0,
        // smaller-magnitude root for stability.
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            (zeta >= 0.0 ? -1.0 : 1.0) /
            (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        ops.rot(rp, rq, len, c, s);
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(nv);
  for (int p = 0; p < nv; ++p) {
    const double* rp = w.data() + static_cast<std::size_t>(p) * len;
    sv[p] = std::sqrt(ops.dot(rp, rp, len));
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace fgm
