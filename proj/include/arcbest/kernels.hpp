#pragma once

#include <cstddef>

namespace arcbest::kernels {

struct MinMax {
  double lo = 0.0;
  double hi = 0.0;
};

// min/max of x(t)^2 + y(t)^2 - 1 over the t values, with x, y given as
// power-basis coefficients (ascending, nx = degree + 1).
using PsiMinMaxFn = MinMax (*)(const double* xc, int nx, const double* yc,
                               int ny, const double* t, int nt);

// For each query point, index of and squared distance to the nearest point
// of (px, py).
using NearestFn = void (*)(const double* qx, const double* qy, int nq,
                           const double* px, const double* py, int np,
                           int* idx, double* sqd);

struct KernelTable {
  PsiMinMaxFn psi_minmax = nullptr;
  NearestFn nearest = nullptr;
  const char* name = "";
};

// Reference implementation, always available.
const KernelTable& scalar_table();

// SIMD variants; nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_table();
const KernelTable* neon_table();

// Table selected at first use: the best supported SIMD variant, or the one
// named by the ARCBEST_KERNELS environment variable (scalar|avx2|neon).
const KernelTable& active();

inline MinMax psi_minmax_grid(const double* xc, int nx, const double* yc,
                              int ny, const double* t, int nt) {
  return active().psi_minmax(xc, nx, yc, ny, t, nt);
}

inline void nearest_points(const double* qx, const double* qy, int nq,
                           const double* px, const double* py, int np,
                           int* idx, double* sqd) {
  active().nearest(qx, qy, nq, px, py, np, idx, sqd);
}

}  // namespace arcbest::kernels
