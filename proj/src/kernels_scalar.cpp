#include <cmath>

#include "kspp/kernels.hpp"

namespace kspp::kernels {

namespace {

double dot_scalar(const double* a, const double* b, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void matvec_scalar(const double* m, const double* x, double* y, int n) {
  for (int r = 0; r < n; ++r) y[r] = dot_scalar(m + static_cast<std::size_t>(r) * n, x, n);
}

double resid_inf_scalar(const double* y, const double* x, double lambda, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) worst = std::max(worst, std::fabs(y[i] - lambda * x[i]));
  return worst;
}

void scale_scalar(double* x, double s, int n) {
  for (int i = 0; i < n; ++i) x[i] *= s;
}

}  // namespace

const VecKernels& scalar_kernels() {
  static const VecKernels k{"scalar", dot_scalar, matvec_scalar, resid_inf_scalar, scale_scalar};
  return k;
}

}  // namespace kspp::kernels
