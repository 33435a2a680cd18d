#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kspp::kernels {

// Dense double-precision primitives behind the power iteration. A scalar
// reference implementation always exists; wider variants are picked at
// runtime when the CPU supports them and can be forced for equivalence
// testing. Within one variant results are bit-deterministic; across
// variants they agree to accumulation-order rounding.
struct VecKernels {
  const char* name;
  double (*dot)(const double* a, const double* b, int n);
  void (*matvec)(const double* m, const double* x, double* y, int n);  // row-major n x n
  double (*resid_inf)(const double* y, const double* x, double lambda, int n);
  void (*scale)(double* x, double s, int n);
};

const VecKernels& scalar_kernels();
bool avx2_compiled();
bool avx2_supported();          // compiled in and present on this CPU
const VecKernels& avx2_kernels();  // valid only when avx2_compiled()

// All variants usable on this machine (scalar first).
std::vector<const VecKernels*> available_kernels();

// Override the automatic pick ("scalar"/"avx2"); empty restores auto.
// Returns false if the requested variant is unavailable.
bool force_kernels(const std::optional<std::string>& name);
const VecKernels& active_kernels();

}  // namespace kspp::kernels
