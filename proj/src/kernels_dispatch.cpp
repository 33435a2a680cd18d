#include <atomic>
#include <stdexcept>

#include "kspp/kernels.hpp"

namespace kspp::kernels {

bool avx2_compiled() {
#ifdef KSPP_HAVE_AVX2
  return true;
#else
  return false;
#endif
}

bool avx2_supported() {
#if defined(KSPP_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

#ifndef KSPP_HAVE_AVX2
const VecKernels& avx2_kernels() {
  throw std::logic_error("avx2 kernels not compiled into this build");
}
#endif

std::vector<const VecKernels*> available_kernels() {
  std::vector<const VecKernels*> out{&scalar_kernels()};
  if (avx2_supported()) out.push_back(&avx2_kernels());
  return out;
}

namespace {
std::atomic<const VecKernels*> g_forced{nullptr};
}

bool force_kernels(const std::optional<std::string>& name) {
  if (!name) {
    g_forced.store(nullptr);
    return true;
  }
  if (*name == "scalar") {
    g_forced.store(&scalar_kernels());
    return true;
  }
  if (*name == "avx2" && avx2_supported()) {
    g_forced.store(&avx2_kernels());
    return true;
  }
  return false;
}

const VecKernels& active_kernels() {
  const VecKernels* forced = g_forced.load();
  if (forced) return *forced;
  static const VecKernels* picked = avx2_supported() ? &avx2_kernels() : &scalar_kernels();
  return *picked;
}

}  // namespace kspp::kernels
