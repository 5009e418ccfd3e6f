#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace emhd::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  fftw_plan forward_aligned = nullptr;
  fftw_plan backward_aligned = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
      fftw_destroy_plan(p.forward_aligned);
      fftw_destroy_plan(p.backward_aligned);
    }
  }

  const PlanPair& get(std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;

    const int ni = static_cast<int>(n);
    const std::size_t spectral = n * (n / 2 + 1);
    // FFTW_ESTIMATE never touches the arrays; they only fix the out-of-place layout.
    auto* real = fftw_alloc_real(n * n);
    auto* cplx = fftw_alloc_complex(spectral);
    constexpr unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_r2c_2d(ni, ni, real, cplx, flags);
    p.backward = fftw_plan_dft_c2r_2d(ni, ni, cplx, real, flags);
    p.forward_aligned = fftw_plan_dft_r2c_2d(ni, ni, real, cplx, FFTW_ESTIMATE);
    p.backward_aligned = fftw_plan_dft_c2r_2d(ni, ni, cplx, real, FFTW_ESTIMATE);
    fftw_free(real);
    fftw_free(cplx);
    return plans_.emplace(n, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void fft_r2c(std::size_t n, const double* in, std::complex<double>* out) {
  const auto& p = cache().get(n);
  // r2c out-of-place preserves its input.
  fftw_execute_dft_r2c(p.forward, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void fft_c2r(std::size_t n, std::complex<double>* in, double* out) {
  const auto& p = cache().get(n);
  fftw_execute_dft_c2r(p.backward, reinterpret_cast<fftw_complex*>(in), out);
}

void fft_r2c_aligned(std::size_t n, const double* in, std::complex<double>* out) {
  const auto& p = cache().get(n);
  fftw_execute_dft_r2c(p.forward_aligned, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void fft_c2r_aligned(std::size_t n, std::complex<double>* in, double* out) {
  const auto& p = cache().get(n);
  fftw_execute_dft_c2r(p.backward_aligned, reinterpret_cast<fftw_complex*>(in), out);
}

void* fftw_aligned_alloc(std::size_t bytes) {
  void* p = fftw_malloc(bytes == 0 ? 1 : bytes);
  if (p == nullptr) throw std::bad_alloc();
  return p;
}

void fftw_aligned_free(void* p) noexcept { fftw_free(p); }

}  // namespace emhd::detail
