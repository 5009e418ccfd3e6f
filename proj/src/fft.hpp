#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

namespace emhd::detail {

// Unnormalized 2D real transforms on n x n grids. Plans are created once per
// size, without alignment assumptions, so results do not depend on where the
// buffers happen to live in memory.
void fft_r2c(std::size_t n, const double* in, std::complex<double>* out);
// Destroys `in`.
void fft_c2r(std::size_t n, std::complex<double>* in, double* out);

// Variants with SIMD-aligned plans; every buffer must come from FftwAllocator.
void fft_r2c_aligned(std::size_t n, const double* in, std::complex<double>* out);
void fft_c2r_aligned(std::size_t n, std::complex<double>* in, double* out);

void* fftw_aligned_alloc(std::size_t bytes);
void fftw_aligned_free(void* p) noexcept;

template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) noexcept {}
  T* allocate(std::size_t count) {
    return static_cast<T*>(fftw_aligned_alloc(count * sizeof(T)));
  }
  void deallocate(T* p, std::size_t) noexcept { fftw_aligned_free(p); }
  template <class U>
  friend bool operator==(const FftwAllocator&, const FftwAllocator<U>&) {
    return true;
  }
};

using AlignedReal = std::vector<double, FftwAllocator<double>>;
using AlignedSpectrum = std::vector<std::complex<double>, FftwAllocator<std::complex<double>>>;

}  // namespace emhd::detail
