// AVX2 variants of the complex kernels.  This translation unit is compiled
// with -mavx2 -mfma on x86-64 only; callers must gate on level_supported().

#include "cfmtc/kernels.hpp"

#ifdef CFMTC_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace cfmtc::kernels {

namespace {

// std::complex<double> arrays are interleaved [re, im]; one __m256d holds
// two complex values.

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Sum of even lanes minus sum of odd lanes.
inline double hsum_even_minus_odd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);  // [even0+even1, odd0+odd1]
  return _mm_cvtsd_f64(_mm_sub_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum_abs2_avx2(const cplx* x, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(x);
  const std::size_t nd = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= nd; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(p + i);
    const __m256d v1 = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < nd; ++i) acc += p[i] * p[i];
  return acc;
}

cplx dotc_avx2(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  const std::size_t nd = 2 * n;
  // accP lanes hold ar*br / ai*bi products (real part as lane sums),
  // accQ lanes hold ar*bi / ai*br products (imag part as even-odd).
  __m256d accP0 = _mm256_setzero_pd(), accP1 = _mm256_setzero_pd();
  __m256d accQ0 = _mm256_setzero_pd(), accQ1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= nd; i += 8) {
    const __m256d va0 = _mm256_loadu_pd(pa + i);
    const __m256d vb0 = _mm256_loadu_pd(pb + i);
    const __m256d va1 = _mm256_loadu_pd(pa + i + 4);
    const __m256d vb1 = _mm256_loadu_pd(pb + i + 4);
    accP0 = _mm256_fmadd_pd(va0, vb0, accP0);
    accP1 = _mm256_fmadd_pd(va1, vb1, accP1);
    accQ0 = _mm256_fmadd_pd(va0, _mm256_permute_pd(vb0, 0x5), accQ0);
    accQ1 = _mm256_fmadd_pd(va1, _mm256_permute_pd(vb1, 0x5), accQ1);
  }
  double re = hsum(_mm256_add_pd(accP0, accP1));
  double im = hsum_even_minus_odd(_mm256_add_pd(accQ0, accQ1));
  for (std::size_t k = i / 2; k < n; ++k) {
    const double ar = a[k].real(), ai = a[k].imag();
    const double br = b[k].real(), bi = b[k].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = reinterpret_cast<const double*>(x);
  double* py = reinterpret_cast<double*>(y);
  const std::size_t nd = 2 * n;
  const __m256d var = _mm256_set1_pd(alpha.real());
  const __m256d vai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 4 <= nd; i += 4) {
    const __m256d vx = _mm256_loadu_pd(px + i);
    const __m256d vy = _mm256_loadu_pd(py + i);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d t =
        _mm256_fmaddsub_pd(var, vx, _mm256_mul_pd(vai, _mm256_permute_pd(vx, 0x5)));
    _mm256_storeu_pd(py + i, _mm256_add_pd(vy, t));
  }
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t k = i / 2; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    y[k] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

}  // namespace

namespace detail {

const Table& avx2_table() {
  static const Table t{sum_abs2_avx2, dotc_avx2, axpy_avx2};
  return t;
}

}  // namespace detail

}  // namespace cfmtc::kernels

#endif  // CFMTC_HAVE_AVX2_KERNELS
