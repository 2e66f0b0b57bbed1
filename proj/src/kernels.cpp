#include "cfmtc/kernels.hpp"

#include <cstdlib>
#include <string>

#include "cfmtc/errors.hpp"

namespace cfmtc::kernels {

namespace {

double sum_abs2_scalar(const cplx* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return acc;
}

cplx dotc_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx{ar * xr - ai * xi, ar * xi + ai * xr};
  }
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#ifndef CFMTC_HAVE_AVX2_KERNELS
constexpr bool kAvx2Compiled = false;
#else
constexpr bool kAvx2Compiled = true;
#endif

struct Dispatch {
  detail::Table table;
  Level level;
};

Dispatch make_default_dispatch() {
  Level level = level_supported(Level::avx2) ? Level::avx2 : Level::scalar;
  if (const char* env = std::getenv("CFMTC_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") {
      level = Level::scalar;
    } else if (want == "avx2" && level_supported(Level::avx2)) {
      level = Level::avx2;
    }
  }
  return {level == Level::avx2 ? detail::avx2_table() : detail::scalar_table(), level};
}

Dispatch& dispatch() {
  static Dispatch d = make_default_dispatch();
  return d;
}

}  // namespace

namespace detail {

const Table& scalar_table() {
  static const Table t{sum_abs2_scalar, dotc_scalar, axpy_scalar};
  return t;
}

#ifndef CFMTC_HAVE_AVX2_KERNELS
const Table& avx2_table() { return scalar_table(); }
#endif

}  // namespace detail

const char* level_name(Level level) {
  return level == Level::avx2 ? "avx2" : "scalar";
}

bool level_supported(Level level) {
  if (level == Level::scalar) return true;
  return kAvx2Compiled && cpu_has_avx2();
}

Level active_level() { return dispatch().level; }

void set_level(Level level) {
  if (!level_supported(level)) {
    throw ConfigError(std::string("kernel level not supported on this host: ") +
                      level_name(level));
  }
  dispatch() = {level == Level::avx2 ? detail::avx2_table() : detail::scalar_table(),
                level};
}

double sum_abs2(const cplx* x, std::size_t n) { return dispatch().table.sum_abs2(x, n); }

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  return dispatch().table.dotc(a, b, n);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  dispatch().table.axpy(alpha, x, y, n);
}

}  // namespace cfmtc::kernels
