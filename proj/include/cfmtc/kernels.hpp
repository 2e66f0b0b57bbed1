#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace cfmtc::kernels {

using cplx = std::complex<double>;

// The arithmetic inner loops of the simulator (Gram accumulation, receiver
// matvecs, power statistics) run through these three primitives.  Each has a
// scalar reference implementation and an AVX2 variant; the active variant is
// chosen at runtime from CPU features, overridable via the CFMTC_KERNELS
// environment variable ("scalar" or "avx2") or set_level().  Scalar and SIMD
// variants are equivalence-tested against each other.

enum class Level { scalar, avx2 };

const char* level_name(Level level);
bool level_supported(Level level);
Level active_level();
// Throws ConfigError if the requested level is not supported on this CPU.
void set_level(Level level);

// sum_i |x_i|^2
double sum_abs2(const cplx* x, std::size_t n);
// sum_i conj(a_i) * b_i
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
// y_i += alpha * x_i
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

namespace detail {

struct Table {
  double (*sum_abs2)(const cplx*, std::size_t);
  cplx (*dotc)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
};

const Table& scalar_table();
const Table& avx2_table();  // valid only when level_supported(Level::avx2)

}  // namespace detail

}  // namespace cfmtc::kernels
