#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cfmtc {

using cplx = std::complex<double>;

// Column-major dense matrices.  Columns are contiguous so the kernel
// primitives can run straight over them.
struct CMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
  cplx* col(std::size_t j) { return data.data() + j * rows; }
  const cplx* col(std::size_t j) const { return data.data() + j * rows; }
};

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  double& operator()(std::size_t i, std::size_t j) { return data[j * rows + i]; }
  const double& operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }
};

// Hermitian Gram matrix g^H g (cols x cols), accumulated with kernels::dotc.
CMatrix gram(const CMatrix& g);

// Eigenvalues of a Hermitian matrix, sorted descending.
std::vector<double> hermitian_eigenvalues_desc(const CMatrix& herm);

// Squared Frobenius norm via kernels::sum_abs2.
double frobenius_sq(const CMatrix& g);

CMatrix adjoint(const CMatrix& g);

}  // namespace cfmtc
