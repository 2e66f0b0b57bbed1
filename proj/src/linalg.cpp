#include "cfmtc/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "cfmtc/kernels.hpp"

namespace cfmtc {

CMatrix gram(const CMatrix& g) {
  const std::size_t k = g.cols;
  CMatrix c(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const cplx v = kernels::dotc(g.col(i), g.col(j), g.rows);
      c(i, j) = v;
      c(j, i) = std::conj(v);
    }
    c(j, j) = {c(j, j).real(), 0.0};  // exact Hermitian diagonal
  }
  return c;
}

std::vector<double> hermitian_eigenvalues_desc(const CMatrix& herm) {
  Eigen::Map<const Eigen::MatrixXcd> m(herm.data.data(),
                                       static_cast<Eigen::Index>(herm.rows),
                                       static_cast<Eigen::Index>(herm.cols));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + herm.rows);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

double frobenius_sq(const CMatrix& g) {
  return kernels::sum_abs2(g.data.data(), g.data.size());
}

CMatrix adjoint(const CMatrix& g) {
  CMatrix out(g.cols, g.rows);
  for (std::size_t j = 0; j < g.cols; ++j) {
    for (std::size_t i = 0; i < g.rows; ++i) {
      out(j, i) = std::conj(g(i, j));
    }
  }
  return out;
}

}  // namespace cfmtc
