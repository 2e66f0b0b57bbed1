#pragma once

#include <stdexcept>
#include <string>

namespace cfmtc {

// Invalid or inconsistent scenario/config input; message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Estimated channel matrix is rank deficient or too ill-conditioned to invert.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition_number)
      : std::runtime_error(what), condition_number(condition_number) {}
  double condition_number;
};

// A requested allocation cannot be realized (zero rate, zero SINR, ...).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Problem size exceeds a hard enumeration guard.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver ran out of iterations; carries the final residual.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual(residual) {}
  double residual;
};

// File/stream failure, message carries the path.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cfmtc
