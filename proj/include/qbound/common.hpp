#pragma once

// Shared aliases, error types and small utilities used across the library.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qbound {

using complex_t = std::complex<double>;
using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;
using rmatrix = Eigen::MatrixXd;
using rvector = Eigen::VectorXd;
using index_t = Eigen::Index;

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed numerical input (non-Hermitian matrix, bad trace, ...).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& msg) : Error("invalid-input: " + msg) {}
};

// A solve touched the (near-)null space of a density matrix.
class SingularSupportError : public Error {
 public:
  explicit SingularSupportError(const std::string& msg) : Error("singular-support: " + msg) {}
};

// Parameter point outside a model's domain, or a structurally invalid request.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error("domain: " + msg) {}
};

// Fock-space truncation too small for the requested state.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& msg) : Error("truncation-too-small: " + msg) {}
};

// A POVM whose outcome probabilities do not sum to one on the given state.
class InconsistentPovmError : public Error {
 public:
  explicit InconsistentPovmError(const std::string& msg) : Error("inconsistent-povm: " + msg) {}
};

// Bad command-line or file configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

// Default numerical tolerances. All of them can be overridden per call where
// the corresponding operation takes a tolerance argument.
namespace tol {
inline constexpr double hermiticity = 1e-12;       // max-entry asymmetry allowed on input
inline constexpr double unit_trace = 1e-10;        // |Tr - 1| allowed on density input
inline constexpr double eigenvalue_clip = 1e-10;   // negative eigenvalues above -clip are zeroed
inline constexpr double support = 1e-12;           // eigenvalues below this are off-support
inline constexpr double residual_rel = 1e-9;       // relative residual for the solves
inline constexpr double pinv_rel = 1e-10;          // relative singular-value cutoff
inline constexpr double povm_completeness = 1e-9;  // deviation of element sum from identity
inline constexpr double povm_psd = -1e-10;         // allowed element eigenvalue negativity
inline constexpr double probability_sum = 1e-8;    // deviation of outcome probabilities from 1
inline constexpr double grouping = 1e-8;           // relative eigenvalue grouping for PVMs
inline constexpr double traceless = 1e-10;         // allowed trace of a state difference
}  // namespace tol

// A real value that may be flagged as +infinity. Reports never carry a
// floating-point infinity; the flag is explicit.
struct ExtendedReal {
  double value = 0.0;
  bool infinite = false;

  static ExtendedReal finite(double v) { return {v, false}; }
  static ExtendedReal infinity() { return {0.0, true}; }
};

// Number of worker threads to use for embarrassingly parallel loops:
// the QBOUND_THREADS environment variable if set (>=1), else the hardware
// concurrency. Results are independent of the thread count by construction.
unsigned worker_thread_count();

// Runs fn(i) for i in [0, n), possibly concurrently. fn must be safe to call
// from multiple threads; iteration-to-thread assignment carries no state.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace qbound
