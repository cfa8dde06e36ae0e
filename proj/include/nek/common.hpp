#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nek {

using cplx = std::complex<double>;

enum class ErrorKind {
  InvalidArgument,
  BoxOutsideDiagram,
  EmptyTuple,
  DegenerateFactor,
  GridViolation,
  Inadmissible,
  ZeroParameter,
  PoleHit,
  BudgetExceeded,
  CapExceeded,
  SingularKac,
  RegimeViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Relative tolerance used to decide that a product factor (1 - x) vanishes.
inline constexpr double kGridTolerance = 1e-9;

/// Integer power by repeated squaring; negative exponents invert.
cplx ipow(cplx base, int exponent);

/// exp(x) - 1 without cancellation for small |x|.
cplx expm1(cplx x);

bool near_zero_factor(cplx one_minus_x, cplx x, double tol = kGridTolerance);

double relative_difference(cplx a, cplx b);

/// Worker cap for the parallel reductions; 0 means hardware concurrency.
void set_max_threads(unsigned n);
unsigned max_threads();

}  // namespace nek
