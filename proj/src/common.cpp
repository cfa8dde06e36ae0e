#include "nek/common.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace nek {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::BoxOutsideDiagram: return "box-outside-diagram";
    case ErrorKind::EmptyTuple: return "all-components-empty";
    case ErrorKind::DegenerateFactor: return "degenerate-factor";
    case ErrorKind::GridViolation: return "grid-violation";
    case ErrorKind::Inadmissible: return "inadmissible-parameters";
    case ErrorKind::ZeroParameter: return "zero-parameter";
    case ErrorKind::PoleHit: return "pole-hit";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::SingularKac: return "singular-kac-matrix";
    case ErrorKind::RegimeViolation: return "regime-violation";
  }
  return "unknown";
}

cplx ipow(cplx base, int exponent) {
  if (exponent < 0) return cplx(1.0) / ipow(base, -exponent);
  cplx result(1.0);
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

cplx expm1(cplx x) {
  const double a = x.real();
  const double b = x.imag();
  const double s = std::sin(0.5 * b);
  const double re = std::expm1(a) * std::cos(b) - 2.0 * s * s;
  const double im = std::exp(a) * std::sin(b);
  return {re, im};
}

bool near_zero_factor(cplx one_minus_x, cplx x, double tol) {
  return std::abs(one_minus_x) <= tol * std::max(1.0, std::abs(x));
}

double relative_difference(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) { g_max_threads = n; }

unsigned max_threads() {
  const unsigned cap = g_max_threads.load();
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  return cap == 0 ? hw : std::min(cap, hw);
}

}  // namespace nek
