#pragma once

#include <cmath>
#include <complex>

#include "nek/sampling.hpp"

namespace testutil {

using nek::cplx;
using nek::random_admissible;
using nek::random_phase;
using nek::random_q;
using nek::uniform;

inline bool close(cplx a, cplx b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace testutil
