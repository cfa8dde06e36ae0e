#pragma once

#include <functional>
#include <vector>

#include "nek/common.hpp"

namespace nek {

/// Coefficients a_0..a_order of exp(sum_{k>=1} c_k x^k / k), via the
/// derivative recurrence n a_n = sum_{k=1}^n c_k a_{n-k}.
std::vector<cplx> exp_log_series(const std::function<cplx(int)>& c, int order);

}  // namespace nek
