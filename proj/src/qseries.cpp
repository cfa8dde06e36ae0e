#include "nek/qseries.hpp"

namespace nek {

std::vector<cplx> exp_log_series(const std::function<cplx(int)>& c, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "series order must be nonnegative");
  std::vector<cplx> ck(order + 1);
  for (int k = 1; k <= order; ++k) ck[k] = c(k);
  std::vector<cplx> a(order + 1);
  a[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    cplx s = 0.0;
    for (int k = 1; k <= n; ++k) s += ck[k] * a[n - k];
    a[n] = s / static_cast<double>(n);
  }
  return a;
}

}  // namespace nek
