#include "nek/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nek/qseries.hpp"
#include "parallel.hpp"

namespace nek {

namespace {

constexpr double kPoleTolerance = 1e-13;

cplx checked_denominator(cplx d, double scale) {
  if (std::abs(d) <= kPoleTolerance * scale) throw Error(ErrorKind::PoleHit, "integrand evaluated on a pole");
  return d;
}

// Cross-ratio product over ordered pairs j != k.
cplx pair_product(const std::vector<cplx>& z, cplx q1, cplx q2) {
  const cplx q12 = q1 * q2;
  cplx num = 1.0;
  cplx den = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (j == k) continue;
      const double scale = std::max(std::abs(z[j]), std::abs(z[k]));
      num *= (z[j] - z[k]) * (z[j] - q12 * z[k]);
      den *= checked_denominator(z[j] - q1 * z[k], scale) * checked_denominator(z[j] - q2 * z[k], scale);
    }
  }
  return num / den;
}

std::uint64_t grid_size(int n, int M, const QuadratureLimits& limits) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  if (M < 2 || M % 2 != 0) throw Error(ErrorKind::InvalidArgument, "M must be an even integer >= 2");
  if (n > limits.max_dim)
    throw Error(ErrorKind::BudgetExceeded, "dimension " + std::to_string(n) + " exceeds the quadrature cap " +
                                               std::to_string(limits.max_dim));
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) {
    total *= static_cast<std::uint64_t>(M);
    if (total > limits.max_points)
      throw Error(ErrorKind::BudgetExceeded, "grid of M^n points exceeds the budget");
  }
  return total;
}

// Trapezoidal rule for (2 pi i)^-n times the integral of F over |z_j| = rho,
// with F including the 1/z_j measure factors.
template <typename Fn>
QuadratureResult torus_trapezoid(int n, int M, double rho, const QuadratureLimits& limits, Fn&& F) {
  const std::uint64_t total = grid_size(n, M, limits);
  std::vector<cplx> nodes(M);
  for (int k = 0; k < M; ++k) nodes[k] = std::polar(rho, 2.0 * std::numbers::pi * k / M);
  // Values on the full grid; the coarse grid is the subset of even indices.
  struct Pair {
    cplx fine;
    cplx coarse;
    Pair& operator+=(const Pair& o) {
      fine += o.fine;
      coarse += o.coarse;
      return *this;
    }
    Pair operator+(const Pair& o) const { return {fine + o.fine, coarse + o.coarse}; }
  };
  const auto values = detail::parallel_map<Pair>(total, [&](std::size_t idx) {
    std::vector<cplx> z(n);
    bool coarse = true;
    std::size_t rest = idx;
    cplx jac = 1.0;
    for (int j = 0; j < n; ++j) {
      const std::size_t k = rest % M;
      rest /= M;
      coarse = coarse && (k % 2 == 0);
      z[j] = nodes[k];
      jac *= z[j];
    }
    const cplx v = F(z) * jac;
    return Pair{v, coarse ? v : cplx(0.0)};
  });
  const Pair s = detail::pairwise_sum(values);
  const double fine_count = static_cast<double>(total);
  const double coarse_count = fine_count / std::pow(2.0, n);
  QuadratureResult out;
  out.value = s.fine / fine_count;
  out.M = M;
  out.est_error = std::abs(out.value - s.coarse / coarse_count);
  return out;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

void check_rho(const MultiplicativeParams& mp, double rho) {
  double umax = 0.0;
  double umin = std::numeric_limits<double>::infinity();
  for (const auto& u : mp.u) {
    umax = std::max(umax, std::abs(u));
    umin = std::min(umin, std::abs(u));
  }
  const double qmax = std::max(std::abs(mp.q1), std::abs(mp.q2));
  if (!(rho > umax && rho * qmax < umin))
    throw Error(ErrorKind::Inadmissible, "rho lies outside the pole-free annulus");
}

}  // namespace

ContourSpec choose_rho(const MultiplicativeParams& mp, int points_per_dim) {
  check_admissible(mp);
  double umax = 0.0;
  double umin = std::numeric_limits<double>::infinity();
  for (const auto& u : mp.u) {
    umax = std::max(umax, std::abs(u));
    umin = std::min(umin, std::abs(u));
  }
  const double upper = umin / std::max(std::abs(mp.q1), std::abs(mp.q2));
  if (!(umax < upper)) throw Error(ErrorKind::Inadmissible, "empty annulus for the contour radius");
  return {std::sqrt(umax * upper), points_per_dim};
}

cplx measure_constant(cplx q1, cplx q2) { return (1.0 - q1 * q2) / ((1.0 - q1) * (1.0 - q2)); }

cplx symmetric_weight(const std::vector<cplx>& z, const MultiplicativeParams& mp) {
  const cplx q12 = mp.q1 * mp.q2;
  cplx w = 1.0;
  for (const auto& zj : z) {
    for (const auto& u : mp.u) {
      const double scale = std::max(std::abs(zj), std::abs(u));
      w *= (-u * zj) / (checked_denominator(zj - u, scale) * checked_denominator(q12 * zj - u, scale));
    }
  }
  return w * pair_product(z, mp.q1, mp.q2);
}

cplx integrand(const std::vector<cplx>& z, const MultiplicativeParams& mp) {
  cplx v = symmetric_weight(z, mp);
  for (const auto& zj : z) {
    if (zj == 0.0) throw Error(ErrorKind::PoleHit, "integrand evaluated at z = 0");
    v /= zj;
    for (const auto& p : mp.p) v *= zj - p;
  }
  return v;
}

QuadratureResult zn_quadrature(const MultiplicativeParams& mp, int n, const ContourSpec& spec,
                               const QuadratureLimits& limits) {
  check_admissible(mp);
  check_rho(mp, spec.rho);
  if (n == 0) return {1.0, spec.points_per_dim, 0.0};
  QuadratureResult r = torus_trapezoid(n, spec.points_per_dim, spec.rho, limits,
                                       [&](const std::vector<cplx>& z) { return integrand(z, mp); });
  const cplx c = std::pow(measure_constant(mp.q1, mp.q2), n) / factorial(n);
  r.value *= c;
  r.est_error *= std::abs(c);
  return r;
}

QuadratureResult zn_quadrature(const MultiplicativeParams& mp, int n, int M, const QuadratureLimits& limits) {
  return zn_quadrature(mp, n, choose_rho(mp, M), limits);
}

QuadratureResult a_n_quadrature(cplx q1, cplx q2, int n, int M, const QuadratureLimits& limits) {
  if (!(std::abs(q1) < 1.0 && std::abs(q2) < 1.0)) throw Error(ErrorKind::Inadmissible, "|q_i| must be < 1");
  if (n == 0) return {1.0, M, 0.0};
  QuadratureResult r = torus_trapezoid(n, M, 1.0, limits, [&](const std::vector<cplx>& z) {
    cplx v = pair_product(z, q1, q2);
    for (const auto& zj : z) v /= zj;
    return v;
  });
  const cplx c = std::pow(measure_constant(q1, q2), n) / factorial(n);
  r.value *= c;
  r.est_error *= std::abs(c);
  return r;
}

std::vector<cplx> a_n_series(cplx q1, cplx q2, int N) {
  return exp_log_series(
      [&](int k) {
        const cplx a = ipow(q1, k);
        const cplx b = ipow(q2, k);
        return (1.0 - a * b) / ((1.0 - a) * (1.0 - b));
      },
      N);
}

cplx adjoint_weight(cplx zj, cplx zk, cplx m, cplx q1, cplx q2) {
  const cplx mi = 1.0 / m;
  const double scale = std::max(std::abs(zj), std::abs(zk));
  const cplx num = (zj - q1 * mi * zk) * (zj - q2 * mi * zk) * (zj - m / q1 * zk) * (zj - m / q2 * zk);
  const cplx den = checked_denominator(zj - m * zk, scale) * checked_denominator(zj - mi * zk, scale) *
                   checked_denominator(zj - q1 * q2 * mi * zk, scale) *
                   checked_denominator(zj - m / (q1 * q2) * zk, scale);
  return num / den;
}

QuadratureResult zn_quadrature_adjoint(const MultiplicativeParams& mp, cplx m, int n, int M,
                                       const QuadratureLimits& limits) {
  const ContourSpec spec = choose_rho(mp, M);
  if (n == 0) return {1.0, M, 0.0};
  QuadratureResult r = torus_trapezoid(n, M, spec.rho, limits, [&](const std::vector<cplx>& z) {
    cplx v = integrand(z, mp);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) v *= adjoint_weight(z[j], z[k], m, mp.q1, mp.q2);
    return v;
  });
  const cplx c = std::pow(measure_constant(mp.q1, mp.q2), n) / factorial(n);
  r.value *= c;
  r.est_error *= std::abs(c);
  return r;
}

}  // namespace nek
