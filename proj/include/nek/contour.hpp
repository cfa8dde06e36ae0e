#pragma once

#include <cstdint>
#include <vector>

#include "nek/common.hpp"
#include "nek/nekrasov.hpp"

namespace nek {

struct ContourSpec {
  double rho = 1.0;
  int points_per_dim = 64;
};

struct QuadratureResult {
  cplx value;
  int M = 0;
  double est_error = 0.0;  // |Q_M - Q_{M/2}| on the nested grid
};

/// Default cap on dimension n and on the number of grid points M^n.
inline constexpr int kQuadratureMaxDim = 3;
inline constexpr std::uint64_t kQuadratureMaxPoints = std::uint64_t{1} << 24;

struct QuadratureLimits {
  int max_dim = kQuadratureMaxDim;
  std::uint64_t max_points = kQuadratureMaxPoints;
};

/// rho = sqrt(max|u| * min_i |q_i|^-1 min|u|). Throws Error(Inadmissible)
/// when the admissible annulus is empty.
ContourSpec choose_rho(const MultiplicativeParams& mp, int points_per_dim = 64);

/// The symmetric weight prod_j prod_a (-u_a z_j)/((z_j - u_a)(q1 q2 z_j - u_a))
/// times the pairwise cross-ratio product over j != k.
cplx symmetric_weight(const std::vector<cplx>& z, const MultiplicativeParams& mp);

/// The integrand on the torus: the symmetric weight, the matter factors
/// prod (z_j - p_m), and the measure factors 1/z_j. The constant
/// (1/n!) A^n is left to the caller. Throws Error(PoleHit).
cplx integrand(const std::vector<cplx>& z, const MultiplicativeParams& mp);

/// (1 - q1 q2) / ((1 - q1)(1 - q2)).
cplx measure_constant(cplx q1, cplx q2);

QuadratureResult zn_quadrature(const MultiplicativeParams& mp, int n, int M,
                               const QuadratureLimits& limits = {});
/// Same with an explicit radius; rho must lie in the pole-free annulus.
QuadratureResult zn_quadrature(const MultiplicativeParams& mp, int n, const ContourSpec& spec,
                               const QuadratureLimits& limits = {});

QuadratureResult a_n_quadrature(cplx q1, cplx q2, int n, int M, const QuadratureLimits& limits = {});

/// Coefficients a_0..a_N of exp(sum_n A(q1^n, q2^n) z^n / n).
std::vector<cplx> a_n_series(cplx q1, cplx q2, int N);

/// Pairwise factor for adjoint matter of mass parameter m.
cplx adjoint_weight(cplx zj, cplx zk, cplx m, cplx q1, cplx q2);

/// zn_quadrature with the integrand multiplied by prod_{j<k} adjoint_weight.
QuadratureResult zn_quadrature_adjoint(const MultiplicativeParams& mp, cplx m, int n, int M,
                                       const QuadratureLimits& limits = {});

}  // namespace nek
