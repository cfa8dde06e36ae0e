#pragma once

#include <string>
#include <vector>

#include "nek/common.hpp"
#include "nek/partitions.hpp"

namespace nek {

/// Multiplicative coordinates (q1, q2, u, p) of the coefficients Z_n(u; p).
struct MultiplicativeParams {
  cplx q1;
  cplx q2;
  std::vector<cplx> u;  // r Coulomb parameters
  std::vector<cplx> p;  // s matter parameters

  int rank() const { return static_cast<int>(u.size()); }
  int flavours() const { return static_cast<int>(p.size()); }
};

/// Gauge-theory coordinates. Maps to MultiplicativeParams through
/// q_i = exp(-lambda eps_i), u_a = exp(-lambda a_a), p_m = exp(lambda w_m).
struct ExponentialParams {
  double lambda = 1.0;
  cplx eps1;
  cplx eps2;
  std::vector<cplx> a;
  std::vector<cplx> w;
  cplx instanton;  // the expansion variable (fugacity) of the full series

  int rank() const { return static_cast<int>(a.size()); }
  int flavours() const { return static_cast<int>(w.size()); }
};

MultiplicativeParams to_multiplicative(const ExponentialParams& ep);

/// Throws Error(Inadmissible) unless |q_i| < 1, the (q1, q2) regime holds
/// (conjugate pair or both real in (0,1)) and |q_i| max|u| < min|u|.
void check_admissible(const MultiplicativeParams& mp);

/// Throws Error(Inadmissible) unless lambda > 0, Re eps_i > 0, eps conjugate
/// or both real, and max Re a - min Re a < Re eps_i.
void check_admissible(const ExponentialParams& ep);

enum class Form { N, M };

struct GridViolation {
  enum class Family {
    Coulomb,  // u_alpha / u_beta == q1^x q2^y
    ShiftQ2,  // q1^x == q2^(y+1)
    ShiftQ1,  // q1^(x+1) == q2^y
  };
  Family family;
  int alpha = -1;  // 0-based, Coulomb family only
  int beta = -1;
  int x = 0;
  int y = 0;

  std::string describe() const;
  bool operator==(const GridViolation&) const = default;
};

/// Non-resonance conditions guaranteeing every fixed-point term at level n
/// is finite, tested within kGridTolerance (relative).
std::vector<GridViolation> check_grid(const MultiplicativeParams& mp, int n);

/// Product N^Y_{alpha,beta} (alpha, beta are 0-based).
/// Throws Error(DegenerateFactor) if a factor vanishes within tolerance.
cplx n_factor_N(cplx q1, cplx q2, const std::vector<cplx>& u, const MultiPartition& V,
                int alpha, int beta);
/// Product M^Y_{alpha,beta}: arm/leg roles swapped relative to N.
cplx n_factor_M(cplx q1, cplx q2, const std::vector<cplx>& u, const MultiPartition& V,
                int alpha, int beta);

/// prod_alpha prod_{(x,y) in Y_alpha} prod_m (u_alpha q1^(x-1) q2^(y-1) - p_m).
cplx numerator_kappa(const MultiplicativeParams& mp, const MultiPartition& V);

/// Single fixed-point term numerator / prod_{alpha,beta} factor.
cplx fixed_point_term(const MultiplicativeParams& mp, const MultiPartition& V, Form form);

/// Z_n(u; p) as a sum over r-tuples of total size n.
/// Throws Error(GridViolation) listing violations if a term degenerates.
cplx zn_multiplicative(const MultiplicativeParams& mp, int n, Form form = Form::N);

/// Z_n(eps1, eps2, a; w; lambda) evaluated with exponentials directly.
cplx zn_exponential(const ExponentialParams& ep, int n);

/// lambda^(2r-s) exp(-r lambda (eps1+eps2)/2): the per-instanton prefactor.
cplx instanton_prefactor(const ExponentialParams& ep);

struct SeriesRow {
  int n = 0;
  cplx value;
  double root = 0.0;   // |value|^(1/n); 1 at n = 0 by convention
  double bound = 0.0;  // theoretical limsup bound
};

struct PartialSum {
  cplx value;
  std::vector<SeriesRow> rows;
};

/// sum_{n <= n_max} (instanton * prefactor)^n Z_n; rows carry Z_n.
PartialSum partition_function_partial(const ExponentialParams& ep, int n_max);

/// The sinh-product coefficient of instanton^n for pure gauge theory (s = 0).
cplx zn_sinh_intro(const ExponentialParams& ep, int n);

/// Homological coefficients: sum of inverse products of linear weights.
cplx zn_homological(cplx eps1, cplx eps2, const std::vector<cplx>& a, int n);

/// Gaiotto-state coefficients Z_n(q, t, Q) as a sum over pairs of partitions.
cplx zn_gaiotto(cplx q, cplx t, cplx Q, int n);

/// q^-n t^n Z_n(q, t, Q). When individual pair terms degenerate (for example
/// q t = 1, where q1 = q2) the removable singularity in t is resolved by
/// averaging over a small circle around t. Throws Error(DegenerateFactor) if
/// two circle radii disagree, i.e. the singularity is a genuine pole.
cplx gaiotto_norm_from_pairs(cplx q, cplx t, cplx Q, int n);

/// The Gaiotto pair factor N_{nu,mu}(Q).
cplx gaiotto_pair_factor(cplx q, cplx t, const Partition& nu, const Partition& mu, cplx Q);

struct ConformalParams {
  cplx b;
  cplx alpha_r;
  cplx alpha_l;
  cplx P_r;
  cplx P_m;
  cplx P_l;
};

/// Z_bif(alpha | P', Y'; P, Y) for pairs of partitions, with P vectors (P, -P).
cplx z_bifundamental(cplx b, cplx alpha, cplx P_prime, const MultiPartition& Y_prime,
                     cplx P, const MultiPartition& Y);

/// Closed product form of the two outer Z_bif factors of the block numerator.
cplx conformal_numerator_product(const ConformalParams& cp, const MultiPartition& Y);

/// The four shifts v_1..v_4 in the numerator product.
std::vector<cplx> conformal_shifts(const ConformalParams& cp);

/// F_n of the four-point conformal block expansion.
cplx conformal_block_Fn(const ConformalParams& cp, int n);

/// prod_m max{|p_m|, |u_1|, ..., |u_r|}: bound on limsup |Z_n|^(1/n).
double radius_bound(const MultiplicativeParams& mp);

/// Bound on |instanton| for convergence of the full series.
double domain_bound(const ExponentialParams& ep);

/// (q1, q2, u) -> (1/q1, 1/q2, 1/u). Requires p empty and nonzero entries.
MultiplicativeParams invert_params(const MultiplicativeParams& mp);

}  // namespace nek
