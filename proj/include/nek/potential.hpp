#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nek/common.hpp"
#include "nek/nekrasov.hpp"

namespace nek {

using TorusFunction = std::function<double(double)>;

/// Pair potential on the circle; +infinity at theta = 0 (mod 2 pi).
double f_potential(double theta, cplx q1, cplx q2);

/// log|e^{i theta} - sigma|.
double g_sigma(double theta, double sigma);

/// Fourier coefficients of g_sigma.
double fourier_g(double sigma, int k);

/// Fourier coefficients of f.
cplx fourier_f(int k, cplx q1, cplx q2);

/// (1/2pi) int h(theta) e^{-ik theta} by the M-point trapezoidal rule.
cplx fourier_quadrature(const TorusFunction& h, int k, int M);

/// Same for h with an integrable log singularity at theta = 0: midpoint grid
/// with one Richardson step (2 Q_{2M} - Q_M) removing the O(1/M) term.
cplx fourier_quadrature_singular(const TorusFunction& h, int k, int M);

/// c_k(f) evaluated by quadrature, splitting f into shifted g_sigma terms.
cplx fourier_f_quadrature(int k, cplx q1, cplx q2, int M);

/// |g(rho, theta; u; p)|, the one-particle weight on |z| = rho.
double g_weight_abs(double rho, double theta, const MultiplicativeParams& mp);

/// (1/2pi) int log|g(rho, theta)| in closed form: sum_m max(log|p_m|, log rho).
/// Throws Error(Inadmissible) if rho is outside the pole-free annulus.
double log_g_mean(double rho, const MultiplicativeParams& mp);
double log_g_mean_quadrature(double rho, const MultiplicativeParams& mp, int M);

struct LogGasConfig {
  int n = 16;
  cplx q1 = 0.3;
  cplx q2 = 0.2;
  std::int64_t steps = 200000;   // single-site updates, burn-in included
  std::int64_t burn_in = 20000;
  std::uint64_t seed = 1;
  double proposal_width = 0.7853981633974483;  // pi/4, full width
  int stride = 0;                // 0 selects 2n
  int chains = 1;

  int effective_stride() const { return stride > 0 ? stride : 2 * n; }
};

void validate(const LogGasConfig& cfg);

/// -sum_{j != k} f(theta_k - theta_j).
double log_gas_log_density(const std::vector<double>& theta, cplx q1, cplx q2);

/// Metropolis acceptance probability for moving from x to y.
double metropolis_acceptance(const std::vector<double>& x, const std::vector<double>& y, cplx q1,
                             cplx q2);

/// I[delta_theta] = (1/n^2) sum_{j != k} f(theta_j - theta_k).
double empirical_energy(const std::vector<double>& theta, cplx q1, cplx q2);

struct LogGasChain {
  int n = 0;
  std::vector<std::vector<double>> samples;  // recorded configurations
  double acceptance_rate = 0.0;
};

/// One Metropolis chain (cfg.chains is ignored).
LogGasChain sample_log_gas(const LogGasConfig& cfg);

/// Seed of chain i derived from the base seed.
std::uint64_t chain_seed(std::uint64_t seed, int chain);

struct HLimitEstimate {
  double estimate = 0.0;    // (1/n) log E_n[exp(sum_j h(theta_j))]
  double std_error = 0.0;   // block bootstrap
  std::int64_t samples = 0;
  double acceptance_rate = 0.0;
  double autocorrelation_time = 0.0;  // integrated, of sum_j h(theta_j)
  bool mixing_ok = true;
  double mean_energy = 0.0;           // average of I[delta_theta]
  double eta = 0.0;
  double eta_fraction = 0.0;          // fraction of samples with I <= eta
};

/// Runs cfg.chains independent chains and merges them in chain order.
HLimitEstimate estimate_h_limit(const TorusFunction& h, const LogGasConfig& cfg, double eta = 0.1,
                                int bootstrap_replicates = 200);

struct RadiusRow {
  int n = 0;
  double root = 0.0;         // |Z_n|^(1/n)
  double running_max = 0.0;  // max of root over rows up to n, from n_min on
};

struct RadiusReport {
  std::vector<RadiusRow> rows;
  double bound = 0.0;
  double max_ratio = 0.0;  // max running_max / bound over the window
  bool decreasing_tail = false;
};

/// Root statistic of values[n] (index = n), starting the running max at n_min.
RadiusReport empirical_radius(const std::vector<cplx>& values, double bound, int n_min = 1);

}  // namespace nek
