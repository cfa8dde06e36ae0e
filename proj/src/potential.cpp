#include "nek/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "parallel.hpp"

namespace nek {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// log|e^{i theta} - q| for complex q, written through the shifted g_sigma.
double log_distance(double theta, cplx q) {
  return g_sigma(theta - std::arg(q), std::abs(q));
}

double log_sum_exp_mean(const std::vector<double>& x) {
  const double m = *std::max_element(x.begin(), x.end());
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return m + std::log(s / static_cast<double>(x.size()));
}

double integrated_autocorrelation(const std::vector<double>& x) {
  const std::size_t N = x.size();
  if (N < 4) return 1.0;
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / N;
  double c0 = 0.0;
  for (double v : x) c0 += (v - mean) * (v - mean);
  c0 /= N;
  if (!(c0 > 0.0)) return 1.0;
  double tau = 1.0;
  for (std::size_t t = 1; t < N / 2; ++t) {
    double c = 0.0;
    for (std::size_t i = 0; i + t < N; ++i) c += (x[i] - mean) * (x[i + t] - mean);
    c /= N;
    tau += 2.0 * c / c0;
    if (static_cast<double>(t) >= 5.0 * tau) break;
  }
  return std::max(tau, 1.0);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// f(t) + f(-t) with the trigonometric work shared between the two signs.
class SymmetrizedPotential {
 public:
  SymmetrizedPotential(cplx q1, cplx q2) {
    const cplx qs[3] = {q1 * q2, q1, q2};
    for (int i = 0; i < 3; ++i) {
      sigma_[i] = std::abs(qs[i]);
      cos_[i] = std::cos(std::arg(qs[i]));
      sin_[i] = std::sin(std::arg(qs[i]));
    }
  }

  double operator()(double t) const {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double chord = 2.0 - 2.0 * c;
    if (!(chord > 0.0)) return std::numeric_limits<double>::infinity();
    double total = -std::log(chord);
    for (int i = 0; i < 3; ++i) {
      const double a = c * cos_[i];
      const double b = s * sin_[i];
      const double sq = sigma_[i] * sigma_[i];
      const double plus = 0.5 * std::log1p(sq - 2.0 * sigma_[i] * (a + b));
      const double minus = 0.5 * std::log1p(sq - 2.0 * sigma_[i] * (a - b));
      total += (i == 0 ? -1.0 : 1.0) * (plus + minus);
    }
    return total;
  }

 private:
  double sigma_[3];
  double cos_[3];
  double sin_[3];
};

// Energy change of moving particle j from its angle to `angle`; infinite
// when the new angle hits another particle.
double move_energy(const std::vector<double>& theta, int j, double angle, const SymmetrizedPotential& pair) {
  double e = 0.0;
  for (int k = 0; k < static_cast<int>(theta.size()); ++k) {
    if (k == j) continue;
    e += pair(angle - theta[k]) - pair(theta[j] - theta[k]);
  }
  return e;
}

}  // namespace

double g_sigma(double theta, double sigma) {
  if (sigma == 1.0) {
    const double s = std::abs(2.0 * std::sin(theta / 2.0));
    return s == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(s);
  }
  return 0.5 * std::log1p(sigma * sigma - 2.0 * sigma * std::cos(theta));
}

double f_potential(double theta, cplx q1, cplx q2) {
  const double t = wrap(theta);
  if (t == 0.0) return std::numeric_limits<double>::infinity();
  return -g_sigma(t, 1.0) - log_distance(t, q1 * q2) + log_distance(t, q1) + log_distance(t, q2);
}

double fourier_g(double sigma, int k) {
  if (!(sigma > 0.0)) throw Error(ErrorKind::InvalidArgument, "sigma must be positive");
  if (k == 0) return std::max(0.0, std::log(sigma));
  const int a = std::abs(k);
  return -std::min(std::pow(sigma, a), std::pow(sigma, -a)) / (2.0 * a);
}

cplx fourier_f(int k, cplx q1, cplx q2) {
  if (k == 0) return 0.0;
  const int a = std::abs(k);
  auto shifted = [&](cplx q) { return std::pow(std::abs(q), a) * std::polar(1.0, -k * std::arg(q)); };
  return (1.0 + shifted(q1 * q2) - shifted(q1) - shifted(q2)) / (2.0 * a);
}

cplx fourier_quadrature(const TorusFunction& h, int k, int M) {
  if (M < 1) throw Error(ErrorKind::InvalidArgument, "M must be positive");
  cplx s = 0.0;
  for (int j = 0; j < M; ++j) {
    const double t = kTwoPi * j / M;
    s += h(t) * std::polar(1.0, -k * t);
  }
  return s / static_cast<double>(M);
}

cplx fourier_quadrature_singular(const TorusFunction& h, int k, int M) {
  if (M < 1) throw Error(ErrorKind::InvalidArgument, "M must be positive");
  auto midpoint = [&](int points) {
    cplx s = 0.0;
    for (int j = 0; j < points; ++j) {
      const double t = kTwoPi * (j + 0.5) / points;
      s += h(t) * std::polar(1.0, -k * t);
    }
    return s / static_cast<double>(points);
  };
  return 2.0 * midpoint(2 * M) - midpoint(M);
}

cplx fourier_f_quadrature(int k, cplx q1, cplx q2, int M) {
  const cplx q12 = q1 * q2;
  const cplx singular = fourier_quadrature_singular([](double t) { return g_sigma(t, 1.0); }, k, M);
  const cplx smooth = fourier_quadrature(
      [&](double t) { return -log_distance(t, q12) + log_distance(t, q1) + log_distance(t, q2); }, k, M);
  return -singular + smooth;
}

double g_weight_abs(double rho, double theta, const MultiplicativeParams& mp) {
  const cplx z = std::polar(rho, theta);
  const cplx q12 = mp.q1 * mp.q2;
  double w = 1.0;
  for (const auto& p : mp.p) w *= std::abs(z - p);
  for (const auto& u : mp.u) w *= std::abs(u * z) / (std::abs(z - u) * std::abs(q12 * z - u));
  return w;
}

namespace {
void check_rho_annulus(double rho, const MultiplicativeParams& mp) {
  double umax = 0.0;
  double umin = std::numeric_limits<double>::infinity();
  for (const auto& u : mp.u) {
    umax = std::max(umax, std::abs(u));
    umin = std::min(umin, std::abs(u));
  }
  const double qmax = std::max(std::abs(mp.q1), std::abs(mp.q2));
  if (mp.u.empty() || !(rho > umax && rho * qmax < umin))
    throw Error(ErrorKind::Inadmissible, "rho must satisfy max|u| < rho < min|u| / |q_i|");
}
}  // namespace

double log_g_mean(double rho, const MultiplicativeParams& mp) {
  check_rho_annulus(rho, mp);
  double s = 0.0;
  for (const auto& p : mp.p) s += std::max(std::log(std::abs(p)), std::log(rho));
  return s;
}

double log_g_mean_quadrature(double rho, const MultiplicativeParams& mp, int M) {
  check_rho_annulus(rho, mp);
  double s = 0.0;
  for (int j = 0; j < M; ++j) s += std::log(g_weight_abs(rho, kTwoPi * (j + 0.5) / M, mp));
  return s / M;
}

void validate(const LogGasConfig& cfg) {
  if (cfg.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (cfg.steps <= cfg.burn_in || cfg.burn_in < 0)
    throw Error(ErrorKind::InvalidArgument, "steps must exceed burn_in >= 0");
  if (!(cfg.proposal_width > 0.0)) throw Error(ErrorKind::InvalidArgument, "proposal width must be positive");
  if (cfg.chains < 1) throw Error(ErrorKind::InvalidArgument, "chains must be positive");
  if (cfg.stride < 0) throw Error(ErrorKind::InvalidArgument, "stride must be nonnegative");
  if (!(std::abs(cfg.q1) < 1.0 && std::abs(cfg.q2) < 1.0))
    throw Error(ErrorKind::InvalidArgument, "|q_i| must be < 1");
}

double log_gas_log_density(const std::vector<double>& theta, cplx q1, cplx q2) {
  double e = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j)
    for (std::size_t k = 0; k < theta.size(); ++k)
      if (j != k) e += f_potential(theta[k] - theta[j], q1, q2);
  return -e;
}

double metropolis_acceptance(const std::vector<double>& x, const std::vector<double>& y, cplx q1, cplx q2) {
  const double diff = log_gas_log_density(y, q1, q2) - log_gas_log_density(x, q1, q2);
  if (std::isnan(diff)) return 0.0;
  return diff >= 0.0 ? 1.0 : std::exp(diff);
}

double empirical_energy(const std::vector<double>& theta, cplx q1, cplx q2) {
  const SymmetrizedPotential pair(q1, q2);
  double e = 0.0;
  for (std::size_t j = 0; j < theta.size(); ++j)
    for (std::size_t k = j + 1; k < theta.size(); ++k) e += pair(theta[j] - theta[k]);
  const double n = static_cast<double>(theta.size());
  return e / (n * n);
}

std::uint64_t chain_seed(std::uint64_t seed, int chain) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(chain) + 1));
}

LogGasChain sample_log_gas(const LogGasConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> site(0, cfg.n - 1);
  const int n = cfg.n;
  std::vector<double> theta(n);
  const double jitter = unit(rng) * kTwoPi;
  for (int j = 0; j < n; ++j) theta[j] = wrap(jitter + kTwoPi * j / n);

  const SymmetrizedPotential pair(cfg.q1, cfg.q2);
  LogGasChain chain;
  chain.n = n;
  const int stride = cfg.effective_stride();
  std::int64_t accepted = 0;
  for (std::int64_t step = 0; step < cfg.steps; ++step) {
    const int j = site(rng);
    const double proposal = wrap(theta[j] + (unit(rng) - 0.5) * cfg.proposal_width);
    const double u = unit(rng);
    if (n > 1) {
      const double delta = move_energy(theta, j, proposal, pair);
      if (std::isfinite(delta) && std::log(u) < -delta) {
        theta[j] = proposal;
        ++accepted;
      }
    } else {
      theta[j] = proposal;
      ++accepted;
    }
    if (step >= cfg.burn_in && (step - cfg.burn_in + 1) % stride == 0) chain.samples.push_back(theta);
  }
  chain.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(cfg.steps);
  return chain;
}

HLimitEstimate estimate_h_limit(const TorusFunction& h, const LogGasConfig& cfg, double eta,
                                int bootstrap_replicates) {
  validate(cfg);
  const auto chains = detail::parallel_map<LogGasChain>(cfg.chains, [&](std::size_t c) {
    LogGasConfig one = cfg;
    one.seed = cfg.chains == 1 ? cfg.seed : chain_seed(cfg.seed, static_cast<int>(c));
    return sample_log_gas(one);
  });

  HLimitEstimate out;
  out.eta = eta;
  std::vector<std::vector<double>> stats;  // per chain, sum_j h(theta_j)
  std::vector<double> all;
  double acceptance = 0.0;
  double energy = 0.0;
  std::int64_t below = 0;
  double tau = 1.0;
  for (const auto& ch : chains) {
    std::vector<double> x;
    x.reserve(ch.samples.size());
    for (const auto& s : ch.samples) {
      double v = 0.0;
      for (double t : s) v += h(t);
      x.push_back(v);
      const double I = empirical_energy(s, cfg.q1, cfg.q2);
      energy += I;
      if (I <= eta) ++below;
    }
    tau = std::max(tau, integrated_autocorrelation(x));
    acceptance += ch.acceptance_rate;
    all.insert(all.end(), x.begin(), x.end());
    stats.push_back(std::move(x));
  }
  if (all.empty()) throw Error(ErrorKind::InvalidArgument, "chain recorded no samples");
  const double n = cfg.n;
  const auto N = static_cast<std::int64_t>(all.size());
  out.samples = N;
  out.estimate = log_sum_exp_mean(all) / n;
  out.acceptance_rate = acceptance / chains.size();
  out.autocorrelation_time = tau;
  out.mean_energy = energy / N;
  out.eta_fraction = static_cast<double>(below) / N;
  const std::int64_t per_chain = N / cfg.chains;
  out.mixing_ok = out.acceptance_rate > 0.02 && out.acceptance_rate < 0.98 && tau * 50.0 < per_chain;

  // Moving-block bootstrap within chains.
  const std::size_t block = std::max<std::size_t>(
      {1, static_cast<std::size_t>(std::ceil(2.0 * tau)), static_cast<std::size_t>(std::cbrt(double(per_chain)))});
  std::vector<std::pair<std::size_t, std::size_t>> starts;  // (chain, start)
  for (std::size_t c = 0; c < stats.size(); ++c)
    for (std::size_t s = 0; s + block <= stats[c].size(); ++s) starts.emplace_back(c, s);
  if (starts.empty() || bootstrap_replicates < 2) return out;
  std::mt19937_64 rng(chain_seed(cfg.seed, -1));
  std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
  const std::size_t blocks = std::max<std::size_t>(1, all.size() / block);
  std::vector<double> replicate;
  std::vector<double> estimates;
  estimates.reserve(bootstrap_replicates);
  for (int b = 0; b < bootstrap_replicates; ++b) {
    replicate.clear();
    for (std::size_t i = 0; i < blocks; ++i) {
      const auto [c, s] = starts[pick(rng)];
      replicate.insert(replicate.end(), stats[c].begin() + s, stats[c].begin() + s + block);
    }
    estimates.push_back(log_sum_exp_mean(replicate) / n);
  }
  const double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / estimates.size();
  double var = 0.0;
  for (double e : estimates) var += (e - mean) * (e - mean);
  out.std_error = std::sqrt(var / (estimates.size() - 1));
  return out;
}

RadiusReport empirical_radius(const std::vector<cplx>& values, double bound, int n_min) {
  RadiusReport report;
  report.bound = bound;
  double running = 0.0;
  bool decreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 1; n < static_cast<int>(values.size()); ++n) {
    RadiusRow row;
    row.n = n;
    row.root = std::pow(std::abs(values[n]), 1.0 / n);
    if (n >= n_min) {
      running = std::max(running, row.root);
      if (row.root > prev * (1.0 + 1e-12)) decreasing = false;
      prev = row.root;
    }
    row.running_max = running;
    report.rows.push_back(row);
  }
  report.decreasing_tail = decreasing;
  report.max_ratio = bound > 0.0 ? running / bound : std::numeric_limits<double>::infinity();
  return report;
}

}  // namespace nek
