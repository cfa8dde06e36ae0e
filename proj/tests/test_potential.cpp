#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nek/contour.hpp"
#include "nek/potential.hpp"

using namespace nek;
using testutil::close;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Kolmogorov-Smirnov distance of samples in [0, 2pi) from the uniform law.
double ks_uniform(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  const double N = x.size();
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double F = x[i] / kTwoPi;
    d = std::max({d, (i + 1) / N - F, F - i / N});
  }
  return d;
}

// Variance of nearest-neighbour gaps in units of the mean gap.
double gap_variance(std::vector<double> theta) {
  std::sort(theta.begin(), theta.end());
  const int n = theta.size();
  std::vector<double> gaps;
  for (int j = 0; j < n; ++j) {
    const double next = j + 1 < n ? theta[j + 1] : theta[0] + kTwoPi;
    gaps.push_back((next - theta[j]) * n / kTwoPi);
  }
  double var = 0.0;
  for (double g : gaps) var += (g - 1.0) * (g - 1.0);
  return var / n;
}

}  // namespace

TEST_CASE("pair potential") {
  CHECK(std::isinf(f_potential(0.0, 0.3, 0.2)));
  CHECK(std::isinf(f_potential(kTwoPi, 0.3, 0.2)));
  CHECK(f_potential(std::numbers::pi, 0.0, 0.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  // Direct evaluation of the defining ratio.
  const cplx q1(0.2, 0.25), q2 = std::conj(q1);
  for (double t : {0.3, 1.1, 2.9, 4.4}) {
    const cplx e = std::polar(1.0, t);
    const double direct = -std::log(std::abs(e - 1.0) * std::abs(e - q1 * q2) / (std::abs(e - q1) * std::abs(e - q2)));
    CHECK(f_potential(t, q1, q2) == doctest::Approx(direct).epsilon(1e-13));
  }
  std::mt19937_64 rng(31);
  for (int draw = 0; draw < 50; ++draw) {
    const auto [a, b] = testutil::random_q(rng, draw);
    const double t = testutil::uniform(rng, 0.01, 6.27);
    CHECK(std::abs(f_potential(t, a, b) - f_potential(-t, a, b)) < 1e-13);
  }
}

TEST_CASE("Fourier coefficients of g_sigma") {
  CHECK(fourier_g(0.5, 0) == 0.0);
  CHECK(fourier_g(2.0, 0) == doctest::Approx(std::log(2.0)));
  CHECK(fourier_g(0.5, 2) == doctest::Approx(-1.0 / 16.0));
  CHECK(fourier_g(0.5, -2) == doctest::Approx(-1.0 / 16.0));
  for (double sigma : {0.3, 0.5, 2.0}) {
    for (int k = -8; k <= 8; ++k) {
      const cplx quad = fourier_quadrature([&](double t) { return g_sigma(t, sigma); }, k, 512);
      CHECK(std::abs(quad - fourier_g(sigma, k)) < 1e-12);
    }
  }
  for (int k = 0; k <= 8; ++k) {
    const cplx quad = fourier_quadrature_singular([](double t) { return g_sigma(t, 1.0); }, k, 4096);
    CHECK(std::abs(quad - fourier_g(1.0, k)) < 1e-8);
  }
}

TEST_CASE("Fourier coefficients of f") {
  CHECK(fourier_f(0, 0.3, 0.2) == cplx(0.0));
  for (int k = 0; k <= 8; ++k) CHECK(std::abs(fourier_f_quadrature(k, 0.3, 0.2, 4096) - fourier_f(k, 0.3, 0.2)) < 1e-7);
  CHECK(std::abs(fourier_f_quadrature(0, 0.3, 0.2, 4096)) < 1e-8);

  std::mt19937_64 rng(37);
  for (int draw = 0; draw < 50; ++draw) {
    const auto [a, b] = testutil::random_q(rng, draw);
    CHECK(std::abs(fourier_f(0, a, b)) < 1e-10);
    CHECK(std::abs(fourier_f_quadrature(0, a, b, 1024)) < 1e-8);
    for (int k = 1; k <= 16; ++k) {
      const cplx c = fourier_f(k, a, b);
      CHECK(std::abs(c.imag()) < 1e-14);
      CHECK(c.real() > 0.0);
      if (draw % 2 == 0) CHECK(c.real() >= std::pow(1.0 - std::pow(std::abs(a * b), k / 2.0), 2) / (2.0 * k) - 1e-15);
    }
    if (draw < 5) {
      for (int k = -4; k <= 4; ++k) CHECK(std::abs(fourier_f_quadrature(k, a, b, 2048) - fourier_f(k, a, b)) < 1e-7);
    }
  }
}

TEST_CASE("mean of log|g|") {
  CHECK(log_g_mean(1.5, {0.3, 0.2, {1.0}, {}}) == 0.0);
  CHECK(log_g_mean(2.0, {0.3, 0.2, {1.0}, {3.0}}) == doctest::Approx(std::log(3.0)));
  CHECK_THROWS_AS(log_g_mean(0.5, {0.3, 0.2, {1.0}, {}}), Error);
  std::mt19937_64 rng(41);
  for (int draw = 0; draw < 10; ++draw) {
    const auto mp = testutil::random_admissible(rng, 2, 2, draw);
    const double rho = choose_rho(mp).rho;
    CHECK(std::abs(log_g_mean_quadrature(rho, mp, 4096) - log_g_mean(rho, mp)) < 1e-6);
  }
}

TEST_CASE("sampler: single particle is uniform") {
  LogGasConfig cfg;
  cfg.n = 1;
  cfg.proposal_width = kTwoPi;
  cfg.burn_in = 0;
  cfg.steps = 20000;
  cfg.seed = 3;
  const auto chain = sample_log_gas(cfg);
  REQUIRE(chain.samples.size() == 10000);
  std::vector<double> x;
  for (const auto& s : chain.samples) x.push_back(s[0]);
  CHECK(ks_uniform(x) < 1.628 / std::sqrt(double(x.size())));
}

TEST_CASE("sampler: detailed balance of the acceptance rule") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [a, b] = testutil::random_q(rng, trial);
    std::vector<double> x(6);
    for (auto& t : x) t = angle(rng);
    auto y = x;
    y[trial % 6] = angle(rng);
    const double lhs = std::exp(log_gas_log_density(x, a, b)) * metropolis_acceptance(x, y, a, b);
    const double rhs = std::exp(log_gas_log_density(y, a, b)) * metropolis_acceptance(y, x, a, b);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs));
  }
}

TEST_CASE("sampler: repulsion and energy") {
  LogGasConfig cfg;
  cfg.n = 32;
  cfg.seed = 5;
  cfg.burn_in = 100 * cfg.n;
  cfg.steps = cfg.burn_in + 2LL * cfg.n * 2000;
  const auto chain = sample_log_gas(cfg);
  double sampled = 0.0;
  for (const auto& s : chain.samples) sampled += gap_variance(s);
  sampled /= chain.samples.size();

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double iid = 0.0;
  for (int rep = 0; rep < 2000; ++rep) {
    std::vector<double> x(cfg.n);
    for (auto& t : x) t = angle(rng);
    iid += gap_variance(x);
  }
  iid /= 2000;
  CHECK(sampled < 0.5 * iid);

  // The average energy approaches zero from below like -log(n)/n.
  double previous = 1e300;
  for (int n : {8, 16, 32}) {
    LogGasConfig c = cfg;
    c.n = n;
    c.burn_in = 100 * n;
    c.steps = c.burn_in + 2LL * n * 2000;
    const auto est = estimate_h_limit([](double) { return 0.0; }, c);
    CHECK(est.mean_energy > -(std::log(double(n)) + 1.0) / n);
    CHECK(est.mean_energy < 0.05);
    CHECK(std::abs(est.mean_energy) < previous);
    previous = std::abs(est.mean_energy);
  }
}

TEST_CASE("h-limit estimates") {
  LogGasConfig cfg;
  cfg.n = 48;
  cfg.seed = 11;
  cfg.burn_in = 100 * cfg.n;
  cfg.steps = cfg.burn_in + 2LL * cfg.n * 3000;
  const auto c = estimate_h_limit([](double) { return 0.3; }, cfg);
  CHECK(c.estimate == doctest::Approx(0.3).epsilon(1e-12));
  const auto cosine = estimate_h_limit([](double t) { return std::cos(t); }, cfg);
  CHECK(std::abs(cosine.estimate) < 0.05);
  CHECK(cosine.std_error > 0.0);
  CHECK(cosine.mixing_ok);
  const auto shifted = estimate_h_limit([](double t) { return std::cos(2.0 * t) + 0.5; }, cfg);
  CHECK(std::abs(shifted.estimate - 0.5) < 0.05);

  // Same seed, same result; more chains merge deterministically.
  CHECK(estimate_h_limit([](double t) { return std::cos(t); }, cfg).estimate == cosine.estimate);
  LogGasConfig two = cfg;
  two.chains = 2;
  const auto a = estimate_h_limit([](double t) { return std::cos(t); }, two);
  const auto b = estimate_h_limit([](double t) { return std::cos(t); }, two);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples == 2 * cosine.samples);
}

TEST_CASE("empirical radius") {
  std::vector<cplx> geometric;
  for (int n = 0; n <= 10; ++n) geometric.push_back(std::pow(cplx(0.0, 1.7), n));
  const auto g = empirical_radius(geometric, 2.0);
  for (const auto& row : g.rows) CHECK(row.root == doctest::Approx(1.7).epsilon(1e-14));
  CHECK(g.max_ratio == doctest::Approx(0.85));

  const auto series = a_n_series(0.3, 0.2, 40);
  const auto a = empirical_radius(series, 1.0, 10);
  CHECK(a.max_ratio <= 1.1);

  const MultiplicativeParams mp{cplx(0.3, 0.1), cplx(0.3, -0.1), {1.0}, {}};
  std::vector<cplx> z;
  for (int n = 0; n <= 10; ++n) z.push_back(zn_multiplicative(mp, n));
  const auto r = empirical_radius(z, radius_bound(mp), 10);
  CHECK(r.rows.back().root <= 1.25 * radius_bound(mp));
}
