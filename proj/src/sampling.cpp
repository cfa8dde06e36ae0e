#include "nek/sampling.hpp"

#include <algorithm>
#include <numbers>
#include <tuple>

namespace nek {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx random_phase(std::mt19937_64& rng, double modulus) {
  return std::polar(modulus, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

std::pair<cplx, cplx> random_q(std::mt19937_64& rng, int draw) {
  // Redraw while q1 ~ q2: that is the edge of the grid condition q1 = q2^1.
  for (;;) {
    std::pair<cplx, cplx> q;
    if (draw % 2 == 0) {
      const cplx z = random_phase(rng, uniform(rng, 0.1, 0.5));
      q = {z, std::conj(z)};
    } else {
      q = {uniform(rng, 0.1, 0.5), uniform(rng, 0.1, 0.5)};
    }
    if (std::abs(q.first - q.second) >= 0.25 * std::max(std::abs(q.first), std::abs(q.second))) return q;
  }
}

MultiplicativeParams random_admissible(std::mt19937_64& rng, int r, int s, int draw) {
  MultiplicativeParams mp;
  std::tie(mp.q1, mp.q2) = random_q(rng, draw);
  // Spread phases keep u_a / u_b away from the resonant set q1^x q2^y.
  const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  for (int a = 0; a < r; ++a) {
    const double theta = phase + 2.0 * std::numbers::pi * (a + uniform(rng, -0.25, 0.25)) / r;
    mp.u.push_back(std::polar(uniform(rng, 1.0, 1.2), theta));
  }
  for (int m = 0; m < s; ++m) mp.p.push_back(random_phase(rng, uniform(rng, 0.5, 2.0)));
  return mp;
}

GaiottoPoint random_gaiotto(std::mt19937_64& rng) {
  GaiottoPoint g;
  g.q = random_phase(rng, uniform(rng, 1.3, 3.0));
  g.t = random_phase(rng, uniform(rng, 0.3, 0.8));
  g.Q = random_phase(rng, uniform(rng, 0.6, 1.4));
  return g;
}

}  // namespace nek
