#pragma once

#include <random>
#include <utility>

#include "nek/nekrasov.hpp"

namespace nek {

double uniform(std::mt19937_64& rng, double lo, double hi);
cplx random_phase(std::mt19937_64& rng, double modulus);

/// (q1, q2) with |q_i| in [0.1, 0.5]; even draws give a conjugate pair,
/// odd draws two reals. Pairs with |q1 - q2| < 0.25 max|q_i| are redrawn.
std::pair<cplx, cplx> random_q(std::mt19937_64& rng, int draw);

/// Admissible parameters with r Coulomb and s matter entries: |u| in [1, 1.2]
/// with phases spread evenly around the circle (jitter of a quarter spacing),
/// |p| in [0.5, 2].
MultiplicativeParams random_admissible(std::mt19937_64& rng, int r, int s, int draw);

/// Gaiotto regime draw: |q| in [1.3, 3], |t| in [0.3, 0.8], |Q| in [0.6, 1.4].
struct GaiottoPoint {
  cplx q, t, Q;
};
GaiottoPoint random_gaiotto(std::mt19937_64& rng);

}  // namespace nek
