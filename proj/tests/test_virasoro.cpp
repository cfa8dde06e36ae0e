#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "nek/nekrasov.hpp"
#include "nek/virasoro.hpp"

using namespace nek;
using testutil::close;

namespace {

// exp of a truncated power series by summing S^k / k! term by term.
std::vector<cplx> naive_exp(const std::vector<cplx>& s) {
  const std::size_t L = s.size() - 1;
  std::vector<cplx> out(L + 1), power(L + 1);
  power[0] = 1.0;
  double factorial = 1.0;
  for (std::size_t k = 0; k <= L; ++k) {
    if (k > 0) {
      std::vector<cplx> next(L + 1);
      for (std::size_t i = 0; i <= L; ++i)
        for (std::size_t j = 1; i + j <= L; ++j) next[i + j] += power[i] * s[j];
      power = next;
      factorial *= static_cast<double>(k);
    }
    for (std::size_t i = 0; i <= L; ++i) out[i] += power[i] / factorial;
  }
  return out;
}

using nek::random_gaiotto;

AlgebraParams random_algebra(std::mt19937_64& rng) {
  const auto g = random_gaiotto(rng);
  return {g.q, g.t, testutil::random_phase(rng, testutil::uniform(rng, 0.5, 3.0))};
}

GradedState random_level_state(std::mt19937_64& rng, int d) {
  GradedState s;
  for (const auto& lambda : enumerate_partitions(d))
    s.amplitudes.emplace(lambda, cplx(testutil::uniform(rng, -1, 1), testutil::uniform(rng, -1, 1)));
  return s;
}

}  // namespace

TEST_CASE("r coefficients") {
  const cplx q = 0.4, t = 0.6;
  const auto r = r_coefficients(q, t, 6);
  CHECK(r[0] == cplx(1.0));
  CHECK(close(r[1], (1.0 - q) * (1.0 - 1.0 / t) / (1.0 + q / t), 1e-14));
  std::vector<cplx> s(7);
  for (int n = 1; n <= 6; ++n) {
    const cplx qn = std::pow(q, n), tn = std::pow(t, -n);
    s[n] = (1.0 - qn) * (1.0 - tn) / (1.0 + qn * tn) / static_cast<double>(n);
  }
  const auto oracle = naive_exp(s);
  for (int l = 0; l <= 6; ++l) CHECK(close(r[l], oracle[l], 1e-12));
}

TEST_CASE("T action on low levels") {
  const AlgebraParams ap{cplx(2.0, 0.3), cplx(0.5, -0.1), cplx(0.7, 0.2)};
  VermaModule engine(ap);
  CHECK(engine.apply(1, GradedState::vacuum()).empty());
  CHECK(engine.apply(3, GradedState::vacuum()).empty());
  const auto h0 = engine.apply(0, GradedState::vacuum());
  CHECK(h0.amplitudes.size() == 1);
  CHECK(h0.coefficient(Partition{}) == ap.h);

  const auto one = engine.apply(1, GradedState::basis(Partition{1}));
  const cplx r1 = r_coefficients(ap.q, ap.t, 1)[1];
  const cplx p = ap.q / ap.t;
  CHECK(one.amplitudes.size() == 1);
  CHECK(close(one.coefficient(Partition{}), -r1 * ap.h * ap.h - ap.kappa() * (p - 1.0 / p), 1e-14));

  // T_{-1} T_{-2}|h> is not in canonical order and must be rewritten.
  const auto reordered = engine.apply(-1, GradedState::basis(Partition{2}));
  CHECK(reordered.levels() == std::set<int>{3});
  const auto r = r_coefficients(ap.q, ap.t, 2);
  CHECK(reordered.amplitudes.size() == 2);
  CHECK(close(reordered.coefficient(Partition{2, 1}), 1.0 - r[1], 1e-14));
  CHECK(close(reordered.coefficient(Partition{3}), ap.h * (r[1] - r[2]), 1e-14));

  VermaModule capped(ap, 2);
  CHECK_THROWS_AS(capped.apply(-3, GradedState::vacuum()), Error);
  try {
    capped.apply(-1, GradedState::basis(Partition{2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("grading") {
  std::mt19937_64 rng(11);
  const auto ap = random_algebra(rng);
  VermaModule engine(ap, 8);
  for (int d = 0; d <= 4; ++d) {
    const auto v = random_level_state(rng, d);
    for (int m = -4; m <= 4; ++m) {
      const auto w = engine.apply(m, v);
      if (m > d) {
        CHECK(w.empty());
      } else if (!w.empty()) {
        CHECK(w.levels() == std::set<int>{d - m});
      }
    }
  }
}

TEST_CASE("Shapovalov matrix") {
  const AlgebraParams ap{2.0, 0.5, 0.7};
  const auto K0 = shapovalov_matrix(0, ap);
  CHECK(K0.entries.rows() == 1);
  CHECK(K0.entries(0, 0) == cplx(1.0));
  const auto K3 = shapovalov_matrix(3, ap);
  REQUIRE(K3.basis.size() == 3);
  CHECK(K3.basis[0] == Partition{3});
  CHECK(K3.basis[2] == Partition{1, 1, 1});

  std::mt19937_64 rng(5);
  for (int draw = 0; draw < 20; ++draw) {
    const auto a = random_algebra(rng);
    VermaModule engine(a);
    for (int n = 1; n <= 4; ++n) {
      const auto K = shapovalov_matrix(n, engine);
      const double asym = (K.entries - K.entries.transpose()).norm();
      CHECK(asym <= 1e-10 * K.entries.norm());
    }
  }

  // Extra l-sum terms beyond the level-forced bound contribute nothing.
  for (int n = 1; n <= 4; ++n) {
    const auto a = shapovalov_matrix(n, ap, 1);
    const auto b = shapovalov_matrix(n, ap, 2);
    CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("Kac zeros") {
  const cplx q(2.0, 0.4), t(0.5, 0.1);
  const auto z1 = kac_zeros(1, q, t);
  REQUIRE(z1.size() == 2);
  CHECK(close(z1[0], std::sqrt(t) / std::sqrt(q) + std::sqrt(q) / std::sqrt(t), 1e-14));
  CHECK(kac_zeros(2, q, t).size() == 4);
  CHECK(kac_zeros(3, q, t).size() == 4);

  for (int n = 1; n <= 3; ++n) {
    for (const cplx z : kac_zeros(n, q, t)) {
      const auto at = shapovalov_matrix(n, AlgebraParams{q, t, z}).entries;
      const auto off = shapovalov_matrix(n, AlgebraParams{q, t, z + 0.1}).entries;
      // Hadamard bound of the nearby matrix; the matrix at a level-1 zero is 0.
      double scale = 1.0;
      for (Eigen::Index j = 0; j < off.cols(); ++j) scale *= off.col(j).norm();
      CHECK(std::abs(at.determinant()) < 1e-6 * scale);
      CHECK(std::abs(off.determinant()) >= 1e3 * 1e-6 * scale);
    }
  }

  // Scan h along a line through a level-1 zero: |det| is smallest there.
  const cplx z = z1[1];
  double best = 1e300, best_h = 0.0;
  for (int k = -50; k <= 50; ++k) {
    const double dh = 0.01 * k;
    const double det = std::abs(shapovalov_matrix(1, AlgebraParams{q, t, z + dh}).entries(0, 0));
    if (det < best) best = det, best_h = dh;
  }
  CHECK(best_h == 0.0);
  CHECK(best < 1e-8);
}

TEST_CASE("Gaiotto coefficients") {
  const AlgebraParams ap{2.0, 0.5, highest_weight_from_Q(std::polar(0.9, 0.3))};
  const auto g0 = gaiotto_coefficients(0, ap);
  CHECK(g0.size() == 1);
  CHECK(g0.at(Partition{}) == cplx(1.0));
  const auto K1 = shapovalov_matrix(1, ap);
  CHECK(close(gaiotto_norm_coefficient(1, ap), 1.0 / K1.entries(0, 0), 1e-14));
  CHECK(gaiotto_norm_coefficient(0, ap) == cplx(1.0));

  VermaModule engine(ap);
  for (int n = 1; n <= 3; ++n) {
    const auto Gn = gaiotto_vector(gaiotto_coefficients(n, engine));
    const auto Gm = gaiotto_vector(gaiotto_coefficients(n - 1, engine));
    // The Gaiotto state is a Whittaker vector: T_1 lowers, T_k (k >= 2) kills.
    auto diff = engine.apply(1, Gn);
    diff.add(Gm, -1.0);
    for (const auto& [lambda, c] : diff.amplitudes) CHECK(std::abs(c) < 1e-9);
    for (int k = 2; k <= n; ++k)
      for (const auto& [lambda, c] : engine.apply(k, Gn).amplitudes) CHECK(std::abs(c) < 1e-9);
  }

  AlgebraParams singular = ap;
  singular.h = kac_zeros(2, ap.q, ap.t)[0];
  CHECK(kac_distance(2, singular) < 1e-12);
  try {
    gaiotto_coefficients(2, singular);
    FAIL("expected a singular Kac matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularKac);
  }
  CHECK(std::isinf(kac_distance(0, ap)));
}

TEST_CASE("norm coefficients against the pair sum") {
  const cplx q = 2.0, t = 0.5, Q = std::polar(0.9, 0.3);
  const AlgebraParams ap{q, t, highest_weight_from_Q(Q)};
  // q t = 1 makes individual pair terms singular, so this also exercises
  // the removable-singularity path of the pair sum.
  CHECK_THROWS_AS(zn_gaiotto(q, t, Q, 2), Error);
  for (int n = 1; n <= 3; ++n)
    CHECK(close(gaiotto_norm_coefficient(n, ap), gaiotto_norm_from_pairs(q, t, Q, n), 1e-8));

  std::mt19937_64 rng(23);
  for (int draw = 0; draw < 5; ++draw) {
    const auto g = random_gaiotto(rng);
    const AlgebraParams a{g.q, g.t, highest_weight_from_Q(g.Q)};
    for (int n = 1; n <= 3; ++n) {
      const cplx direct = std::pow(g.t / g.q, n) * zn_gaiotto(g.q, g.t, g.Q, n);
      CHECK(close(gaiotto_norm_coefficient(n, a), direct, 1e-8));
    }
  }
}

TEST_CASE("gaiotto_radius") {
  CHECK(gaiotto_radius(2.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(gaiotto_radius(cplx(0.0, 4.0), 0.25) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(gaiotto_radius(0.5, 0.5), Error);
  CHECK_THROWS_AS(gaiotto_radius(2.0, 1.5), Error);
}

TEST_CASE("T_0 on graded pieces") {
  const AlgebraParams ap{cplx(2.0, 0.3), cplx(0.5, -0.1), cplx(0.7, 0.2)};
  const auto rep = t0_report(2, ap);
  REQUIRE(rep.size() == 3);
  CHECK(rep[0].scalar);
  CHECK(rep[0].first_eigenvalue == ap.h);
  const cplx r1 = r_coefficients(ap.q, ap.t, 1)[1];
  CHECK(close(rep[1].first_eigenvalue, ap.h * (1.0 - r1), 1e-12));
}
