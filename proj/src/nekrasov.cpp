#include "nek/nekrasov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "parallel.hpp"

namespace nek {

namespace {

constexpr double kConjTolerance = 1e-12;
constexpr double kLinearTolerance = 1e-12;

// Partition with its transpose, so arm and leg are O(1).
struct Diagram {
  Partition Y;
  Partition T;

  explicit Diagram(const Partition& p) : Y(p), T(p.transpose()) {}
  int arm(int x, int y) const { return Y.row(x) - y; }
  int leg(int x, int y) const { return T.row(y) - x; }
};

std::vector<Diagram> diagrams(const MultiPartition& V) {
  std::vector<Diagram> d;
  d.reserve(V.components.size());
  for (const auto& Y : V.components) d.emplace_back(Y);
  return d;
}

void require_rank(const std::vector<cplx>& u, const MultiPartition& V) {
  if (static_cast<int>(u.size()) != V.rank())
    throw Error(ErrorKind::InvalidArgument, "tuple rank does not match parameter count");
}

cplx checked_factor(cplx x) {
  const cplx f = 1.0 - x;
  if (near_zero_factor(f, x)) throw Error(ErrorKind::DegenerateFactor, "vanishing factor 1 - x");
  return f;
}

bool approx_equal(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

cplx factor_product(cplx q1, cplx q2, cplx ratio, const Diagram& A, const Diagram& B,
                    Form form) {
  cplx prod = 1.0;
  for (int x = 1; x <= A.Y.length(); ++x) {
    for (int y = 1; y <= A.Y.row(x); ++y) {
      const cplx mono = form == Form::N
                            ? ipow(q1, A.leg(x, y) + 1) * ipow(q2, -B.arm(x, y))
                            : ipow(q1, -B.leg(x, y)) * ipow(q2, A.arm(x, y) + 1);
      prod *= checked_factor(ratio * mono);
    }
  }
  for (int x = 1; x <= B.Y.length(); ++x) {
    for (int y = 1; y <= B.Y.row(x); ++y) {
      const cplx mono = form == Form::N
                            ? ipow(q1, -B.leg(x, y)) * ipow(q2, A.arm(x, y) + 1)
                            : ipow(q1, A.leg(x, y) + 1) * ipow(q2, -B.arm(x, y));
      prod *= checked_factor(ratio * mono);
    }
  }
  return prod;
}

cplx numerator_from_diagrams(const MultiplicativeParams& mp, const MultiPartition& V) {
  cplx num = 1.0;
  if (mp.p.empty()) return num;
  for (int alpha = 0; alpha < V.rank(); ++alpha) {
    const Partition& Y = V.components[alpha];
    for (int x = 1; x <= Y.length(); ++x) {
      for (int y = 1; y <= Y.row(x); ++y) {
        const cplx z = mp.u[alpha] * ipow(mp.q1, x - 1) * ipow(mp.q2, y - 1);
        for (const cplx& pm : mp.p) num *= (z - pm);
      }
    }
  }
  return num;
}

cplx term_from_diagrams(const MultiplicativeParams& mp, const MultiPartition& V,
                        const std::vector<Diagram>& d, Form form) {
  cplx denom = 1.0;
  const int r = mp.rank();
  for (int alpha = 0; alpha < r; ++alpha)
    for (int beta = 0; beta < r; ++beta)
      denom *= factor_product(mp.q1, mp.q2, mp.u[alpha] / mp.u[beta], d[alpha], d[beta], form);
  return numerator_from_diagrams(mp, V) / denom;
}

[[noreturn]] void throw_grid(const MultiplicativeParams& mp, int n, const MultiPartition& V) {
  std::ostringstream os;
  os << "fixed-point term " << V.to_string() << " degenerates";
  const auto violations = check_grid(mp, n);
  if (!violations.empty()) {
    std::vector<std::string> seen;
    for (const auto& v : violations) {
      const std::string d = v.describe();
      if (std::find(seen.begin(), seen.end(), d) == seen.end()) seen.push_back(d);
    }
    os << "; grid violations:";
    for (std::size_t i = 0; i < seen.size(); ++i) os << (i ? ", " : " ") << seen[i];
  }
  throw Error(ErrorKind::GridViolation, os.str());
}

// Reduces a linear weight modulo 2 pi i / lambda and reports whether it
// vanishes relative to the parameter scale.
bool linear_weight_vanishes(cplx weight, double lambda, double scale) {
  const double period = 2.0 * std::numbers::pi / lambda;
  const double k = std::round(weight.imag() / period);
  const cplx reduced = weight - cplx(0.0, k * period);
  return std::abs(reduced) <= kGridTolerance * scale;
}

double exponential_scale(const ExponentialParams& ep) {
  double s = 1.0 + std::abs(ep.eps1) + std::abs(ep.eps2);
  for (const auto& a : ep.a) s = std::max(s, 1.0 + std::abs(a));
  return s;
}

}  // namespace

MultiplicativeParams to_multiplicative(const ExponentialParams& ep) {
  MultiplicativeParams mp;
  mp.q1 = std::exp(-ep.lambda * ep.eps1);
  mp.q2 = std::exp(-ep.lambda * ep.eps2);
  for (const auto& a : ep.a) mp.u.push_back(std::exp(-ep.lambda * a));
  for (const auto& w : ep.w) mp.p.push_back(std::exp(ep.lambda * w));
  return mp;
}

void check_admissible(const MultiplicativeParams& mp) {
  std::ostringstream os;
  if (mp.u.empty()) throw Error(ErrorKind::Inadmissible, "at least one Coulomb parameter u is required");
  for (const cplx q : {mp.q1, mp.q2}) {
    if (!(std::abs(q) < 1.0)) {
      os << "|q| = " << std::abs(q) << " is not < 1";
      throw Error(ErrorKind::Inadmissible, os.str());
    }
  }
  const bool conjugate = std::abs(mp.q1 - std::conj(mp.q2)) <= kConjTolerance * (1.0 + std::abs(mp.q1));
  const bool both_real = std::abs(mp.q1.imag()) <= kConjTolerance && std::abs(mp.q2.imag()) <= kConjTolerance &&
                         mp.q1.real() > 0.0 && mp.q2.real() > 0.0;
  if (!conjugate && !both_real)
    throw Error(ErrorKind::Inadmissible, "q1, q2 must be complex conjugate or both real in (0,1)");
  double umax = 0.0;
  double umin = std::numeric_limits<double>::infinity();
  for (const auto& u : mp.u) {
    umax = std::max(umax, std::abs(u));
    umin = std::min(umin, std::abs(u));
  }
  for (const cplx q : {mp.q1, mp.q2}) {
    if (!(std::abs(q) * umax < umin)) {
      os << "violated |q_i| max|u| < min|u|: " << std::abs(q) << " * " << umax << " >= " << umin;
      throw Error(ErrorKind::Inadmissible, os.str());
    }
  }
}

void check_admissible(const ExponentialParams& ep) {
  std::ostringstream os;
  if (!(ep.lambda > 0.0)) throw Error(ErrorKind::Inadmissible, "lambda must be positive");
  if (ep.a.empty()) throw Error(ErrorKind::Inadmissible, "at least one Coulomb parameter a is required");
  if (!(ep.eps1.real() > 0.0) || !(ep.eps2.real() > 0.0))
    throw Error(ErrorKind::Inadmissible, "Re eps_i must be positive");
  const bool conjugate = std::abs(ep.eps1 - std::conj(ep.eps2)) <= kConjTolerance * (1.0 + std::abs(ep.eps1));
  const bool both_real = ep.eps1.imag() == 0.0 && ep.eps2.imag() == 0.0;
  if (!conjugate && !both_real)
    throw Error(ErrorKind::Inadmissible, "eps1, eps2 must be complex conjugate or both real");
  double amax = -std::numeric_limits<double>::infinity();
  double amin = std::numeric_limits<double>::infinity();
  for (const auto& a : ep.a) {
    amax = std::max(amax, a.real());
    amin = std::min(amin, a.real());
  }
  for (const cplx e : {ep.eps1, ep.eps2}) {
    if (!(amax - amin < e.real())) {
      os << "violated max Re a - min Re a < Re eps_i: " << amax - amin << " >= " << e.real();
      throw Error(ErrorKind::Inadmissible, os.str());
    }
  }
}

std::string GridViolation::describe() const {
  std::ostringstream os;
  switch (family) {
    case Family::Coulomb:
      os << "u_" << alpha + 1 << "/u_" << beta + 1 << " = q1^" << x << " q2^" << y;
      break;
    case Family::ShiftQ2:
      os << "q1^" << x << " = q2^" << y + 1;
      break;
    case Family::ShiftQ1:
      os << "q1^" << x + 1 << " = q2^" << y;
      break;
  }
  return os.str();
}

std::vector<GridViolation> check_grid(const MultiplicativeParams& mp, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  std::vector<GridViolation> out;
  const int r = mp.rank();
  for (int alpha = 0; alpha < r; ++alpha) {
    for (int beta = 0; beta < r; ++beta) {
      if (alpha == beta) continue;
      const cplx ratio = mp.u[alpha] / mp.u[beta];
      for (int x = -n; x <= n; ++x)
        for (int y = -n; y <= n; ++y)
          if (approx_equal(ratio, ipow(mp.q1, x) * ipow(mp.q2, y), kGridTolerance))
            out.push_back({GridViolation::Family::Coulomb, alpha, beta, x, y});
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (approx_equal(ipow(mp.q1, x), ipow(mp.q2, y + 1), kGridTolerance))
        out.push_back({GridViolation::Family::ShiftQ2, -1, -1, x, y});
      if (approx_equal(ipow(mp.q1, x + 1), ipow(mp.q2, y), kGridTolerance))
        out.push_back({GridViolation::Family::ShiftQ1, -1, -1, x, y});
    }
  }
  return out;
}

cplx n_factor_N(cplx q1, cplx q2, const std::vector<cplx>& u, const MultiPartition& V,
                int alpha, int beta) {
  require_rank(u, V);
  return factor_product(q1, q2, u.at(alpha) / u.at(beta), Diagram(V.components[alpha]),
                        Diagram(V.components[beta]), Form::N);
}

cplx n_factor_M(cplx q1, cplx q2, const std::vector<cplx>& u, const MultiPartition& V,
                int alpha, int beta) {
  require_rank(u, V);
  return factor_product(q1, q2, u.at(alpha) / u.at(beta), Diagram(V.components[alpha]),
                        Diagram(V.components[beta]), Form::M);
}

cplx numerator_kappa(const MultiplicativeParams& mp, const MultiPartition& V) {
  require_rank(mp.u, V);
  return numerator_from_diagrams(mp, V);
}

cplx fixed_point_term(const MultiplicativeParams& mp, const MultiPartition& V, Form form) {
  require_rank(mp.u, V);
  return term_from_diagrams(mp, V, diagrams(V), form);
}

cplx zn_multiplicative(const MultiplicativeParams& mp, int n, Form form) {
  if (mp.u.empty()) throw Error(ErrorKind::InvalidArgument, "at least one Coulomb parameter u is required");
  const auto tuples = enumerate_tuples(mp.rank(), n);
  const auto terms = detail::parallel_map<cplx>(tuples.size(), [&](std::size_t i) {
    try {
      return term_from_diagrams(mp, tuples[i], diagrams(tuples[i]), form);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateFactor) throw_grid(mp, n, tuples[i]);
      throw;
    }
  });
  cplx sum = 0.0;
  for (const auto& t : terms) sum += t;
  return sum;
}

cplx zn_exponential(const ExponentialParams& ep, int n) {
  if (ep.a.empty()) throw Error(ErrorKind::InvalidArgument, "at least one Coulomb parameter a is required");
  const double lambda = ep.lambda;
  const double scale = exponential_scale(ep);
  const int r = ep.rank();
  const auto tuples = enumerate_tuples(r, n);

  auto one_minus_exp = [&](cplx weight, const MultiPartition& V) {
    if (linear_weight_vanishes(weight, lambda, scale)) throw_grid(to_multiplicative(ep), n, V);
    return -expm1(-lambda * weight);
  };

  const auto terms = detail::parallel_map<cplx>(tuples.size(), [&](std::size_t i) {
    const MultiPartition& V = tuples[i];
    const auto d = diagrams(V);
    cplx num = 1.0;
    for (int alpha = 0; alpha < r; ++alpha) {
      for (const Box s : V.components[alpha].boxes()) {
        const cplx weight = ep.a[alpha] + double(s.x - 1) * ep.eps1 + double(s.y - 1) * ep.eps2;
        for (const auto& w : ep.w) num *= std::exp(-lambda * weight) - std::exp(lambda * w);
      }
    }
    cplx den = 1.0;
    for (int alpha = 0; alpha < r; ++alpha) {
      for (int beta = 0; beta < r; ++beta) {
        const Diagram& A = d[alpha];
        const Diagram& B = d[beta];
        const cplx shift = ep.a[alpha] - ep.a[beta];
        for (const Box s : A.Y.boxes()) {
          const cplx weight = double(-B.leg(s.x, s.y)) * ep.eps1 + double(A.arm(s.x, s.y) + 1) * ep.eps2 + shift;
          den *= one_minus_exp(weight, V);
        }
        for (const Box t : B.Y.boxes()) {
          const cplx weight = double(A.leg(t.x, t.y) + 1) * ep.eps1 - double(B.arm(t.x, t.y)) * ep.eps2 + shift;
          den *= one_minus_exp(weight, V);
        }
      }
    }
    return num / den;
  });
  cplx sum = 0.0;
  for (const auto& t : terms) sum += t;
  return sum;
}

cplx instanton_prefactor(const ExponentialParams& ep) {
  const int r = ep.rank();
  const int s = ep.flavours();
  return std::pow(ep.lambda, 2 * r - s) * std::exp(-double(r) * ep.lambda * (ep.eps1 + ep.eps2) / 2.0);
}

namespace {
double radius_formula(const MultiplicativeParams& mp) {
  double umax = 0.0;
  for (const auto& u : mp.u) umax = std::max(umax, std::abs(u));
  double bound = 1.0;
  for (const auto& p : mp.p) bound *= std::max(std::abs(p), umax);
  return bound;
}
}  // namespace

PartialSum partition_function_partial(const ExponentialParams& ep, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "n_max must be nonnegative");
  const cplx z = ep.instanton * instanton_prefactor(ep);
  const double bound = radius_formula(to_multiplicative(ep));
  PartialSum out;
  out.value = 0.0;
  cplx zpow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    const cplx zn = n == 0 ? cplx(1.0) : zn_exponential(ep, n);
    out.value += zpow * zn;
    out.rows.push_back({n, zn, n == 0 ? 1.0 : std::pow(std::abs(zn), 1.0 / n), bound});
    zpow *= z;
  }
  return out;
}

cplx zn_sinh_intro(const ExponentialParams& ep, int n) {
  if (!ep.w.empty()) throw Error(ErrorKind::InvalidArgument, "the sinh-product form is for pure gauge theory (no w)");
  if (ep.a.empty()) throw Error(ErrorKind::InvalidArgument, "at least one Coulomb parameter a is required");
  const int r = ep.rank();
  const double half = ep.lambda / 2.0;
  const cplx eps = ep.eps1 + ep.eps2;
  const auto tuples = enumerate_tuples(r, n);
  const auto terms = detail::parallel_map<cplx>(tuples.size(), [&](std::size_t i) {
    const auto d = diagrams(tuples[i]);
    cplx term = 1.0;
    for (int alpha = 0; alpha < r; ++alpha) {
      for (int beta = 0; beta < r; ++beta) {
        for (const Box b : d[alpha].Y.boxes()) {
          const cplx E = ep.a[alpha] - ep.a[beta] - double(d[beta].leg(b.x, b.y)) * ep.eps1 +
                         double(d[alpha].arm(b.x, b.y) + 1) * ep.eps2;
          const cplx s1 = std::sinh(half * E);
          const cplx s2 = std::sinh(half * (eps - E));
          if (std::abs(s1) <= kLinearTolerance * half || std::abs(s2) <= kLinearTolerance * half)
            throw Error(ErrorKind::GridViolation, "vanishing sinh factor in " + tuples[i].to_string());
          term *= (half * half) / (s1 * s2);
        }
      }
    }
    return term;
  });
  cplx sum = 0.0;
  for (const auto& t : terms) sum += t;
  return sum;
}

cplx zn_homological(cplx eps1, cplx eps2, const std::vector<cplx>& a, int n) {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "at least one Coulomb parameter a is required");
  const int r = static_cast<int>(a.size());
  double scale = std::abs(eps1) + std::abs(eps2);
  for (const auto& x : a) scale = std::max(scale, std::abs(x));
  const auto tuples = enumerate_tuples(r, n);
  auto checked = [&](cplx f, const MultiPartition& V) {
    if (std::abs(f) <= kLinearTolerance * scale)
      throw Error(ErrorKind::DegenerateFactor, "vanishing weight in " + V.to_string());
    return f;
  };
  const auto terms = detail::parallel_map<cplx>(tuples.size(), [&](std::size_t i) {
    const MultiPartition& V = tuples[i];
    const auto d = diagrams(V);
    cplx den = 1.0;
    for (int alpha = 0; alpha < r; ++alpha) {
      for (int beta = 0; beta < r; ++beta) {
        const Diagram& A = d[alpha];
        const Diagram& B = d[beta];
        const cplx shift = a[alpha] - a[beta];
        for (const Box s : A.Y.boxes())
          den *= checked(double(-B.leg(s.x, s.y)) * eps1 + double(A.arm(s.x, s.y) + 1) * eps2 + shift, V);
        for (const Box t : B.Y.boxes())
          den *= checked(double(A.leg(t.x, t.y) + 1) * eps1 - double(B.arm(t.x, t.y)) * eps2 + shift, V);
      }
    }
    return 1.0 / den;
  });
  cplx sum = 0.0;
  for (const auto& t : terms) sum += t;
  return sum;
}

cplx gaiotto_pair_factor(cplx q, cplx t, const Partition& nu, const Partition& mu, cplx Q) {
  const Diagram Nu(nu);
  const Diagram Mu(mu);
  cplx prod = 1.0;
  for (const Box b : mu.boxes())
    prod *= checked_factor(Q * ipow(q, Nu.arm(b.x, b.y)) * ipow(t, Mu.leg(b.x, b.y) + 1));
  for (const Box b : nu.boxes())
    prod *= checked_factor(Q * ipow(q, -Mu.arm(b.x, b.y) - 1) * ipow(t, -Nu.leg(b.x, b.y)));
  return prod;
}

cplx zn_gaiotto(cplx q, cplx t, cplx Q, int n) {
  const auto pairs = enumerate_tuples(2, n);
  const auto terms = detail::parallel_map<cplx>(pairs.size(), [&](std::size_t i) {
    const Partition& nu = pairs[i].components[0];
    const Partition& mu = pairs[i].components[1];
    try {
      return 1.0 / (gaiotto_pair_factor(q, t, nu, mu, Q) * gaiotto_pair_factor(q, t, mu, nu, 1.0 / Q) *
                    gaiotto_pair_factor(q, t, nu, nu, 1.0) * gaiotto_pair_factor(q, t, mu, mu, 1.0));
    } catch (const Error& e) {
      throw Error(ErrorKind::DegenerateFactor, std::string(e.what()) + " in pair " + pairs[i].to_string());
    }
  });
  cplx sum = 0.0;
  for (const auto& x : terms) sum += x;
  return sum;
}

cplx gaiotto_norm_from_pairs(cplx q, cplx t, cplx Q, int n) {
  const auto direct = [&](cplx tt) { return ipow(tt / q, n) * zn_gaiotto(q, tt, Q, n); };
  try {
    return direct(t);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateFactor) throw;
  }
  constexpr int kNodes = 16;
  const auto circle = [&](double radius) {
    cplx s = 0.0;
    for (int k = 0; k < kNodes; ++k)
      s += direct(t * (1.0 + std::polar(radius, 2.0 * std::numbers::pi * (k + 0.5) / kNodes)));
    return s / static_cast<double>(kNodes);
  };
  const cplx wide = circle(0.05);
  const cplx narrow = circle(0.025);
  if (relative_difference(wide, narrow) > 1e-6)
    throw Error(ErrorKind::DegenerateFactor, "pair sum has a pole at this t");
  return wide;
}

cplx z_bifundamental(cplx b, cplx alpha, cplx P_prime, const MultiPartition& Y_prime, cplx P,
                     const MultiPartition& Y) {
  if (Y.rank() != 2 || Y_prime.rank() != 2)
    throw Error(ErrorKind::InvalidArgument, "bifundamental factor needs pairs of partitions");
  const cplx Pv[2] = {P, -P};
  const cplx Ppv[2] = {P_prime, -P_prime};
  const cplx binv = 1.0 / b;
  const auto d = diagrams(Y);
  const auto dp = diagrams(Y_prime);
  double scale = 1.0 + std::abs(b) + std::abs(binv) + std::abs(P) + std::abs(P_prime) + std::abs(alpha);
  cplx prod = 1.0;
  auto checked = [&](cplx f) {
    if (std::abs(f) <= kLinearTolerance * scale)
      throw Error(ErrorKind::DegenerateFactor, "vanishing bifundamental weight");
    return f;
  };
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (const Box s : d[i].Y.boxes())
        prod *= checked(Ppv[j] - Pv[i] + b * double(dp[j].leg(s.x, s.y) + 1) -
                        binv * double(d[i].arm(s.x, s.y)) - alpha);
      for (const Box t : dp[j].Y.boxes())
        prod *= checked(Ppv[j] - Pv[i] - b * double(d[i].leg(t.x, t.y)) +
                        binv * double(dp[j].arm(t.x, t.y) + 1) - alpha);
    }
  }
  return prod;
}

std::vector<cplx> conformal_shifts(const ConformalParams& cp) {
  const cplx bb = cp.b + 1.0 / cp.b;
  return {cp.alpha_r + cp.P_r, cp.alpha_r - cp.P_r, -cp.alpha_l + bb + cp.P_l, -cp.alpha_l + bb - cp.P_l};
}

cplx conformal_numerator_product(const ConformalParams& cp, const MultiPartition& Y) {
  if (Y.rank() != 2) throw Error(ErrorKind::InvalidArgument, "conformal blocks use pairs of partitions");
  const auto v = conformal_shifts(cp);
  const cplx Pm[2] = {cp.P_m, -cp.P_m};
  const cplx binv = 1.0 / cp.b;
  cplx prod = 1.0;
  for (int i = 0; i < 2; ++i)
    for (const Box s : Y.components[i].boxes())
      for (const auto& vm : v) prod *= Pm[i] + cp.b * double(s.x - 1) + binv * double(s.y - 1) + vm;
  return prod;
}

cplx conformal_block_Fn(const ConformalParams& cp, int n) {
  const MultiPartition empty{{Partition{}, Partition{}}};
  const auto pairs = enumerate_tuples(2, n);
  const auto terms = detail::parallel_map<cplx>(pairs.size(), [&](std::size_t i) {
    const MultiPartition& Y = pairs[i];
    const cplx right = z_bifundamental(cp.b, cp.alpha_r, cp.P_r, empty, cp.P_m, Y);
    const cplx left = z_bifundamental(cp.b, cp.alpha_l, cp.P_m, Y, cp.P_l, empty);
    const cplx diag = z_bifundamental(cp.b, 0.0, cp.P_m, Y, cp.P_m, Y);
    return right * left / diag;
  });
  cplx sum = 0.0;
  for (const auto& x : terms) sum += x;
  return sum;
}

double radius_bound(const MultiplicativeParams& mp) {
  check_admissible(mp);
  return radius_formula(mp);
}

double domain_bound(const ExponentialParams& ep) {
  check_admissible(ep);
  const int r = ep.rank();
  const int s = ep.flavours();
  double exponent = double(r) * (ep.eps1 + ep.eps2).real() / 2.0;
  for (const auto& w : ep.w) {
    double m = -w.real();
    for (const auto& a : ep.a) m = std::min(m, a.real());
    exponent += m;
  }
  return std::pow(ep.lambda, s - 2 * r) * std::exp(ep.lambda * exponent);
}

MultiplicativeParams invert_params(const MultiplicativeParams& mp) {
  if (!mp.p.empty()) throw Error(ErrorKind::InvalidArgument, "inversion is defined for p empty");
  if (mp.q1 == 0.0 || mp.q2 == 0.0) throw Error(ErrorKind::ZeroParameter, "q1 and q2 must be nonzero");
  MultiplicativeParams out;
  out.q1 = 1.0 / mp.q1;
  out.q2 = 1.0 / mp.q2;
  for (const auto& u : mp.u) {
    if (u == 0.0) throw Error(ErrorKind::ZeroParameter, "u entries must be nonzero");
    out.u.push_back(1.0 / u);
  }
  return out;
}

}  // namespace nek
