#include "nek/virasoro.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nek/qseries.hpp"
#include "parallel.hpp"

namespace nek {

cplx AlgebraParams::kappa() const { return (1.0 - q) * (1.0 - 1.0 / t) / (1.0 - q / t); }

void AlgebraParams::validate() const {
  if (q == 1.0 || t == 1.0) throw Error(ErrorKind::InvalidArgument, "q and t must differ from 1");
  if (q == 0.0 || t == 0.0) throw Error(ErrorKind::ZeroParameter, "q and t must be nonzero");
  if (q == t) throw Error(ErrorKind::InvalidArgument, "q/t must differ from 1");
}

std::vector<cplx> r_coefficients(cplx q, cplx t, int L) {
  return exp_log_series(
      [&](int n) {
        const cplx qn = ipow(q, n);
        const cplx tn = ipow(t, -n);
        return (1.0 - qn) * (1.0 - tn) / (1.0 + qn * tn);
      },
      L);
}

GradedState GradedState::vacuum() { return basis(Partition{}); }

GradedState GradedState::basis(const Partition& lambda) {
  GradedState s;
  s.amplitudes.emplace(lambda, 1.0);
  return s;
}

std::set<int> GradedState::levels() const {
  std::set<int> out;
  for (const auto& [lambda, c] : amplitudes) out.insert(lambda.size());
  return out;
}

cplx GradedState::coefficient(const Partition& lambda) const {
  const auto it = amplitudes.find(lambda);
  return it == amplitudes.end() ? cplx(0.0) : it->second;
}

GradedState& GradedState::add(const GradedState& other, cplx scale) {
  for (const auto& [lambda, c] : other.amplitudes) amplitudes[lambda] += scale * c;
  return *this;
}

VermaModule::VermaModule(const AlgebraParams& ap, int level_cap, int l_sum_multiplier)
    : ap_(ap), kappa_(ap.kappa()), level_cap_(level_cap), l_multiplier_(l_sum_multiplier) {
  ap.validate();
  if (level_cap < 0 || l_sum_multiplier < 1) throw Error(ErrorKind::InvalidArgument, "bad engine limits");
}

cplx VermaModule::r(int l) {
  if (l >= static_cast<int>(r_.size())) r_ = r_coefficients(ap_.q, ap_.t, std::max(2 * l, 8));
  return r_[l];
}

GradedState VermaModule::apply(int m, const GradedState& v) {
  GradedState out;
  for (const auto& [lambda, c] : v.amplitudes) out.add(apply_basis(m, lambda), c);
  return out;
}

const GradedState& VermaModule::apply_basis(int m, const Partition& lambda) {
  static const GradedState zero;
  const int level = lambda.size();
  if (m > level) return zero;
  if (level - m > level_cap_) {
    std::ostringstream os;
    os << "level " << level - m << " exceeds the cap " << level_cap_;
    throw Error(ErrorKind::CapExceeded, os.str());
  }
  const auto key = std::make_pair(m, lambda);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!active_.insert(key).second) throw Error(ErrorKind::InvalidArgument, "rewriting did not terminate");

  GradedState result;
  if (lambda.empty()) {
    if (m == 0) {
      result.amplitudes.emplace(Partition{}, ap_.h);
    } else {
      result = GradedState::basis(Partition{-m});  // m < 0 here
    }
  } else {
    const int a1 = -lambda.parts()[0];
    const Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
    if (m <= a1) {
      std::vector<int> parts{-m};
      parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
      result = GradedState::basis(Partition(std::move(parts)));
    } else {
      // T_m T_a1 X = T_a1 T_m X + [T_m, T_a1] X.
      const int rs = rest.size();
      result = apply(a1, apply_basis(m, rest));
      const int L = l_multiplier_ * std::max(rs - a1, rs - m);
      for (int l = 1; l <= L; ++l) {
        const cplx rl = r(l);
        if (a1 + l <= rs) result.add(apply(m - l, apply_basis(a1 + l, rest)), -rl);
        if (m + l <= rs) result.add(apply(a1 - l, apply_basis(m + l, rest)), rl);
      }
      if (m + a1 == 0) {
        const cplx p = ap_.q / ap_.t;
        result.add(GradedState::basis(rest), -kappa_ * (ipow(p, m) - ipow(p, -m)));
      }
    }
  }
  active_.erase(key);
  return memo_.emplace(key, std::move(result)).first->second;
}

GradedState apply_T(int m, const GradedState& v, const AlgebraParams& ap, int level_cap) {
  VermaModule engine(ap, level_cap);
  return engine.apply(m, v);
}

KacMatrix shapovalov_matrix(int n, VermaModule& engine) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "level must be nonnegative");
  KacMatrix K;
  K.level = n;
  K.basis = enumerate_partitions(n);
  const auto d = static_cast<Eigen::Index>(K.basis.size());
  K.entries.resize(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      // S(T_lambda|h>, y) = S(|h>, T_{lambda_l} ... T_{lambda_1} y).
      GradedState y = GradedState::basis(K.basis[j]);
      for (const int part : K.basis[i].parts()) y = engine.apply(part, y);
      K.entries(i, j) = y.coefficient(Partition{});
    }
  }
  return K;
}

KacMatrix shapovalov_matrix(int n, const AlgebraParams& ap, int l_sum_multiplier) {
  VermaModule engine(ap, std::max(n, kDefaultLevelCap), l_sum_multiplier);
  return shapovalov_matrix(n, engine);
}

std::vector<cplx> kac_zeros(int n, cplx q, cplx t) {
  std::vector<cplx> out;
  if (n < 1) return out;
  const cplx sq = std::sqrt(q);
  const cplx st = std::sqrt(t);
  for (int r = 1; r <= n; ++r) {
    if (n % r != 0) continue;
    const int s = n / r;
    const cplx v = ipow(st, r) * ipow(sq, -s) + ipow(st, -r) * ipow(sq, s);
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

double kac_distance(int n, const AlgebraParams& ap) {
  double d = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= n; ++k)
    for (const auto& z : kac_zeros(k, ap.q, ap.t)) d = std::min(d, std::abs(ap.h - z));
  return d;
}

std::map<Partition, cplx> gaiotto_coefficients(int n, VermaModule& engine) {
  const double dist = kac_distance(n, engine.params());
  if (dist < kKacGuard) {
    std::ostringstream os;
    os << "h is within " << dist << " of a Kac determinant zero at level <= " << n;
    throw Error(ErrorKind::SingularKac, os.str());
  }
  const KacMatrix K = shapovalov_matrix(n, engine);
  const auto d = static_cast<Eigen::Index>(K.basis.size());
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d);
  rhs(d - 1) = 1.0;  // (1^n) is last in descending order
  const Eigen::MatrixXcd St = K.entries.transpose();
  const Eigen::FullPivLU<Eigen::MatrixXcd> lu(St);
  if (!lu.isInvertible()) throw Error(ErrorKind::SingularKac, "Kac matrix is numerically singular");
  const Eigen::VectorXcd g = lu.solve(rhs);
  const double residual = (St * g - rhs).norm();
  if (!(residual <= 1e-10 * std::max(1.0, St.norm() * g.norm())))
    throw Error(ErrorKind::SingularKac, "Kac solve residual too large");
  std::map<Partition, cplx> out;
  for (Eigen::Index i = 0; i < d; ++i) out.emplace(K.basis[i], g(i));
  return out;
}

std::map<Partition, cplx> gaiotto_coefficients(int n, const AlgebraParams& ap) {
  VermaModule engine(ap, std::max(n, kDefaultLevelCap));
  return gaiotto_coefficients(n, engine);
}

cplx gaiotto_norm_coefficient(int n, const AlgebraParams& ap) {
  const auto g = gaiotto_coefficients(n, ap);
  return g.at(Partition(std::vector<int>(n, 1)));
}

GradedState gaiotto_vector(const std::map<Partition, cplx>& g) {
  GradedState s;
  for (const auto& [lambda, c] : g) s.amplitudes.emplace(lambda, c);
  return s;
}

double gaiotto_radius(cplx q, cplx t) {
  if (!(std::abs(t) < 1.0 && std::abs(q) > 1.0))
    throw Error(ErrorKind::RegimeViolation, "requires |t| < 1 < |q|");
  return std::sqrt(std::abs(q) / std::abs(t));
}

cplx highest_weight_from_Q(cplx Q) {
  const cplx s = std::sqrt(Q);
  return s + 1.0 / s;
}

std::vector<T0Report> t0_report(int n, const AlgebraParams& ap) {
  VermaModule engine(ap, std::max(n, kDefaultLevelCap));
  std::vector<T0Report> out;
  for (int d = 0; d <= n; ++d) {
    T0Report rep;
    rep.level = d;
    const auto basis = enumerate_partitions(d);
    const GradedState first = engine.apply_basis(0, basis.front());
    rep.first_eigenvalue = first.coefficient(basis.front());
    double dev = 0.0;
    for (const auto& lambda : basis) {
      GradedState image = engine.apply_basis(0, lambda);
      image.add(GradedState::basis(lambda), -rep.first_eigenvalue);
      for (const auto& [mu, c] : image.amplitudes) dev = std::max(dev, std::abs(c));
    }
    rep.deviation = dev;
    rep.scalar = dev <= 1e-10 * std::max(1.0, std::abs(rep.first_eigenvalue));
    out.push_back(rep);
  }
  return out;
}

}  // namespace nek
