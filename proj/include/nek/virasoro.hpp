#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nek/common.hpp"
#include "nek/partitions.hpp"

namespace nek {

struct AlgebraParams {
  cplx q;
  cplx t;
  cplx h;

  /// (1 - q)(1 - 1/t) / (1 - q/t).
  cplx kappa() const;
  /// Throws Error(InvalidArgument) for q = 1, t = 1 or q = t.
  void validate() const;
};

/// r_0..r_L of exp(sum_n (1 - q^n)(1 - t^-n) / (1 + q^n t^-n) x^n / n).
std::vector<cplx> r_coefficients(cplx q, cplx t, int L);

/// Finite combination of basis vectors T_lambda|h>, keyed by lambda.
struct GradedState {
  std::map<Partition, cplx> amplitudes;

  static GradedState vacuum();
  static GradedState basis(const Partition& lambda);
  bool empty() const { return amplitudes.empty(); }
  /// Set of levels |lambda| in the support.
  std::set<int> levels() const;
  cplx coefficient(const Partition& lambda) const;
  GradedState& add(const GradedState& other, cplx scale = 1.0);
};

inline constexpr int kDefaultLevelCap = 6;

/// Rewriting engine for the Verma module M_h. Monomial reductions are
/// memoized per instance, so one engine should serve one (q, t, h).
class VermaModule {
 public:
  explicit VermaModule(const AlgebraParams& ap, int level_cap = kDefaultLevelCap,
                       int l_sum_multiplier = 1);

  const AlgebraParams& params() const { return ap_; }
  int level_cap() const { return level_cap_; }

  /// T_m acting on v. Throws Error(CapExceeded) if a level exceeds the cap.
  GradedState apply(int m, const GradedState& v);
  /// T_m T_lambda |h>.
  const GradedState& apply_basis(int m, const Partition& lambda);

  cplx r(int l);

 private:
  AlgebraParams ap_;
  cplx kappa_;
  int level_cap_;
  int l_multiplier_;
  std::vector<cplx> r_;
  std::map<std::pair<int, Partition>, GradedState> memo_;
  std::set<std::pair<int, Partition>> active_;
};

/// Free-function form with a fresh engine.
GradedState apply_T(int m, const GradedState& v, const AlgebraParams& ap, int level_cap = kDefaultLevelCap);

struct KacMatrix {
  int level = 0;
  std::vector<Partition> basis;  // lexicographically descending
  Eigen::MatrixXcd entries;
};

/// S_{lambda,mu} = S(T_lambda|h>, T_mu|h>) on partitions of n.
KacMatrix shapovalov_matrix(int n, const AlgebraParams& ap, int l_sum_multiplier = 1);
KacMatrix shapovalov_matrix(int n, VermaModule& engine);

/// Zeros h = +-(t^{r/2} q^{-s/2} + t^{-r/2} q^{s/2}) with r s = n.
std::vector<cplx> kac_zeros(int n, cplx q, cplx t);

/// Minimum distance from h to the zeros of levels 1..n; infinity for n = 0.
double kac_distance(int n, const AlgebraParams& ap);

inline constexpr double kKacGuard = 1e-6;

/// Solves sum_lambda g_lambda S_{lambda,mu} = delta_{mu,(1^n)}.
/// Throws Error(SingularKac) within kKacGuard of a zero of levels <= n.
std::map<Partition, cplx> gaiotto_coefficients(int n, const AlgebraParams& ap);
std::map<Partition, cplx> gaiotto_coefficients(int n, VermaModule& engine);

/// g^{(n)}_{(1^n)}, the xi^{2n} coefficient of the Gaiotto norm.
cplx gaiotto_norm_coefficient(int n, const AlgebraParams& ap);

/// The sum over lambda of g_lambda T_lambda|h>.
GradedState gaiotto_vector(const std::map<Partition, cplx>& g);

/// |t|^{-1/2} |q|^{1/2}; requires |t| < 1 < |q|.
double gaiotto_radius(cplx q, cplx t);

/// Highest weight h = Q^{1/2} + Q^{-1/2} (principal root).
cplx highest_weight_from_Q(cplx Q);

struct T0Report {
  int level = 0;
  bool scalar = false;       // T_0 acts as a multiple of the identity
  cplx first_eigenvalue;     // <T_lambda| coefficient for the first basis vector
  double deviation = 0.0;    // max distance from the first eigenvalue times identity
};

/// How T_0 acts on each level d <= n.
std::vector<T0Report> t0_report(int n, const AlgebraParams& ap);

}  // namespace nek
