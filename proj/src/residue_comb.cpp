#include "nek/residue_comb.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"

namespace nek {

void StripContext::validate() const {
  if (J < 1) throw Error(ErrorKind::InvalidArgument, "strip length must be positive");
  if (l0 < 0 || l0 > J - 1) throw Error(ErrorKind::InvalidArgument, "l0 must lie in [0, J-1]");
}

namespace {

void compositions_rec(int remaining, OrderedPartition& prefix, std::vector<OrderedPartition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = remaining; p >= 1; --p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, prefix, out);
    prefix.pop_back();
  }
}

void require_composition(const OrderedPartition& parts, const StripContext& ctx) {
  ctx.validate();
  int sum = 0;
  for (int p : parts) {
    if (p < 1) throw Error(ErrorKind::InvalidArgument, "composition parts must be positive");
    sum += p;
  }
  if (sum != ctx.J) throw Error(ErrorKind::InvalidArgument, "composition does not sum to J");
}

}  // namespace

std::vector<OrderedPartition> ordered_partitions(int J) {
  if (J < 1) throw Error(ErrorKind::InvalidArgument, "J must be positive");
  std::vector<OrderedPartition> out;
  OrderedPartition prefix;
  compositions_rec(J, prefix, out);
  return out;
}

CutReorder cut_and_reorder(const OrderedPartition& parts, const StripContext& ctx) {
  require_composition(parts, ctx);
  const int M = ctx.M();
  CutReorder out;
  std::size_t home = 0;  // index of the substrip holding box M
  int start = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int end = start + parts[i] - 1;
    if (start <= M) out.cut.push_back(std::min(end, M) - start + 1);
    if (start <= M && M <= end) home = i;
    start = end + 1;
  }
  out.reo.push_back(parts[home]);
  for (std::size_t i = home; i-- > 0;) out.reo.push_back(parts[i]);
  for (std::size_t i = home + 1; i < parts.size(); ++i) out.reo.push_back(parts[i]);
  out.b = static_cast<int>(home);
  out.c = static_cast<int>(parts.size() - home - 1);
  return out;
}

BigInt weight_w(const OrderedPartition& parts, const StripContext& ctx) {
  const CutReorder cr = cut_and_reorder(parts, ctx);
  const std::size_t N = cr.reo.size();
  // Interleavings of B_1..B_b with C_1..C_c; true marks a C slot.
  std::vector<bool> pattern(cr.b + cr.c, false);
  std::fill(pattern.begin() + cr.b, pattern.end(), true);
  BigInt total = 0;
  std::vector<int> seq(N);
  do {
    seq[0] = cr.reo[0];
    int bi = 1, ci = 1 + cr.b;
    for (std::size_t k = 0; k < pattern.size(); ++k) seq[k + 1] = pattern[k] ? cr.reo[ci++] : cr.reo[bi++];
    BigInt term = 1;
    int tail = 0;
    for (std::size_t j = N; j-- > 0;) {
      for (int h = 1; h <= seq[j] - 1; ++h) term *= tail + h;
      tail += seq[j];
    }
    total += term;
  } while (std::next_permutation(pattern.begin(), pattern.end()));
  return total;
}

int sign_s(const OrderedPartition& parts, const StripContext& ctx) {
  int s = 1;
  for (int p : cut_and_reorder(parts, ctx).cut)
    if (p % 2 == 0) s = -s;
  return s;
}

BigInt cancellation_sum(int J, int l0) {
  const StripContext ctx{J, l0};
  ctx.validate();
  const auto all = ordered_partitions(J);
  const auto terms = detail::parallel_map<BigInt>(all.size(), [&](std::size_t i) {
    return BigInt(sign_s(all[i], ctx)) * weight_w(all[i], ctx);
  });
  return std::accumulate(terms.begin(), terms.end(), BigInt(0));
}

RealPair telescoping_check(const std::vector<double>& x) {
  const std::size_t L = x.size();
  std::vector<double> tail(L + 1, 0.0);  // tail[j] = x_j + ... (0-based)
  for (std::size_t j = L; j-- > 0;) tail[j] = tail[j + 1] + x[j];
  RealPair out;
  double prod = 1.0;
  for (std::size_t j = 0; j < L; ++j) {
    const double den = tail[j + 1] + 1.0;
    if (den == 0.0) throw Error(ErrorKind::DegenerateFactor, "vanishing tail sum");
    prod *= tail[j] / den;
    out.lhs += prod;
  }
  out.rhs = tail[0];
  return out;
}

namespace {

// Product of (a xi + b)^e; its limit at xi = 1 replaces each factor that
// vanishes there by its slope a.
class LinearProduct {
 public:
  void add(cplx a, cplx b, int e = 1) { factors_.push_back({a, b, e}); }
  void constant(cplx c) { add(0.0, c); }
  void root(cplx x, int e = 1) { add(1.0, -x, e); }

  cplx limit_at_one() const {
    cplx value = 1.0;
    int order = 0;
    for (const auto& f : factors_) {
      const cplx at = f.a + f.b;
      const bool vanishes = std::abs(at) <= 1e-9 * (std::abs(f.a) + std::abs(f.b));
      if (vanishes) {
        if (f.a == 0.0) throw Error(ErrorKind::DegenerateFactor, "zero constant factor");
        order += f.e;
      }
      const cplx v = vanishes ? f.a : at;
      value *= f.e > 0 ? v : 1.0 / v;
    }
    if (order != 0) throw Error(ErrorKind::DegenerateFactor, "limit at xi = 1 is not finite and nonzero");
    return value;
  }

 private:
  struct Factor {
    cplx a, b;
    int e;
  };
  std::vector<Factor> factors_;
};

struct RowBlocks {
  std::vector<int> F;  // distinct row lengths, descending; F.back() = 0 sentinel
  std::vector<int> H;  // H[j] = number of rows of length >= F[j]; H[0] = 0
};

RowBlocks row_blocks(const Partition& Y) {
  RowBlocks rb;
  rb.F.push_back(0);  // 1-based padding
  rb.H.push_back(0);
  for (int x = 1; x <= Y.length(); ++x) {
    if (rb.F.size() == 1 || Y.row(x) != rb.F.back()) {
      rb.F.push_back(Y.row(x));
      rb.H.push_back(x);
    } else {
      rb.H.back() = x;
    }
  }
  rb.F.push_back(0);
  return rb;
}

}  // namespace

StepRatio step_ratio_check(const MultiplicativeParams& mp_in, const MultiPartition& V) {
  MultiplicativeParams mp = mp_in;
  mp.p.clear();
  const int r = V.rank();
  if (r < 1 || mp.rank() != r) throw Error(ErrorKind::InvalidArgument, "rank mismatch between u and the tuple");
  const Partition& Yr = V.components[r - 1];
  if (Yr.empty()) throw Error(ErrorKind::InvalidArgument, "last component must be nonempty");
  const cplx q1 = mp.q1, q2 = mp.q2;
  const int l = Yr.length();
  const int w = Yr.row(l);
  MultiPartition Vp = remove_last_box(V).rest;

  StepRatio out;
  out.direct = fixed_point_term(mp, V, Form::N) / fixed_point_term(mp, Vp, Form::N);

  // Residue side: z_n = xi * zhat with zhat the removed box, all other
  // variables frozen at the residues of V'.
  {
    const cplx zhat = mp.u[r - 1] * ipow(q1, l - 1) * ipow(q2, w - 1);
    LinearProduct P;
    P.constant((1.0 - q1 * q2) / ((1.0 - q1) * (1.0 - q2)));
    P.root(1.0);           // 1 - zhat / z_n = (xi - 1) / xi
    P.add(1.0, 0.0, -1);
    for (int a = 0; a < r; ++a) {
      const cplx u = mp.u[a];
      P.add(-u * zhat, 0.0);
      P.add(zhat, -u, -1);
      P.add(q1 * q2 * zhat, -u, -1);
    }
    for (int a = 0; a < r; ++a) {
      for (const Box s : Vp.components[a].boxes()) {
        const cplx zk = mp.u[a] * ipow(q1, s.x - 1) * ipow(q2, s.y - 1);
        P.add(zhat, -zk);
        P.add(zhat, -q1 * q2 * zk);
        P.add(zhat, -q1 * zk, -1);
        P.add(zhat, -q2 * zk, -1);
        P.add(-zhat, zk);
        P.add(-q1 * q2 * zhat, zk);
        P.add(-q1 * zhat, zk, -1);
        P.add(-q2 * zhat, zk, -1);
      }
    }
    out.lhs = P.limit_at_one();
  }

  // Closed form, grouping rows of equal length.
  {
    LinearProduct P;
    P.root(q1);
    P.root(q2);
    P.root(1.0, -1);
    P.root(q1 * q2, -1);
    const cplx ur = mp.u[r - 1];
    for (int a = 0; a < r; ++a) {
      const Partition& Ya = V.components[a];
      const cplx fwd = mp.u[a] / ur;
      const cplx bwd = ur / mp.u[a];
      const int la = Ya.length();
      P.root(fwd * ipow(q1, la - l + 1) * ipow(q2, 1 - w), -1);
      P.root(bwd * ipow(q1, l - la) * ipow(q2, w), -1);
      const RowBlocks rb = row_blocks(Ya);
      const int m = static_cast<int>(rb.H.size()) - 1;
      for (int j = 1; j <= m; ++j) {
        const int F = rb.F[j];
        P.root(bwd * ipow(q1, l - rb.H[j]) * ipow(q2, w - F));
        P.root(fwd * ipow(q1, rb.H[j] - l + 1) * ipow(q2, F - w + 1));
        P.root(bwd * ipow(q1, l - rb.H[j - 1]) * ipow(q2, w - F), -1);
        P.root(fwd * ipow(q1, rb.H[j - 1] - l + 1) * ipow(q2, F - w + 1), -1);
      }
    }
    out.rhs = P.limit_at_one();
  }
  return out;
}

}  // namespace nek
