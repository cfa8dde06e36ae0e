#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nek/common.hpp"
#include "nek/nekrasov.hpp"
#include "nek/partitions.hpp"

namespace nek {

using BigInt = boost::multiprecision::cpp_int;

/// A composition of J: positive parts, order significant, listed west to east.
using OrderedPartition = std::vector<int>;

/// A residue strip of J boxes with the pole u_0 at box M = l0 + 1 counted
/// from the west; the K = J - M boxes east of it make up the rest.
struct StripContext {
  int J = 1;
  int l0 = 0;

  int M() const { return l0 + 1; }
  int K() const { return J - l0 - 1; }
  /// Throws Error(InvalidArgument) unless J >= 1 and 0 <= l0 <= J - 1.
  void validate() const;
};

/// All 2^(J-1) compositions of J; first part descending, then recursively.
std::vector<OrderedPartition> ordered_partitions(int J);

struct CutReorder {
  OrderedPartition cut;  // composition of M: the substrips clipped east of u_0
  OrderedPartition reo;  // (B_0, B_1..B_b, C_1..C_c)
  int b = 0;             // substrips west of B_0
  int c = 0;             // substrips east of B_0
};

CutReorder cut_and_reorder(const OrderedPartition& parts, const StripContext& ctx);

/// Number of residue-picking procedures producing the given substrips.
BigInt weight_w(const OrderedPartition& parts, const StripContext& ctx);

/// prod over cut parts of (-1)^(1 + part).
int sign_s(const OrderedPartition& parts, const StripContext& ctx);

/// sum over all compositions of s * w.
BigInt cancellation_sum(int J, int l0);

struct RealPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = sum_{J=1}^L prod_{j<=J} (x_j + ... + x_L) / (x_{j+1} + ... + x_L + 1),
/// rhs = x_1 + ... + x_L.
RealPair telescoping_check(const std::vector<double>& x);

struct StepRatio {
  cplx lhs;      // residue limit of the integrand quotient, with the box prefactor
  cplx rhs;      // closed product over rows of equal length
  cplx direct;   // quotient of two N-form fixed-point terms
};

/// Ratio of consecutive fixed-point contributions when the last box of the
/// last component is removed. Matter parameters cancel in the
/// ratio and are ignored. Throws Error(InvalidArgument) if the last component
/// is empty and Error(DegenerateFactor) if a limit does not exist.
StepRatio step_ratio_check(const MultiplicativeParams& mp, const MultiPartition& V);

}  // namespace nek
