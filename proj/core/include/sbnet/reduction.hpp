#pragma once

#include <cstdint>
#include <vector>

#include "sbnet/haar_sums.hpp"
#include "sbnet/nets.hpp"

namespace sbnet {

// The extended one-dimensional index set {I : |I| >= 2^-n} is the full
// binary tree of dyadic intervals with levels 0..n; IntervalSigns (heap
// layout) is its sign table.

/// Sum over all intervals of level 0..n of eps_I h_I(x).
long long eval1_ext(const IntervalSigns& E, GridPoint1 x);

/// Exact rendering of the extended 1-D sum at level n+1.
StepFunction1 render1(const IntervalSigns& E);

struct GreedyWitness {
  DyadicInterval interval;  // level n+1
  long long value = 0;      // always n+1
};

/// Descend level by level, always taking the half where eps_I h_I = +1.
GreedyWitness greedy_nested_max(const IntervalSigns& E);

/// Restriction of a 2-D hyperbolic sum to the line x1 = const:
/// eps'_{R'} = eps_{R1 x R'} h_{R1}(x1) with R1 the unique interval of
/// length 2^-n / |R'| containing x1. Pointwise exact:
/// eval1_ext(restrict2(A, x1), y) == eval_sum(A, (x1, y)).
IntervalSigns restrict2(const SignAssignment& A, GridPoint1 x1);

/// Converse embedding: boxes whose R1 contains zero get eps_{R2}; all other
/// boxes get +1 (deterministic fill).
SignAssignment embed_1d_to_2d(const IntervalSigns& E);

/// Three-dimensional signed hyperbolic assignment: one sign per box
/// R1 x R2 x R3 with |R| = 2^-n, shapes (k1, k2, k3 = n - k1 - k2).
class SignAssignment3 {
 public:
  explicit SignAssignment3(int n, int fill = +1);

  int n() const { return n_; }
  int sign(int k1, int k2, std::uint64_t ix, std::uint64_t iy, std::uint64_t iz) const;
  void set(int k1, int k2, std::uint64_t ix, std::uint64_t iy, std::uint64_t iz, int value);
  static SignAssignment3 random(int n, std::uint64_t seed);

 private:
  std::size_t offset(int k1, int k2, std::uint64_t ix, std::uint64_t iy, std::uint64_t iz) const;
  int n_;
  std::vector<std::int8_t> table_;
};

long long eval_sum3(const SignAssignment3& A, GridPoint1 x, GridPoint1 y, GridPoint1 z);

/// Extended 2-D sign assignment over boxes of volume >= 2^-n
/// (shapes (l1, l2) with l1 + l2 <= n), produced by restricting a 3-D sum.
class ExtendedSigns2D {
 public:
  explicit ExtendedSigns2D(int n, int fill = +1);

  int n() const { return n_; }
  int sign(int l1, int l2, std::uint64_t ix, std::uint64_t iy) const;
  void set(int l1, int l2, std::uint64_t ix, std::uint64_t iy, int value);

 private:
  std::size_t offset(int l1, int l2, std::uint64_t ix, std::uint64_t iy) const;
  int n_;
  std::vector<std::size_t> shape_base_;
  std::vector<std::int8_t> table_;
};

long long eval2_ext(const ExtendedSigns2D& E, GridPoint1 x, GridPoint1 y);

/// Exact sup by full cell enumeration at level n+1; guarded to n <= 10.
long long sup_ext2(const ExtendedSigns2D& E);

/// Restriction of a 3-D sum to the plane x1 = const.
ExtendedSigns2D restrict3(const SignAssignment3& A, GridPoint1 x1);

/// The 0/1-coefficient construction that defeats the one-dimensional
/// extended-range coefficient estimate: starting from alpha_[0,1) = 1,
/// descend the scales and zero out every subtree on which the partial sum
/// has reached n^(2/3). The comparison s >= n^(2/3) is the exact integer
/// test s^3 >= n^2 (ties kill).
struct Counterexample {
  int n = 0;
  std::vector<std::uint8_t> alpha;  // heap layout over levels 0..n, values 0/1

  int at(int level, std::uint64_t index) const {
    return alpha[(std::size_t{1} << level) - 1 + index];
  }
};

Counterexample counterexample_coeffs(int n);  // guarded to n <= 22

struct CounterexampleReport {
  int n = 0;
  long long sup = 0;        // exact sup norm of the 0/1 sum
  Rational rhs = 0;         // sum |alpha_I| |I|, equals the squared L2 norm
  Rational ratio = 0;       // rhs / sup
  bool sup_bound_ok = false;  // sup^3 <= n^2
};

CounterexampleReport verify_counterexample(int n);

}  // namespace sbnet
