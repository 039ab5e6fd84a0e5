#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sbnet/assignment.hpp"

namespace sbnet {

/// A function constant on each cell of the uniform 2^L x 2^L grid, with
/// exact rational cell values stored as int64 numerators times a common
/// scale. Level n+1 represents any hyperbolic sum at scale n exactly.
struct StepFunction2 {
  int level = 0;
  std::vector<std::int64_t> num;  // (cx << level) + cy
  Rational scale = 1;

  std::int64_t raw(std::uint64_t cx, std::uint64_t cy) const {
    return num[(cx << level) + cy];
  }
  Rational value_at(std::uint64_t cx, std::uint64_t cy) const {
    return Rational(raw(cx, cy)) * scale;
  }
  std::size_t cell_count() const { return num.size(); }
};

/// One-dimensional analogue, used by the reduction module.
struct StepFunction1 {
  int level = 0;
  std::vector<std::int64_t> num;
  Rational scale = 1;

  Rational value_at(std::uint64_t c) const { return Rational(num[c]) * scale; }
};

struct RenderBudget {
  // 2^(2*(max_scale+1)) cells is the default desk-scale cap (n = 13 -> 2^28).
  int max_scale = 13;
};

/// Pointwise evaluation: sum over the n+1 boxes containing p.
long long eval_sum(const SignAssignment& A, const GridPoint2& p);
Rational eval_sum(const CoefficientAssignment& C, const GridPoint2& p);

/// Exact rendering on the level-(n+1) cell grid.
StepFunction2 render(const SignAssignment& A, const RenderBudget& budget = {});
StepFunction2 render(const CoefficientAssignment& C, const RenderBudget& budget = {});

Rational sup_norm(const StepFunction2& F);
Rational sup_norm(const StepFunction1& F);

/// All cells attaining the maximum of the signed value (not absolute value).
std::vector<std::pair<std::uint64_t, std::uint64_t>> max_locations(const StepFunction2& F);

/// (Integral |F|^p)^(1/p) in double precision; p must be positive.
double lp_norm(const StepFunction2& F, double p);
/// Integral of |F|^p, exact, for integer p >= 1. Bit-exact companion of
/// lp_norm used wherever tests compare norms by equality.
Rational lp_norm_pow(const StepFunction2& F, unsigned p);
Rational lp_norm_pow(const StepFunction1& F, unsigned p);

/// sqrt(sum alpha_R^2 |R|) straight from the coefficients.
double l2_parseval(const CoefficientAssignment& C);
Rational l2_parseval_sq(const CoefficientAssignment& C);

/// 2^-n * sum |alpha_R|: the right-hand side of the small ball inequality.
Rational rhs_small_ball(const CoefficientAssignment& C);
Rational rhs_small_ball(const SignAssignment& A);

/// Exact max and min of the rendered sum, computed by a pruned column walk
/// instead of materializing the grid. Equals the scan of render() bit for
/// bit; the equivalence is property-tested.
struct Extrema {
  Rational max, min;
  Rational sup() const { return max > -min ? max : -min; }
};
Extrema extrema(const SignAssignment& A);
Extrema extrema(const CoefficientAssignment& C);

}  // namespace sbnet
