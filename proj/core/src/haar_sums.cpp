#include "sbnet/haar_sums.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/multiprecision/integer.hpp>

namespace sbnet {

namespace {

// Hyperbolic coefficients with a common denominator pulled out, so that all
// cell values are int64 multiples of `scale`.
struct ScaledTable {
  int n = 0;
  std::vector<std::int64_t> num;  // hyperbolic_offset layout
  Rational scale = 1;
};

ScaledTable scaled(const SignAssignment& A) {
  ScaledTable t;
  t.n = A.n();
  t.num.resize(hyperbolic_table_size(A.n()));
  for_each_box(A.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    t.num[hyperbolic_offset(A.n(), k, ix, iy)] = A.sign(k, ix, iy);
  });
  return t;
}

ScaledTable scaled(const CoefficientAssignment& C) {
  const int n = C.n();
  BigInt den = 1;
  for_each_box(n, [&](int k, std::uint64_t ix, std::uint64_t iy) {
    den = boost::multiprecision::lcm(den, denominator(C.coeff(k, ix, iy)));
  });
  ScaledTable t;
  t.n = n;
  t.scale = Rational(BigInt(1), den);
  t.num.resize(hyperbolic_table_size(n));
  std::vector<BigInt> shape_max(static_cast<std::size_t>(n) + 1, BigInt(0));
  for_each_box(n, [&](int k, std::uint64_t ix, std::uint64_t iy) {
    const Rational& a = C.coeff(k, ix, iy);
    BigInt v = numerator(a) * (den / denominator(a));
    if (abs(v) > BigInt(std::numeric_limits<std::int64_t>::max()))
      throw BudgetError("coefficient numerator exceeds the int64 exact-render range");
    if (abs(v) > shape_max[k]) shape_max[k] = abs(v);
    t.num[hyperbolic_offset(n, k, ix, iy)] = v.convert_to<std::int64_t>();
  });
  BigInt worst = 0;  // sum over shapes of the largest |numerator|
  for (const auto& m : shape_max) worst += m;
  if (worst > (BigInt(1) << 62))
    throw BudgetError("worst-case cell value exceeds the int64 exact-render range");
  return t;
}

// Per-column view: one coefficient table row per y-level l = 0..n.
// colbase[l] + J indexes the coefficient of the level-l interval J; sx[l]
// is the x-half sign of the column.
struct ColumnRefs {
  std::array<std::size_t, 64> base;
  std::array<int, 64> sx;
};

void column_refs(const ScaledTable& t, std::uint64_t cx, ColumnRefs& out) {
  const int n = t.n;
  const int L = n + 1;
  for (int l = 0; l <= n; ++l) {
    const int k = n - l;
    const std::uint64_t xidx = cx >> (L - k);
    out.base[l] = (static_cast<std::size_t>(k) << n) + static_cast<std::size_t>(xidx << (n - k));
    out.sx[l] = ((cx >> (L - k - 1)) & 1) ? +1 : -1;
  }
}

void render_column(const ScaledTable& t, const ColumnRefs& col, std::int64_t* out) {
  const int L = t.n + 1;
  // Iterative DFS over the y interval tree; amortized O(1) per cell.
  struct Frame {
    int l;
    std::uint64_t J;
    std::int64_t acc;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.l == L) {
      out[f.J] = f.acc;
      continue;
    }
    const std::int64_t c = t.num[col.base[f.l] + f.J] * col.sx[f.l];
    stack.push_back({f.l + 1, 2 * f.J + 1, f.acc + c});
    stack.push_back({f.l + 1, 2 * f.J, f.acc - c});
  }
}

StepFunction2 render_scaled(const ScaledTable& t, const RenderBudget& budget) {
  if (t.n > budget.max_scale)
    throw BudgetError("render: scale n exceeds the configured cell budget");
  const int L = t.n + 1;
  StepFunction2 F;
  F.level = L;
  F.scale = t.scale;
  F.num.resize(std::size_t{1} << (2 * L));
  ColumnRefs col;
  for (std::uint64_t cx = 0; cx < (std::uint64_t{1} << L); ++cx) {
    column_refs(t, cx, col);
    render_column(t, col, F.num.data() + (cx << L));
  }
  return F;
}

Extrema extrema_scaled(const ScaledTable& t) {
  const int n = t.n;
  const int L = n + 1;
  // Per-(level, x-interval) max |coefficient| over the y index, for pruning.
  std::vector<std::int64_t> colmax;
  std::vector<std::size_t> colmax_base(static_cast<std::size_t>(n) + 1);
  {
    // colmax[k] is indexed by xidx only.
    std::size_t off = 0;
    colmax.assign((std::uint64_t{2} << n), 0);  // sum over k of 2^k <= 2^(n+1)
    for (int k = 0; k <= n; ++k) {
      colmax_base[k] = off;
      for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << k); ++ix) {
        std::int64_t m = 0;
        const std::size_t b = (static_cast<std::size_t>(k) << n) + static_cast<std::size_t>(ix << (n - k));
        for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << (n - k)); ++iy)
          m = std::max(m, std::abs(t.num[b + iy]));
        colmax[off + ix] = m;
      }
      off += std::uint64_t{1} << k;
    }
  }

  std::int64_t best_max = std::numeric_limits<std::int64_t>::min();
  std::int64_t best_min = std::numeric_limits<std::int64_t>::max();
  ColumnRefs col;
  std::array<std::int64_t, 64> suffix;  // suffix[l] = sum of per-level max |c| from l on
  struct Frame {
    int l;
    std::uint64_t J;
    std::int64_t acc;
  };
  std::vector<Frame> stack;
  for (std::uint64_t cx = 0; cx < (std::uint64_t{1} << L); ++cx) {
    column_refs(t, cx, col);
    suffix[L] = 0;
    for (int l = n; l >= 0; --l) {
      const int k = n - l;
      const std::uint64_t xidx = cx >> (L - k);
      suffix[l] = suffix[l + 1] + colmax[colmax_base[k] + xidx];
    }
    if (best_max != std::numeric_limits<std::int64_t>::min() &&
        suffix[0] <= best_max && -suffix[0] >= best_min)
      continue;
    stack.push_back({0, 0, 0});
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.l == L) {
        best_max = std::max(best_max, f.acc);
        best_min = std::min(best_min, f.acc);
        continue;
      }
      if (f.acc + suffix[f.l] <= best_max && f.acc - suffix[f.l] >= best_min)
        continue;  // this subtree can improve neither bound
      const std::int64_t c = t.num[col.base[f.l] + f.J] * col.sx[f.l];
      stack.push_back({f.l + 1, 2 * f.J + 1, f.acc + c});
      stack.push_back({f.l + 1, 2 * f.J, f.acc - c});
    }
  }
  return {Rational(best_max) * t.scale, Rational(best_min) * t.scale};
}

}  // namespace

long long eval_sum(const SignAssignment& A, const GridPoint2& p) {
  long long s = 0;
  for (int k = 0; k <= A.n(); ++k) {
    const DyadicBox2 R = box_containing(k, A.n(), p);
    s += A.sign_of(R) * haar2(R, p);
  }
  return s;
}

Rational eval_sum(const CoefficientAssignment& C, const GridPoint2& p) {
  Rational s = 0;
  for (int k = 0; k <= C.n(); ++k) {
    const DyadicBox2 R = box_containing(k, C.n(), p);
    s += C.coeff(k, R.x_interval.index, R.y_interval.index) * haar2(R, p);
  }
  return s;
}

StepFunction2 render(const SignAssignment& A, const RenderBudget& budget) {
  return render_scaled(scaled(A), budget);
}

StepFunction2 render(const CoefficientAssignment& C, const RenderBudget& budget) {
  return render_scaled(scaled(C), budget);
}

Rational sup_norm(const StepFunction2& F) {
  std::int64_t m = 0;
  for (const auto v : F.num) m = std::max(m, std::abs(v));
  return Rational(m) * abs(F.scale);
}

Rational sup_norm(const StepFunction1& F) {
  std::int64_t m = 0;
  for (const auto v : F.num) m = std::max(m, std::abs(v));
  return Rational(m) * abs(F.scale);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> max_locations(const StepFunction2& F) {
  const std::int64_t m = *std::max_element(F.num.begin(), F.num.end());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t cx = 0; cx < (std::uint64_t{1} << F.level); ++cx)
    for (std::uint64_t cy = 0; cy < (std::uint64_t{1} << F.level); ++cy)
      if (F.raw(cx, cy) == m) out.emplace_back(cx, cy);
  return out;
}

double lp_norm(const StepFunction2& F, double p) {
  if (!(p > 0)) throw ContractError("lp_norm: p must be positive");
  const double s = to_double(F.scale);
  const double area = std::ldexp(1.0, -2 * F.level);
  double acc = 0;
  for (const auto v : F.num) acc += std::pow(std::abs(static_cast<double>(v) * s), p) * area;
  return std::pow(acc, 1.0 / p);
}

namespace {
template <typename SF>
Rational lp_norm_pow_impl(const SF& F, unsigned p, int dim) {
  if (p == 0) throw ContractError("lp_norm_pow: p must be >= 1");
  BigInt acc = 0;
  for (const auto v : F.num) {
    BigInt b = v < 0 ? BigInt(-v) : BigInt(v);
    BigInt powed = 1;
    for (unsigned i = 0; i < p; ++i) powed *= b;
    acc += powed;
  }
  Rational sp = 1;
  for (unsigned i = 0; i < p; ++i) sp *= abs(F.scale);
  return Rational(acc) * sp / Rational(BigInt(1) << (dim * F.level));
}
}  // namespace

Rational lp_norm_pow(const StepFunction2& F, unsigned p) { return lp_norm_pow_impl(F, p, 2); }
Rational lp_norm_pow(const StepFunction1& F, unsigned p) { return lp_norm_pow_impl(F, p, 1); }

Rational l2_parseval_sq(const CoefficientAssignment& C) {
  Rational acc = 0;
  for_each_box(C.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    const Rational& a = C.coeff(k, ix, iy);
    acc += a * a;
  });
  return acc / Rational(BigInt(1) << C.n());
}

double l2_parseval(const CoefficientAssignment& C) {
  return std::sqrt(to_double(l2_parseval_sq(C)));
}

Rational rhs_small_ball(const CoefficientAssignment& C) {
  Rational acc = 0;
  for_each_box(C.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    acc += abs(C.coeff(k, ix, iy));
  });
  return acc / Rational(BigInt(1) << C.n());
}

Rational rhs_small_ball(const SignAssignment& A) {
  return Rational(A.n() + 1);
}

Extrema extrema(const SignAssignment& A) { return extrema_scaled(scaled(A)); }
Extrema extrema(const CoefficientAssignment& C) { return extrema_scaled(scaled(C)); }

}  // namespace sbnet
