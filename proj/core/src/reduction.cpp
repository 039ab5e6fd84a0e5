#include "sbnet/reduction.hpp"

#include <algorithm>
#include <random>

namespace sbnet {

long long eval1_ext(const IntervalSigns& E, GridPoint1 x) {
  long long s = 0;
  for (int l = 0; l <= E.n; ++l) {
    const DyadicInterval I = interval_containing(l, x);
    s += E.at(l, I.index) * haar1(I, x);
  }
  return s;
}

StepFunction1 render1(const IntervalSigns& E) {
  const int L = E.n + 1;
  StepFunction1 F;
  F.level = L;
  F.num.assign(std::size_t{1} << L, 0);
  // Accumulate level by level: each cell inherits its parent's partial sum.
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << L); ++c) {
    long long acc = 0;
    for (int l = 0; l <= E.n; ++l) {
      const std::uint64_t idx = c >> (L - l);
      const int h = ((c >> (L - l - 1)) & 1) ? +1 : -1;
      acc += E.at(l, idx) * h;
    }
    F.num[c] = acc;
  }
  return F;
}

GreedyWitness greedyImpl(const IntervalSigns& E) {
  std::uint64_t idx = 0;
  for (int l = 0; l <= E.n; ++l) {
    const int eps = E.at(l, idx);
    // right child carries h = +1
    idx = (idx << 1) | (eps > 0 ? 1u : 0u);
  }
  return {DyadicInterval(E.n + 1, idx), E.n + 1};
}

GreedyWitness greedy_nested_max(const IntervalSigns& E) { return greedyImpl(E); }

IntervalSigns restrict2(const SignAssignment& A, GridPoint1 x1) {
  const int n = A.n();
  IntervalSigns out(n);
  for (int l = 0; l <= n; ++l) {
    const int k = n - l;  // |R1| = 2^-n / |R'|
    const DyadicInterval R1 = interval_containing(k, x1);
    const int h = haar1(R1, x1);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << l); ++idx)
      out.set(l, idx, A.sign(k, R1.index, idx) * h);
  }
  return out;
}

SignAssignment embed_1d_to_2d(const IntervalSigns& E) {
  const int n = E.n;
  SignAssignment A(n, +1);
  for (int k = 0; k <= n; ++k) {
    const int l = n - k;  // level of R2
    // 0 sits in the left half of every R1, so h_{R1}(0) = -1; fold that
    // factor in here so that restricting back at x1 = 0 returns E itself.
    for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << l); ++iy)
      A.set(k, 0, iy, -E.at(l, iy));
  }
  return A;
}

namespace {

int shape_count2(int n) { return (n + 1) * (n + 2) / 2; }

int shape_index2(int n, int a, int b) {
  // pairs (a, b) with a + b <= n, lexicographic by a.
  return a * (n + 1) - a * (a - 1) / 2 + b;
}

}  // namespace

SignAssignment3::SignAssignment3(int n, int fill) : n_(n) {
  if (n < 0 || n > 20) throw ContractError("SignAssignment3: n out of range");
  if (fill != 1 && fill != -1) throw ContractError("signs must be +-1");
  table_.assign(static_cast<std::size_t>(shape_count2(n)) << n,
                static_cast<std::int8_t>(fill));
}

std::size_t SignAssignment3::offset(int k1, int k2, std::uint64_t ix, std::uint64_t iy,
                                    std::uint64_t iz) const {
  const int k3 = n_ - k1 - k2;
  if (k1 < 0 || k2 < 0 || k3 < 0 || ix >= (std::uint64_t{1} << k1) ||
      iy >= (std::uint64_t{1} << k2) || iz >= (std::uint64_t{1} << k3))
    throw ContractError("3-D box index out of range");
  const std::size_t base = static_cast<std::size_t>(shape_index2(n_, k1, k2)) << n_;
  return base + static_cast<std::size_t>((((ix << k2) | iy) << k3) | iz);
}

int SignAssignment3::sign(int k1, int k2, std::uint64_t ix, std::uint64_t iy,
                          std::uint64_t iz) const {
  return table_[offset(k1, k2, ix, iy, iz)];
}

void SignAssignment3::set(int k1, int k2, std::uint64_t ix, std::uint64_t iy,
                          std::uint64_t iz, int value) {
  if (value != 1 && value != -1) throw ContractError("signs must be +-1");
  table_[offset(k1, k2, ix, iy, iz)] = static_cast<std::int8_t>(value);
}

SignAssignment3 SignAssignment3::random(int n, std::uint64_t seed) {
  SignAssignment3 out(n);
  std::mt19937_64 rng(seed);
  for (auto& s : out.table_) s = (rng() & 1) ? std::int8_t{1} : std::int8_t{-1};
  return out;
}

long long eval_sum3(const SignAssignment3& A, GridPoint1 x, GridPoint1 y, GridPoint1 z) {
  const int n = A.n();
  long long s = 0;
  for (int k1 = 0; k1 <= n; ++k1)
    for (int k2 = 0; k2 + k1 <= n; ++k2) {
      const int k3 = n - k1 - k2;
      const DyadicInterval I1 = interval_containing(k1, x);
      const DyadicInterval I2 = interval_containing(k2, y);
      const DyadicInterval I3 = interval_containing(k3, z);
      s += A.sign(k1, k2, I1.index, I2.index, I3.index) *
           haar1(I1, x) * haar1(I2, y) * haar1(I3, z);
    }
  return s;
}

ExtendedSigns2D::ExtendedSigns2D(int n, int fill) : n_(n) {
  if (n < 0 || n > 20) throw ContractError("ExtendedSigns2D: n out of range");
  if (fill != 1 && fill != -1) throw ContractError("signs must be +-1");
  shape_base_.resize(static_cast<std::size_t>(shape_count2(n)));
  std::size_t off = 0;
  int s = 0;
  for (int l1 = 0; l1 <= n; ++l1)
    for (int l2 = 0; l1 + l2 <= n; ++l2) {
      shape_base_[static_cast<std::size_t>(s++)] = off;
      off += std::size_t{1} << (l1 + l2);
    }
  table_.assign(off, static_cast<std::int8_t>(fill));
}

std::size_t ExtendedSigns2D::offset(int l1, int l2, std::uint64_t ix, std::uint64_t iy) const {
  if (l1 < 0 || l2 < 0 || l1 + l2 > n_ || ix >= (std::uint64_t{1} << l1) ||
      iy >= (std::uint64_t{1} << l2))
    throw ContractError("extended 2-D box index out of range");
  return shape_base_[static_cast<std::size_t>(shape_index2(n_, l1, l2))] +
         static_cast<std::size_t>((ix << l2) | iy);
}

int ExtendedSigns2D::sign(int l1, int l2, std::uint64_t ix, std::uint64_t iy) const {
  return table_[offset(l1, l2, ix, iy)];
}

void ExtendedSigns2D::set(int l1, int l2, std::uint64_t ix, std::uint64_t iy, int value) {
  if (value != 1 && value != -1) throw ContractError("signs must be +-1");
  table_[offset(l1, l2, ix, iy)] = static_cast<std::int8_t>(value);
}

long long eval2_ext(const ExtendedSigns2D& E, GridPoint1 x, GridPoint1 y) {
  const int n = E.n();
  long long s = 0;
  for (int l1 = 0; l1 <= n; ++l1)
    for (int l2 = 0; l1 + l2 <= n; ++l2) {
      const DyadicInterval I1 = interval_containing(l1, x);
      const DyadicInterval I2 = interval_containing(l2, y);
      s += E.sign(l1, l2, I1.index, I2.index) * haar1(I1, x) * haar1(I2, y);
    }
  return s;
}

long long sup_ext2(const ExtendedSigns2D& E) {
  const int n = E.n();
  if (n > 10) throw BudgetError("sup_ext2 is guarded to n <= 10");
  const int L = n + 1;
  long long best = 0;
  for (std::uint64_t cx = 0; cx < (std::uint64_t{1} << L); ++cx)
    for (std::uint64_t cy = 0; cy < (std::uint64_t{1} << L); ++cy) {
      const long long v = eval2_ext(E, GridPoint1{cx, L}, GridPoint1{cy, L});
      best = std::max(best, std::abs(v));
    }
  return best;
}

ExtendedSigns2D restrict3(const SignAssignment3& A, GridPoint1 x1) {
  const int n = A.n();
  ExtendedSigns2D out(n);
  for (int l1 = 0; l1 <= n; ++l1)
    for (int l2 = 0; l1 + l2 <= n; ++l2) {
      const int k1 = n - l1 - l2;
      const DyadicInterval R1 = interval_containing(k1, x1);
      const int h = haar1(R1, x1);
      for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << l1); ++ix)
        for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << l2); ++iy)
          out.set(l1, l2, ix, iy, A.sign(k1, l1, R1.index, ix, iy) * h);
    }
  return out;
}

Counterexample counterexample_coeffs(int n) {
  if (n < 0) throw ContractError("counterexample_coeffs: n must be >= 0");
  if (n > 22) throw BudgetError("counterexample_coeffs is guarded to n <= 22");
  Counterexample C;
  C.n = n;
  C.alpha.assign((std::size_t{1} << (n + 1)) - 1, 0);
  const long long n_sq = static_cast<long long>(n) * n;
  // Kill a subtree as soon as one more +-1 step could push its value past
  // n^(2/3); this keeps the exact bound sup^3 <= n^2 (killing only at the
  // threshold itself would freeze values one unit above it).
  auto reached_threshold = [n_sq](long long s) {
    s = std::abs(s) + 1;
    return s * s * s > n_sq;
  };
  C.alpha[0] = 1;
  // partial[J] at level k holds sum_{|I| > 2^-k} alpha_I h_I on J; -128
  // marks a killed subtree.
  std::vector<std::int8_t> partial{0}, next;
  constexpr std::int8_t kDead = -128;
  for (int k = 1; k <= n; ++k) {
    next.assign(std::size_t{1} << k, 0);
    for (std::uint64_t J = 0; J < (std::uint64_t{1} << k); ++J) {
      const std::uint64_t parent = J >> 1;
      if (partial[parent] == kDead) {
        next[J] = kDead;
        continue;
      }
      const int h = (J & 1) ? +1 : -1;
      const long long s = partial[parent] +
                          static_cast<long long>(C.alpha[(std::size_t{1} << (k - 1)) - 1 + parent]) * h;
      if (reached_threshold(s)) {
        next[J] = kDead;  // alpha_J = 0 and the whole subtree stays 0
      } else {
        next[J] = static_cast<std::int8_t>(s);
        C.alpha[(std::size_t{1} << k) - 1 + J] = 1;
      }
    }
    partial.swap(next);
  }
  return C;
}

CounterexampleReport verify_counterexample(int n) {
  const Counterexample C = counterexample_coeffs(n);
  CounterexampleReport rep;
  rep.n = n;
  // Exact sup: evaluate the full sum on the 2^(n+1) leaf cells, level by
  // level. Killed subtrees keep their frozen partial value.
  std::vector<int> values{0};
  for (int k = 0; k <= n; ++k) {
    std::vector<int> next(std::size_t{1} << (k + 1));
    for (std::uint64_t J = 0; J < (std::uint64_t{1} << k); ++J) {
      const int a = C.at(k, J);
      next[2 * J] = values[J] - a;
      next[2 * J + 1] = values[J] + a;
    }
    values.swap(next);
  }
  long long sup = 0;
  BigInt sum_sq = 0;
  for (const int v : values) {
    sup = std::max(sup, static_cast<long long>(std::abs(v)));
    sum_sq += BigInt(v) * v;
  }
  rep.sup = sup;
  // RHS = sum |alpha_I| |I|; with 0/1 coefficients Parseval makes it the
  // squared L2 norm.
  Rational rhs = 0;
  for (int k = 0; k <= n; ++k) {
    long long alive = 0;
    for (std::uint64_t J = 0; J < (std::uint64_t{1} << k); ++J) alive += C.at(k, J);
    rhs += Rational(alive, BigInt(1) << k);
  }
  rep.rhs = rhs;
  rep.ratio = sup > 0 ? rhs / Rational(sup) : Rational(0);
  rep.sup_bound_ok = sup * sup * sup <= static_cast<long long>(n) * n;
  // Cross-check Parseval on the rendered leaves.
  const Rational l2_sq = Rational(sum_sq) / Rational(BigInt(1) << (n + 1));
  if (l2_sq != rhs)
    throw ContractError("internal error: Parseval identity failed in verify_counterexample");
  return rep;
}

}  // namespace sbnet
