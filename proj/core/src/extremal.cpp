#include "sbnet/extremal.hpp"

#include <algorithm>

namespace sbnet {

namespace {

int sgn(std::uint64_t bit) { return bit ? +1 : -1; }

}  // namespace

Net ExtremalSet::as_net() const {
  Net P;
  P.base = 2;
  P.m = m;
  P.points = squares;
  return P;
}

ExtremalSet extremal_squares(const SignAssignment& A) {
  const int n = A.n();
  const int m = n + 1;
  ExtremalSet out;
  out.m = m;
  out.value = n + 1;
  out.squares.reserve(std::size_t{1} << m);
  // Per column x, the n+1 positivity constraints determine the y digits
  // one by one: the shape-k term fixes bit n-k of y from the prefix above it.
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    std::uint64_t j = 0;
    for (int k = n; k >= 0; --k) {
      const std::uint64_t xidx = i >> (m - k);
      const int sx = sgn((i >> (m - k - 1)) & 1);
      const int eps = A.sign(k, xidx, j);
      const int sy = eps * sx;  // makes eps * h_R = +1
      j = (j << 1) | (sy > 0 ? 1u : 0u);
    }
    out.squares.emplace_back(i, j);
  }
  std::sort(out.squares.begin(), out.squares.end());
  return out;
}

ExtremalSet extremal_squares_inductive(const SignAssignment& A) {
  const int n = A.n();
  if (n % 2 == 0)
    throw ContractError("the F_k induction is defined for odd n only");
  const int k0 = (n + 1) / 2;

  auto eval_Fk = [&](int k, std::uint64_t qx, std::uint64_t qy) -> int {
    // (qx, qy) indexes a square of side 2^-(k+1); F_k is constant there.
    const int d = 2 * k - n;  // >= 1 for k >= (n+1)/2, n odd
    const std::uint64_t xidx1 = qx >> 1;
    const int sx1 = sgn(qx & 1);
    const std::uint64_t yidx1 = qy >> (d + 1);
    const int sy1 = sgn((qy >> d) & 1);
    const std::uint64_t xidx2 = qx >> (d + 1);
    const int sx2 = sgn((qx >> d) & 1);
    const std::uint64_t yidx2 = qy >> 1;
    const int sy2 = sgn(qy & 1);
    return A.sign(k, xidx1, yidx1) * sx1 * sy1 +
           A.sign(n - k, xidx2, yidx2) * sx2 * sy2;
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> kept;
  for (std::uint64_t qx = 0; qx < (std::uint64_t{1} << (k0 + 1)); ++qx)
    for (std::uint64_t qy = 0; qy < (std::uint64_t{1} << (k0 + 1)); ++qy)
      if (eval_Fk(k0, qx, qy) == 2) kept.emplace_back(qx, qy);

  for (int k = k0 + 1; k <= n; ++k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    next.reserve(kept.size());
    for (const auto& [qx, qy] : kept)
      for (std::uint64_t bx = 0; bx < 2; ++bx)
        for (std::uint64_t by = 0; by < 2; ++by) {
          const std::uint64_t cx = (qx << 1) | bx;
          const std::uint64_t cy = (qy << 1) | by;
          if (eval_Fk(k, cx, cy) == 2) next.emplace_back(cx, cy);
        }
    kept = std::move(next);
  }

  ExtremalSet out;
  out.m = n + 1;
  out.value = n + 1;
  out.squares = std::move(kept);
  std::sort(out.squares.begin(), out.squares.end());
  return out;
}

SignAssignment signs_from_net(const Net& P) {
  if (P.base != 2) throw ContractError("signs_from_net expects base 2");
  if (P.m < 1) throw ContractError("signs_from_net needs m >= 1");
  P.validate();
  const int m = P.m;
  const int n = m - 1;
  SignAssignment out(n);
  // Bucket the two points of each volume-2^-n box, shape by shape.
  struct Bucket {
    int count = 0;
    std::uint64_t qx[2], qy[2];  // quarter bits
    int h = 0;                   // haar value at the points
  };
  std::vector<Bucket> buckets(std::size_t{1} << n);
  for (int k = 0; k <= n; ++k) {
    std::fill(buckets.begin(), buckets.end(), Bucket{});
    for (const auto& [px, py] : P.points) {
      const std::uint64_t ix = px >> (m - k);
      const std::uint64_t iy = py >> (m - (n - k));
      Bucket& b = buckets[(ix << (n - k)) + iy];
      if (b.count < 2) {
        b.qx[b.count] = (px >> (m - k - 1)) & 1;
        b.qy[b.count] = (py >> (m - (n - k) - 1)) & 1;
      }
      ++b.count;
    }
    for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << k); ++ix)
      for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << (n - k)); ++iy) {
        const Bucket& b = buckets[(ix << (n - k)) + iy];
        if (b.count != 2 || b.qx[0] == b.qx[1] || b.qy[0] == b.qy[1])
          throw InputError(
              "not a net: box (k=" + std::to_string(k) + ", ix=" + std::to_string(ix) +
              ", iy=" + std::to_string(iy) +
              ") does not contain exactly two points in opposite quarters");
        const int h = sgn(b.qx[0]) * sgn(b.qy[0]);
        out.set(k, ix, iy, h);
      }
  }
  return out;
}

ExtremalSet extremal_cells_general(const CoefficientAssignment& C,
                                   const GeneralCellOptions& opts) {
  const int n = C.n();
  const int m = n + 1;
  ExtremalSet out;
  out.m = m;
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, Rational>> cells;
  cells.reserve(std::size_t{1} << m);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << m); ++i) {
    std::uint64_t j = 0;
    Rational value = 0;
    for (int k = n; k >= 0; --k) {
      const std::uint64_t xidx = i >> (m - k);
      const int sx = sgn((i >> (m - k - 1)) & 1);
      const Rational& a = C.coeff(k, xidx, j);
      int eps;
      if (a > 0) {
        eps = +1;
      } else if (a < 0) {
        eps = -1;
      } else if (opts.tie_break_positive) {
        eps = +1;
      } else {
        throw ContractError("extremal_cells_general: zero coefficient at shape k=" +
                            std::to_string(k) + " (use tie_break_positive to override)");
      }
      const int sy = eps * sx;
      j = (j << 1) | (sy > 0 ? 1u : 0u);
      value += abs(a);
    }
    cells.emplace_back(std::make_pair(i, j), std::move(value));
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational best = 0;
  for (auto& [sq, v] : cells) {
    out.squares.push_back(sq);
    if (v > best) best = v;
    out.square_values.push_back(std::move(v));
  }
  out.value = best;
  return out;
}

}  // namespace sbnet
