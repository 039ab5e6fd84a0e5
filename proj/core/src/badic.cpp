#include "sbnet/badic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace sbnet {

namespace {

BigInt factorial(int b) {
  BigInt f = 1;
  for (int i = 2; i <= b; ++i) f *= i;
  return f;
}

// Lexicographic permutation of {0..b-1} with the given rank.
std::vector<int> unrank_perm(int b, std::uint64_t rank) {
  std::vector<int> pool(b);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(b, 1);
  for (int i = 1; i < b; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<int> out;
  out.reserve(b);
  for (int i = b - 1; i >= 0; --i) {
    const std::uint64_t f = fact[i];
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

}  // namespace

PermAssignment::PermAssignment(int base, int m) : base_(base), m_(m) {
  if (base < 2) throw ContractError("base must be >= 2");
  if (m < 1) throw ContractError("scale m must be >= 1");
  ipow(static_cast<std::uint64_t>(base), m);  // range guard
  table_.assign(box_count() * static_cast<std::size_t>(base), 0);
  // Identity permutations by default.
  std::vector<int> id(static_cast<std::size_t>(base));
  std::iota(id.begin(), id.end(), 0);
  for (int k = 0; k < m_; ++k)
    for (std::uint64_t ix = 0; ix < ipow(base_, k); ++ix)
      for (std::uint64_t iy = 0; iy < ipow(base_, m_ - 1 - k); ++iy)
        set_perm(k, ix, iy, id);
}

std::size_t PermAssignment::box_count() const {
  return static_cast<std::size_t>(m_) * static_cast<std::size_t>(ipow(base_, m_ - 1));
}

std::size_t PermAssignment::offset(int k, std::uint64_t ix, std::uint64_t iy) const {
  if (k < 0 || k >= m_ || ix >= ipow(base_, k) || iy >= ipow(base_, m_ - 1 - k))
    throw ContractError("b-adic box index out of range");
  const std::uint64_t per_shape = ipow(base_, m_ - 1);
  const std::uint64_t strip = ipow(base_, m_ - 1 - k);
  return (static_cast<std::size_t>(k) * per_shape + ix * strip + iy) *
         static_cast<std::size_t>(base_);
}

int PermAssignment::perm(int k, std::uint64_t ix, std::uint64_t iy, int digit) const {
  if (digit < 0 || digit >= base_) throw ContractError("digit out of range");
  return table_[offset(k, ix, iy) + static_cast<std::size_t>(digit)];
}

void PermAssignment::set_perm(int k, std::uint64_t ix, std::uint64_t iy,
                              const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != base_)
    throw InputError("permutation size must equal the base");
  std::vector<bool> seen(static_cast<std::size_t>(base_), false);
  for (const int v : pi) {
    if (v < 0 || v >= base_ || seen[static_cast<std::size_t>(v)])
      throw InputError("not a permutation of {0..b-1}");
    seen[static_cast<std::size_t>(v)] = true;
  }
  const std::size_t off = offset(k, ix, iy);
  for (int i = 0; i < base_; ++i)
    table_[off + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(pi[static_cast<std::size_t>(i)]);
}

std::vector<int> PermAssignment::get_perm(int k, std::uint64_t ix, std::uint64_t iy) const {
  const std::size_t off = offset(k, ix, iy);
  std::vector<int> pi(static_cast<std::size_t>(base_));
  for (int i = 0; i < base_; ++i) pi[static_cast<std::size_t>(i)] = table_[off + static_cast<std::size_t>(i)];
  return pi;
}

PermAssignment PermAssignment::random(int base, int m, std::uint64_t seed) {
  PermAssignment PA(base, m);
  std::mt19937_64 rng(seed);
  std::vector<int> pi(static_cast<std::size_t>(base));
  for (int k = 0; k < m; ++k)
    for (std::uint64_t ix = 0; ix < ipow(base, k); ++ix)
      for (std::uint64_t iy = 0; iy < ipow(base, m - 1 - k); ++iy) {
        std::iota(pi.begin(), pi.end(), 0);
        // Hand-rolled Fisher-Yates: std::shuffle is not pinned across
        // standard library implementations.
        for (int i = base - 1; i > 0; --i) {
          const std::size_t j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
          std::swap(pi[static_cast<std::size_t>(i)], pi[j]);
        }
        PA.set_perm(k, ix, iy, pi);
      }
  return PA;
}

PermAssignment PermAssignment::from_signs(const SignAssignment& A) {
  const int m = A.n() + 1;
  PermAssignment PA(2, m);
  const std::vector<int> id{0, 1};
  const std::vector<int> swap{1, 0};
  for_each_box(A.n(), [&](int k, std::uint64_t ix, std::uint64_t iy) {
    PA.set_perm(k, ix, iy, A.sign(k, ix, iy) > 0 ? id : swap);
  });
  return PA;
}

int phi_eval(const BadicInterval& Rx, const BadicInterval& Ry,
             const std::vector<int>& pi, std::uint64_t cx, std::uint64_t cy,
             int cell_level) {
  if (Rx.base != Ry.base) throw ContractError("phi_eval: mixed bases");
  const int b = Rx.base;
  if (static_cast<int>(pi.size()) != b) throw ContractError("phi_eval: bad permutation size");
  if (cell_level <= Rx.level || cell_level <= Ry.level)
    throw ContractError("phi_eval: cell is coarser than the subbox grid");
  if (!Rx.contains_cell(cx, cell_level) || !Ry.contains_cell(cy, cell_level)) return 0;
  const std::uint64_t bx = static_cast<std::uint64_t>(b);
  const int xdigit = static_cast<int>((cx / ipow(bx, cell_level - Rx.level - 1)) % bx);
  const int ydigit = static_cast<int>((cy / ipow(bx, cell_level - Ry.level - 1)) % bx);
  return ydigit == pi[static_cast<std::size_t>(xdigit)] ? +1 : -1;
}

int eval_sum_b(const PermAssignment& PA, std::uint64_t cx, std::uint64_t cy) {
  const int b = PA.base();
  const int m = PA.m();
  const std::uint64_t bb = static_cast<std::uint64_t>(b);
  if (cx >= ipow(bb, m) || cy >= ipow(bb, m))
    throw ContractError("cell outside the b^m grid");
  int s = 0;
  for (int k = 0; k < m; ++k) {
    const int l = m - 1 - k;
    const std::uint64_t xidx = cx / ipow(bb, m - k);
    const std::uint64_t yidx = cy / ipow(bb, m - l);
    const int xd = static_cast<int>((cx / ipow(bb, m - k - 1)) % bb);
    const int yd = static_cast<int>((cy / ipow(bb, m - l - 1)) % bb);
    s += (PA.perm(k, xidx, yidx, xd) == yd) ? +1 : -1;
  }
  return s;
}

BadicExtremal extremal_cells_b(const PermAssignment& PA) {
  const int b = PA.base();
  const int m = PA.m();
  const std::uint64_t bb = static_cast<std::uint64_t>(b);
  const std::uint64_t side = ipow(bb, m);
  BadicExtremal out;
  out.value = m;
  out.net.base = b;
  out.net.m = m;
  out.net.points.reserve(side);
  // Per x-cell, the m positivity constraints fix the y digits coarse to fine.
  for (std::uint64_t i = 0; i < side; ++i) {
    std::uint64_t j = 0;
    for (int k = m - 1; k >= 0; --k) {
      const std::uint64_t xidx = i / ipow(bb, m - k);
      const int xd = static_cast<int>((i / ipow(bb, m - k - 1)) % bb);
      j = j * bb + static_cast<std::uint64_t>(PA.perm(k, xidx, j, xd));
    }
    out.net.points.emplace_back(i, j);
  }
  out.net.canonicalize();
  return out;
}

PermAssignment perms_from_net(const Net& P) {
  P.validate();
  const int b = P.base;
  const int m = P.m;
  if (m < 1) throw ContractError("perms_from_net needs m >= 1");
  const std::uint64_t bb = static_cast<std::uint64_t>(b);
  PermAssignment PA(b, m);
  std::vector<int> pi(static_cast<std::size_t>(b));
  for (int k = 0; k < m; ++k) {
    const int l = m - 1 - k;
    const std::uint64_t nx = ipow(bb, k);
    const std::uint64_t ny = ipow(bb, l);
    // rowcol[box][row] = column of the point with that x-digit, or -1.
    std::vector<int> rowcol(nx * ny * bb, -1);
    std::vector<std::uint64_t> counts(nx * ny, 0);
    for (const auto& [px, py] : P.points) {
      const std::uint64_t ix = px / ipow(bb, m - k);
      const std::uint64_t iy = py / ipow(bb, m - l);
      const std::uint64_t box = ix * ny + iy;
      const int row = static_cast<int>((px / ipow(bb, m - k - 1)) % bb);
      const int col = static_cast<int>((py / ipow(bb, m - l - 1)) % bb);
      ++counts[box];
      if (rowcol[box * bb + static_cast<std::uint64_t>(row)] != -1)
        throw InputError("not a net: two points share a row of a b-adic box");
      rowcol[box * bb + static_cast<std::uint64_t>(row)] = col;
    }
    for (std::uint64_t ix = 0; ix < nx; ++ix)
      for (std::uint64_t iy = 0; iy < ny; ++iy) {
        const std::uint64_t box = ix * ny + iy;
        if (counts[box] != bb)
          throw InputError("not a net: a volume-b^-(m-1) box does not contain exactly b points");
        std::vector<bool> seen(static_cast<std::size_t>(b), false);
        for (int r = 0; r < b; ++r) {
          const int c = rowcol[box * bb + static_cast<std::uint64_t>(r)];
          if (c < 0 || seen[static_cast<std::size_t>(c)])
            throw InputError("not a net: box points do not form a permutation pattern");
          seen[static_cast<std::size_t>(c)] = true;
          pi[static_cast<std::size_t>(r)] = c;
        }
        PA.set_perm(k, ix, iy, pi);
      }
  }
  return PA;
}

BigInt count_nets_b(int base, int m) {
  if (base < 2 || m < 1) throw ContractError("count_nets_b: base >= 2, m >= 1 required");
  BigInt exponent = BigInt(m) * pow(BigInt(base), m - 1);
  return pow(factorial(base), exponent.convert_to<unsigned>());
}

std::vector<Net> enumerate_nets_b(int base, int m) {
  const BigInt total = count_nets_b(base, m);
  if (total > 1000000)
    throw BudgetError("enumerate_nets_b: (b!)^(m b^(m-1)) exceeds the 10^6 budget");
  PermAssignment PA(base, m);
  const std::uint64_t bf = factorial(base).convert_to<std::uint64_t>();
  const std::size_t boxes = PA.box_count();
  std::vector<std::uint64_t> ranks(boxes, 0);
  // Precompute (k, ix, iy) in table order.
  struct BoxId {
    int k;
    std::uint64_t ix, iy;
  };
  std::vector<BoxId> ids;
  ids.reserve(boxes);
  for (int k = 0; k < m; ++k)
    for (std::uint64_t ix = 0; ix < ipow(base, k); ++ix)
      for (std::uint64_t iy = 0; iy < ipow(base, m - 1 - k); ++iy)
        ids.push_back({k, ix, iy});

  std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> seen;
  std::vector<Net> out;
  for (const auto& id : ids) PA.set_perm(id.k, id.ix, id.iy, unrank_perm(base, 0));
  while (true) {
    Net net = extremal_cells_b(PA).net;
    if (seen.insert(net.points).second) out.push_back(std::move(net));
    // Mixed-radix odometer over permutation ranks.
    std::size_t pos = 0;
    while (pos < boxes) {
      if (++ranks[pos] < bf) {
        PA.set_perm(ids[pos].k, ids[pos].ix, ids[pos].iy, unrank_perm(base, ranks[pos]));
        break;
      }
      ranks[pos] = 0;
      PA.set_perm(ids[pos].k, ids[pos].ix, ids[pos].iy, unrank_perm(base, 0));
      ++pos;
    }
    if (pos == boxes) break;
  }
  return out;
}

}  // namespace sbnet
