#include "sbnet/nets.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sbnet/extremal.hpp"

namespace sbnet {

void Net::canonicalize() { std::sort(points.begin(), points.end()); }

void Net::validate() const {
  if (base < 2) throw InputError("net base must be >= 2");
  if (m < 0) throw InputError("net scale m must be >= 0");
  const std::uint64_t s = side();
  if (points.size() != s)
    throw InputError("net must contain exactly b^m points, got " +
                     std::to_string(points.size()));
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].first >= s || sorted[i].second >= s)
      throw InputError("net point coordinate out of range");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw InputError("duplicate net point");
  }
}

std::string NetViolation::describe(int base) const {
  return "box [" + std::to_string(ix) + "*" + std::to_string(base) + "^-" +
         std::to_string(kx) + ", ...) x [" + std::to_string(iy) + "*" +
         std::to_string(base) + "^-" + std::to_string(ky) +
         ", ...) contains " + std::to_string(count) + " points";
}

NetCheck is_net(const Net& P, int t) {
  P.validate();
  if (t < 0 || t > P.m) throw ContractError("is_net: t out of range");
  const std::uint64_t b = static_cast<std::uint64_t>(P.base);
  const std::uint64_t expected = ipow(b, t);
  // Every shape (kx, ky) with kx + ky = m - t.
  for (int kx = 0; kx + t <= P.m; ++kx) {
    const int ky = P.m - t - kx;
    const std::uint64_t nx = ipow(b, kx);
    const std::uint64_t ny = ipow(b, ky);
    const std::uint64_t wx = ipow(b, P.m - kx);
    const std::uint64_t wy = ipow(b, P.m - ky);
    std::vector<std::uint64_t> counts(nx * ny, 0);
    for (const auto& [px, py] : P.points) ++counts[(px / wx) * ny + (py / wy)];
    for (std::uint64_t ix = 0; ix < nx; ++ix)
      for (std::uint64_t iy = 0; iy < ny; ++iy)
        if (counts[ix * ny + iy] != expected) {
          NetCheck fail;
          fail.ok = false;
          fail.witness = NetViolation{kx, ky, ix, iy, counts[ix * ny + iy]};
          return fail;
        }
  }
  return {true, std::nullopt};
}

namespace {

std::uint64_t reverse_bits(std::uint64_t x, int width) {
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i) r |= ((x >> i) & 1) << (width - 1 - i);
  return r;
}

}  // namespace

Net van_der_corput(int m) {
  if (m < 0 || m > 30) throw ContractError("van_der_corput: m out of range");
  Net P;
  P.base = 2;
  P.m = m;
  P.points.reserve(std::size_t{1} << m);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
    P.points.emplace_back(x, reverse_bits(x, m));
  return P;
}

Net digit_shifted_vdc(int m, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != m)
    throw InputError("digit shift length must equal m");
  // sigma[0] shifts digit x_1, the most significant bit.
  std::uint64_t mask = 0;
  for (int i = 0; i < m; ++i) {
    if (sigma[i] != 0 && sigma[i] != 1) throw InputError("shift digits must be 0/1");
    mask |= static_cast<std::uint64_t>(sigma[i]) << (m - 1 - i);
  }
  Net P;
  P.base = 2;
  P.m = m;
  P.points.reserve(std::size_t{1} << m);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
    P.points.emplace_back(x, reverse_bits(x ^ mask, m));
  return P;
}

SignAssignment layer_signs(const std::vector<int>& sigma) {
  const int m = static_cast<int>(sigma.size());
  if (m < 1) throw InputError("layer_signs needs at least one layer");
  const int n = m - 1;
  SignAssignment A(n);
  for (int k = 0; k <= n; ++k) {
    if (sigma[k] != 0 && sigma[k] != 1) throw InputError("layer flags must be 0/1");
    if (sigma[k] == 0) continue;
    for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << k); ++ix)
      for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << (n - k)); ++iy)
        A.set(k, ix, iy, -1);
  }
  return A;
}

IntervalSigns::IntervalSigns(int n_, int fill) : n(n_) {
  if (n < 0 || n > kMaxLevel) throw ContractError("IntervalSigns: n out of range");
  if (fill != 1 && fill != -1) throw ContractError("signs must be +-1");
  s.assign((std::size_t{1} << (n + 1)) - 1, static_cast<std::int8_t>(fill));
}

void IntervalSigns::set(int level, std::uint64_t index, int value) {
  if (value != 1 && value != -1) throw ContractError("signs must be +-1");
  if (level < 0 || level > n || index >= (std::uint64_t{1} << level))
    throw ContractError("interval index out of range");
  s[(std::size_t{1} << level) - 1 + index] = static_cast<std::int8_t>(value);
}

IntervalSigns IntervalSigns::random(int n, std::uint64_t seed) {
  IntervalSigns out(n);
  std::mt19937_64 rng(seed);
  for (auto& v : out.s) v = (rng() & 1) ? std::int8_t{1} : std::int8_t{-1};
  return out;
}

SignAssignment product_signs(const IntervalSigns& eps1, const IntervalSigns& eps2) {
  if (eps1.n != eps2.n) throw InputError("product_signs: scale mismatch");
  const int n = eps1.n;
  SignAssignment A(n);
  for_each_box(n, [&](int k, std::uint64_t ix, std::uint64_t iy) {
    A.set(k, ix, iy, eps1.at(k, ix) * eps2.at(n - k, iy));
  });
  return A;
}

std::vector<Net> enumerate_nets(int m) {
  if (m < 1) throw ContractError("enumerate_nets: m must be >= 1");
  if (m > 3) throw BudgetError("enumerate_nets is guarded to m <= 3");
  const int n = m - 1;
  const std::size_t bits = hyperbolic_table_size(n);
  std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> seen;
  std::vector<Net> out;
  SignAssignment A(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    std::uint64_t c = code;
    for_each_box(n, [&](int k, std::uint64_t ix, std::uint64_t iy) {
      A.set(k, ix, iy, (c & 1) ? +1 : -1);
      c >>= 1;
    });
    ExtremalSet E = extremal_squares(A);
    if (seen.insert(E.squares).second) out.push_back(E.as_net());
  }
  return out;
}

Net snap(const std::vector<std::pair<double, double>>& points, int m, int base) {
  if (base < 2) throw ContractError("snap: base must be >= 2");
  const std::uint64_t s = ipow(static_cast<std::uint64_t>(base), m);
  Net P;
  P.base = base;
  P.m = m;
  P.points.reserve(points.size());
  for (const auto& [x, y] : points) {
    if (!(x >= 0 && x < 1 && y >= 0 && y < 1))
      throw ContractError("snap: point outside [0,1)^2");
    P.points.emplace_back(static_cast<std::uint64_t>(std::floor(x * static_cast<double>(s))),
                          static_cast<std::uint64_t>(std::floor(y * static_cast<double>(s))));
  }
  return P;
}

}  // namespace sbnet
