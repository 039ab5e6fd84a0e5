#include "sbnet/discrepancy.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sbnet {

PointSetQ PointSetQ::from_net(const Net& P) {
  P.validate();
  PointSetQ out;
  out.den = P.side();
  out.pts = P.points;
  return out;
}

PointSetQ PointSetQ::random(std::uint64_t count, int grid_level, std::uint64_t seed) {
  if (grid_level < 1 || grid_level > 62)
    throw ContractError("random point set: grid_level out of range");
  PointSetQ out;
  out.den = std::uint64_t{1} << grid_level;
  out.pts.reserve(count);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t x = rng() >> (64 - grid_level);
    const std::uint64_t y = rng() >> (64 - grid_level);
    out.pts.emplace_back(x, y);
  }
  return out;
}

void PointSetQ::validate() const {
  if (den == 0) throw InputError("point set denominator must be positive");
  for (const auto& [x, y] : pts)
    if (x >= den || y >= den) throw InputError("point coordinate outside [0,1)");
}

Rational discrepancy_at(const PointSetQ& P, const Rational& x1, const Rational& x2) {
  P.validate();
  std::uint64_t count = 0;
  for (const auto& [px, py] : P.pts)
    if (Rational(px, P.den) < x1 && Rational(py, P.den) < x2) ++count;
  return Rational(count) - Rational(P.pts.size()) * x1 * x2;
}

DiscrepancyReport star_discrepancy(const PointSetQ& P) {
  P.validate();
  const std::uint64_t N = P.pts.size();
  if (N == 0) throw ContractError("star_discrepancy needs a nonempty set");
  if (N > 10000) throw BudgetError("star_discrepancy is guarded to N <= 10^4");

  // Critical coordinates: each point coordinate and 1. The positive part
  // of the sup is approached from above a coordinate (closed count), the
  // negative part is attained at the coordinate itself (open count).
  std::vector<std::uint64_t> xs, ys;
  xs.reserve(N + 1);
  ys.reserve(N + 1);
  for (const auto& [px, py] : P.pts) {
    xs.push_back(px);
    ys.push_back(py);
  }
  xs.push_back(P.den);
  ys.push_back(P.den);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  auto yrank = [&](std::uint64_t v) {
    return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
  };

  auto sorted_pts = P.pts;
  std::sort(sorted_pts.begin(), sorted_pts.end());

  using I128 = __int128;
  const I128 den2 = static_cast<I128>(P.den) * static_cast<I128>(P.den);

  std::vector<std::uint64_t> cnt(ys.size(), 0);   // points with px <= current X, per y rank
  std::vector<std::uint64_t> pref_lt(ys.size() + 1, 0), pref_le(ys.size() + 1, 0);

  I128 best = -1;
  std::uint64_t best_x = 0, best_y = 0;
  bool best_open = false;

  std::size_t next_pt = 0;
  for (const std::uint64_t X : xs) {
    // prefix counts before adding px == X: gives #(px < X, py < Y)
    pref_lt[0] = 0;
    for (std::size_t r = 0; r < ys.size(); ++r) pref_lt[r + 1] = pref_lt[r] + cnt[r];
    while (next_pt < sorted_pts.size() && sorted_pts[next_pt].first <= X) {
      ++cnt[yrank(sorted_pts[next_pt].second)];
      ++next_pt;
    }
    pref_le[0] = 0;
    for (std::size_t r = 0; r < ys.size(); ++r) pref_le[r + 1] = pref_le[r] + cnt[r];

    for (std::size_t ry = 0; ry < ys.size(); ++ry) {
      const std::uint64_t Y = ys[ry];
      const I128 nxy = static_cast<I128>(N) * X * Y;
      const std::uint64_t c_le = pref_le[ry + 1];  // py <= Y
      const std::uint64_t c_lt = pref_lt[ry];      // py < Y, px < X
      const I128 vpos = static_cast<I128>(c_le) * den2 - nxy;
      const I128 vneg = nxy - static_cast<I128>(c_lt) * den2;
      if (vpos > best) {
        best = vpos;
        best_x = X;
        best_y = Y;
        best_open = c_le != c_lt;
      }
      if (vneg > best) {
        best = vneg;
        best_x = X;
        best_y = Y;
        best_open = false;
      }
    }
  }

  // best >= 0 always (the corner (0,0) gives 0); fits in 128 bits.
  BigInt best_big = static_cast<std::uint64_t>(best >> 64);
  best_big <<= 64;
  best_big += static_cast<std::uint64_t>(best & ~std::uint64_t{0});

  DiscrepancyReport rep;
  rep.N = N;
  rep.value = Rational(best_big, BigInt(P.den) * BigInt(P.den));
  rep.wx = Rational(best_x, P.den);
  rep.wy = Rational(best_y, P.den);
  rep.open_attainment = best_open;
  return rep;
}

std::optional<CornerWitness> dyadic_zero_check(const Net& P) {
  P.validate();
  const std::uint64_t b = static_cast<std::uint64_t>(P.base);
  const int m = P.m;
  for (int k1 = 0; k1 <= m; ++k1) {
    const int k2 = m - k1;
    const std::uint64_t nx = ipow(b, k1);
    const std::uint64_t ny = ipow(b, k2);
    const std::uint64_t wx = ipow(b, m - k1);
    const std::uint64_t wy = ipow(b, m - k2);
    // Box-grid counts, then 2-D prefix sums give every anchored corner.
    std::vector<std::uint64_t> counts((nx + 1) * (ny + 1), 0);
    for (const auto& [px, py] : P.points)
      ++counts[(px / wx + 1) * (ny + 1) + (py / wy + 1)];
    for (std::uint64_t i = 1; i <= nx; ++i)
      for (std::uint64_t j = 1; j <= ny; ++j)
        counts[i * (ny + 1) + j] += counts[(i - 1) * (ny + 1) + j] +
                                    counts[i * (ny + 1) + j - 1] -
                                    counts[(i - 1) * (ny + 1) + j - 1];
    for (std::uint64_t i = 0; i <= nx; ++i)
      for (std::uint64_t j = 0; j <= ny; ++j) {
        // N * (i b^-k1) * (j b^-k2) = i * j since k1 + k2 = m.
        const std::uint64_t expected = i * j;
        const std::uint64_t got = counts[i * (ny + 1) + j];
        if (got != expected) {
          CornerWitness w;
          w.k1 = k1;
          w.k2 = k2;
          w.i = i;
          w.j = j;
          w.value = Rational(BigInt(got) - BigInt(expected));
          return w;
        }
      }
  }
  return std::nullopt;
}

std::string critical_grid_csv(const PointSetQ& P) {
  P.validate();
  std::vector<std::uint64_t> xs, ys;
  for (const auto& [px, py] : P.pts) {
    xs.push_back(px);
    ys.push_back(py);
  }
  xs.push_back(P.den);
  ys.push_back(P.den);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::ostringstream out;
  out << "x1,x2,value\n";
  for (const std::uint64_t X : xs)
    for (const std::uint64_t Y : ys) {
      const Rational v = discrepancy_at(P, Rational(X, P.den), Rational(Y, P.den));
      out << static_cast<double>(X) / static_cast<double>(P.den) << ','
          << static_cast<double>(Y) / static_cast<double>(P.den) << ','
          << to_double(v) << '\n';
    }
  return out.str();
}

std::string render_svg(const Net& P) {
  P.validate();
  const int size = 512;
  const double s = static_cast<double>(size) / static_cast<double>(P.side());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  // b-adic grid lines, two levels deep.
  for (int level = 1; level <= 2 && level <= P.m; ++level) {
    const std::uint64_t parts = ipow(static_cast<std::uint64_t>(P.base), level);
    const char* color = level == 1 ? "#888888" : "#dddddd";
    for (std::uint64_t i = 1; i < parts; ++i) {
      const double c = static_cast<double>(size) * static_cast<double>(i) / static_cast<double>(parts);
      out << "<line x1=\"" << c << "\" y1=\"0\" x2=\"" << c << "\" y2=\"" << size
          << "\" stroke=\"" << color << "\"/>\n";
      out << "<line x1=\"0\" y1=\"" << c << "\" x2=\"" << size << "\" y2=\"" << c
          << "\" stroke=\"" << color << "\"/>\n";
    }
  }
  for (const auto& [px, py] : P.points) {
    const double cx = (static_cast<double>(px) + 0.5) * s;
    const double cy = static_cast<double>(size) - (static_cast<double>(py) + 0.5) * s;
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sbnet
