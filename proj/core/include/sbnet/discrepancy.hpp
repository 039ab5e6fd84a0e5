#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbnet/nets.hpp"
#include "sbnet/rational.hpp"

namespace sbnet {

/// A finite point set with rational coordinates p / den in [0,1)^2.
struct PointSetQ {
  std::uint64_t den = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;

  static PointSetQ from_net(const Net& P);
  /// Uniform points on the 2^-grid_level grid, seeded (mt19937_64).
  static PointSetQ random(std::uint64_t count, int grid_level, std::uint64_t seed);
  std::uint64_t size() const { return pts.size(); }
  void validate() const;
};

/// D_N(x) = #(P in [0,x1) x [0,x2)) - N x1 x2, exact.
Rational discrepancy_at(const PointSetQ& P, const Rational& x1, const Rational& x2);

struct DiscrepancyReport {
  Rational value;   // sup |D_N|, unnormalized
  Rational wx, wy;  // witness corner
  bool open_attainment = false;  // value reached as a limit x -> witness+
  std::uint64_t N = 0;
};

/// Exact star discrepancy sup_{x in [0,1]^2} |D_N(x)| by critical-corner
/// enumeration. Guarded to N <= 10^4.
DiscrepancyReport star_discrepancy(const PointSetQ& P);

/// Check that D_N vanishes at every anchored corner (i b^-k1, j b^-k2)
/// with k1 + k2 = m. Returns the first violating corner if any.
struct CornerWitness {
  int k1 = 0, k2 = 0;
  std::uint64_t i = 0, j = 0;
  Rational value;
};
std::optional<CornerWitness> dyadic_zero_check(const Net& P);

/// CSV of the critical-corner grid: x1,x2,value per line.
std::string critical_grid_csv(const PointSetQ& P);

/// Static scatter plot of the point set with b-adic grid lines.
std::string render_svg(const Net& P);

}  // namespace sbnet
