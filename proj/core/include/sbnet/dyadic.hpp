#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sbnet/errors.hpp"
#include "sbnet/rational.hpp"

namespace sbnet {

// Levels are capped well below the shift width so that index arithmetic in
// uint64 never overflows.
inline constexpr int kMaxLevel = 60;

/// A point of [0,1) on the dyadic grid of a declared resolution:
/// value = num / 2^level. All evaluations are exact on grid points.
struct GridPoint1 {
  std::uint64_t num = 0;
  int level = 0;

  double value() const { return static_cast<double>(num) / static_cast<double>(std::uint64_t{1} << level); }
  Rational exact() const { return Rational(BigInt(num), BigInt(1) << level); }

  /// Same point expressed at a finer level.
  GridPoint1 refined(int finer_level) const;

  friend bool operator==(const GridPoint1&, const GridPoint1&) = default;
};

/// Snap a real x in [0,1) to the grid: x -> floor(x * 2^level) / 2^level.
GridPoint1 snap1(double x, int level);

struct GridPoint2 {
  GridPoint1 x, y;
  friend bool operator==(const GridPoint2&, const GridPoint2&) = default;
};

GridPoint2 snap2(double x, double y, int level);

/// Half-open dyadic interval [index*2^-level, (index+1)*2^-level).
struct DyadicInterval {
  int level = 0;
  std::uint64_t index = 0;

  DyadicInterval() = default;
  DyadicInterval(int level_, std::uint64_t index_);

  DyadicInterval left_child() const { return {level + 1, 2 * index}; }
  DyadicInterval right_child() const { return {level + 1, 2 * index + 1}; }
  DyadicInterval parent() const;

  bool contains(GridPoint1 p) const;
  Rational width() const { return Rational(1, BigInt(1) << level); }
  Rational left() const { return Rational(BigInt(index), BigInt(1) << level); }

  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

/// The unique level-k interval containing a grid point.
DyadicInterval interval_containing(int level, GridPoint1 p);

/// One-dimensional Haar function, L-infinity normalized:
/// -1 on the left half of I, +1 on the right half, 0 outside.
int haar1(const DyadicInterval& I, GridPoint1 x);

/// Dyadic box R = Ix x Iy in [0,1)^2.
struct DyadicBox2 {
  DyadicInterval x_interval, y_interval;

  bool contains(const GridPoint2& p) const {
    return x_interval.contains(p.x) && y_interval.contains(p.y);
  }
  Rational volume() const { return x_interval.width() * y_interval.width(); }

  friend auto operator<=>(const DyadicBox2&, const DyadicBox2&) = default;
};

/// Two-dimensional Haar function on a box.
inline int haar2(const DyadicBox2& R, const GridPoint2& p) {
  return haar1(R.x_interval, p.x) * haar1(R.y_interval, p.y);
}

/// The unique box with |R1| = 2^-shape_k, |R2| = 2^-(n-shape_k) containing p.
DyadicBox2 box_containing(int shape_k, int n, const GridPoint2& p);

enum class Quarter { BL, BR, TL, TR };

inline Quarter opposite(Quarter q) {
  switch (q) {
    case Quarter::BL: return Quarter::TR;
    case Quarter::BR: return Quarter::TL;
    case Quarter::TL: return Quarter::BR;
    default: return Quarter::BL;
  }
}

const char* to_string(Quarter q);

/// Which of the four half-splits of R contains p. Throws ContractError if
/// p is outside R.
Quarter quarter_of(const DyadicBox2& R, const GridPoint2& p);

/// Half-open b-adic interval [index*b^-level, (index+1)*b^-level).
struct BadicInterval {
  int base = 2;
  int level = 0;
  std::uint64_t index = 0;

  BadicInterval() = default;
  BadicInterval(int base_, int level_, std::uint64_t index_);

  BadicInterval child(int digit) const;
  bool contains_cell(std::uint64_t cell, int cell_level) const;
};

/// b^e as uint64; throws on overflow of the 60-bit guard.
std::uint64_t ipow(std::uint64_t b, int e);

}  // namespace sbnet
