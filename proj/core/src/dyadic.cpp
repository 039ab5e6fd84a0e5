#include "sbnet/dyadic.hpp"

#include <cmath>

namespace sbnet {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxLevel)
    throw ContractError("level out of range: " + std::to_string(level));
}

}  // namespace

GridPoint1 GridPoint1::refined(int finer_level) const {
  check_level(finer_level);
  if (finer_level < level) throw ContractError("refined() needs a finer level");
  return {num << (finer_level - level), finer_level};
}

GridPoint1 snap1(double x, int level) {
  check_level(level);
  if (!(x >= 0.0 && x < 1.0)) throw ContractError("point outside [0,1)");
  const double scaled = std::floor(x * static_cast<double>(std::uint64_t{1} << level));
  return {static_cast<std::uint64_t>(scaled), level};
}

GridPoint2 snap2(double x, double y, int level) {
  return {snap1(x, level), snap1(y, level)};
}

DyadicInterval::DyadicInterval(int level_, std::uint64_t index_)
    : level(level_), index(index_) {
  check_level(level_);
  if (index >= (std::uint64_t{1} << level))
    throw ContractError("dyadic interval index out of range");
}

DyadicInterval DyadicInterval::parent() const {
  if (level == 0) throw ContractError("[0,1) has no parent");
  return {level - 1, index / 2};
}

bool DyadicInterval::contains(GridPoint1 p) const {
  if (p.num >= (std::uint64_t{1} << p.level)) throw ContractError("point outside [0,1)");
  // Compare at the common refinement of the two levels.
  const int L = std::max(p.level, level);
  const std::uint64_t pn = p.num << (L - p.level);
  const std::uint64_t lo = index << (L - level);
  const std::uint64_t w = std::uint64_t{1} << (L - level);
  return pn >= lo && pn < lo + w;
}

DyadicInterval interval_containing(int level, GridPoint1 p) {
  check_level(level);
  if (p.num >= (std::uint64_t{1} << p.level)) throw ContractError("point outside [0,1)");
  if (level <= p.level) return {level, p.num >> (p.level - level)};
  return {level, p.num << (level - p.level)};
}

int haar1(const DyadicInterval& I, GridPoint1 x) {
  if (!I.contains(x)) return 0;
  return I.left_child().contains(x) ? -1 : +1;
}

DyadicBox2 box_containing(int shape_k, int n, const GridPoint2& p) {
  if (n < 0 || shape_k < 0 || shape_k > n)
    throw ContractError("shape_k out of range");
  return {interval_containing(shape_k, p.x), interval_containing(n - shape_k, p.y)};
}

const char* to_string(Quarter q) {
  switch (q) {
    case Quarter::BL: return "BL";
    case Quarter::BR: return "BR";
    case Quarter::TL: return "TL";
    default: return "TR";
  }
}

Quarter quarter_of(const DyadicBox2& R, const GridPoint2& p) {
  if (!R.contains(p)) throw ContractError("point not inside the box");
  const bool right = R.x_interval.right_child().contains(p.x);
  const bool top = R.y_interval.right_child().contains(p.y);
  if (right) return top ? Quarter::TR : Quarter::BR;
  return top ? Quarter::TL : Quarter::BL;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << kMaxLevel) / b)
      throw BudgetError("b^m exceeds the 60-bit index guard");
    r *= b;
  }
  return r;
}

BadicInterval::BadicInterval(int base_, int level_, std::uint64_t index_)
    : base(base_), level(level_), index(index_) {
  if (base < 2) throw ContractError("base must be >= 2");
  check_level(level_);
  if (index >= ipow(base, level)) throw ContractError("b-adic interval index out of range");
}

BadicInterval BadicInterval::child(int digit) const {
  if (digit < 0 || digit >= base) throw ContractError("digit out of range");
  return {base, level + 1, index * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digit)};
}

bool BadicInterval::contains_cell(std::uint64_t cell, int cell_level) const {
  if (cell_level < level) throw ContractError("cell coarser than interval");
  return cell / ipow(base, cell_level - level) == index;
}

}  // namespace sbnet
