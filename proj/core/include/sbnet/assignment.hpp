#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sbnet/dyadic.hpp"
#include "sbnet/rational.hpp"

namespace sbnet {

// Boxes of volume 2^-n come in n+1 shapes; shape k has |R1| = 2^-k and
// |R2| = 2^-(n-k), giving 2^k * 2^(n-k) = 2^n boxes per shape. The flat
// table index is k * 2^n + (ix << (n-k)) + iy.
inline std::size_t hyperbolic_table_size(int n) {
  return static_cast<std::size_t>(n + 1) << n;
}

inline std::size_t hyperbolic_offset(int n, int k, std::uint64_t ix, std::uint64_t iy) {
  return (static_cast<std::size_t>(k) << n) + static_cast<std::size_t>((ix << (n - k)) + iy);
}

/// +-1 coefficient for every dyadic box of volume 2^-n in [0,1)^2.
class SignAssignment {
 public:
  explicit SignAssignment(int n, int fill = +1);

  int n() const { return n_; }
  int scale() const { return n_; }

  int sign(int k, std::uint64_t ix, std::uint64_t iy) const {
    return table_[hyperbolic_offset(n_, k, ix, iy)];
  }
  void set(int k, std::uint64_t ix, std::uint64_t iy, int value);

  int sign_of(const DyadicBox2& R) const;
  DyadicBox2 box(int k, std::uint64_t ix, std::uint64_t iy) const;

  /// Every sign flipped.
  SignAssignment negated() const;

  /// Deterministic seeded fill; the generator is pinned to mt19937_64 so
  /// outputs are reproducible across platforms.
  static SignAssignment random(int n, std::uint64_t seed);

  friend bool operator==(const SignAssignment&, const SignAssignment&) = default;

 private:
  int n_;
  std::vector<std::int8_t> table_;
};

/// Real (exact rational) coefficient for every box of volume 2^-n.
class CoefficientAssignment {
 public:
  explicit CoefficientAssignment(int n, const Rational& fill = Rational(0));
  explicit CoefficientAssignment(const SignAssignment& signs);

  int n() const { return n_; }

  const Rational& coeff(int k, std::uint64_t ix, std::uint64_t iy) const {
    return table_[hyperbolic_offset(n_, k, ix, iy)];
  }
  void set(int k, std::uint64_t ix, std::uint64_t iy, Rational value);

  /// Nonzero random rationals with small numerator/denominator, seeded.
  static CoefficientAssignment random(int n, std::uint64_t seed);

  friend bool operator==(const CoefficientAssignment&, const CoefficientAssignment&) = default;

 private:
  int n_;
  std::vector<Rational> table_;
};

/// Walk every (k, ix, iy) of the scale-n index set in canonical order.
template <typename F>
void for_each_box(int n, F&& f) {
  for (int k = 0; k <= n; ++k)
    for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << k); ++ix)
      for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << (n - k)); ++iy)
        f(k, ix, iy);
}

}  // namespace sbnet
