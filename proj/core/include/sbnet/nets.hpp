#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbnet/assignment.hpp"

namespace sbnet {

/// A standard point set on the b^-m grid: b^m distinct integer pairs in
/// [0, b^m)^2. Canonical form is lexicographic by (x, y).
struct Net {
  int base = 2;
  int m = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points;

  std::uint64_t side() const { return ipow(static_cast<std::uint64_t>(base), m); }
  void canonicalize();
  /// Range, cardinality and distinctness checks; throws InputError.
  void validate() const;

  friend bool operator==(const Net&, const Net&) = default;
};

/// Witness for a failed net check: a b-adic box and its point count.
struct NetViolation {
  int kx = 0, ky = 0;
  std::uint64_t ix = 0, iy = 0;
  std::uint64_t count = 0;
  std::string describe(int base) const;
};

struct NetCheck {
  bool ok = false;
  std::optional<NetViolation> witness;
  explicit operator bool() const { return ok; }
};

/// True iff every b-adic box of volume b^(t-m) contains exactly b^t points.
NetCheck is_net(const Net& P, int t = 0);

/// The digit-reversal set: y = bit reversal of x at width m (base 2).
Net van_der_corput(int m);

/// Digit-shifted variant: XOR sigma into the digits before reversal.
/// sigma[0] acts on the most significant bit.
Net digit_shifted_vdc(int m, const std::vector<int>& sigma);

/// Signs depending only on the box shape: layer k-1 (|R1| = 2^-(k-1)) gets
/// -1 exactly when sigma[k-1] = 1. sigma has length m = n+1.
SignAssignment layer_signs(const std::vector<int>& sigma);

/// Signs of every dyadic interval with level 0..n, heap layout
/// (2^level - 1 + index). Shared with the reduction module.
struct IntervalSigns {
  int n = 0;
  std::vector<std::int8_t> s;  // 2^(n+1) - 1 entries

  explicit IntervalSigns(int n_ = 0, int fill = +1);
  int at(int level, std::uint64_t index) const {
    return s[(std::size_t{1} << level) - 1 + index];
  }
  void set(int level, std::uint64_t index, int value);
  static IntervalSigns random(int n, std::uint64_t seed);
  friend bool operator==(const IntervalSigns&, const IntervalSigns&) = default;
};

/// Product structure: eps_{R1 x R2} = eps1_{R1} * eps2_{R2}.
SignAssignment product_signs(const IntervalSigns& eps1, const IntervalSigns& eps2);

/// All (0,m,2)-nets in base 2 by exhausting the sign assignments at
/// n = m-1. Guarded to m <= 3.
std::vector<Net> enumerate_nets(int m);

/// Grid-snapped standard representative of a real point set.
Net snap(const std::vector<std::pair<double, double>>& points, int m, int base = 2);

}  // namespace sbnet
