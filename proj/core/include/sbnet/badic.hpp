#pragma once

#include <cstdint>
#include <vector>

#include "sbnet/dyadic.hpp"
#include "sbnet/nets.hpp"
#include "sbnet/rational.hpp"

namespace sbnet {

/// A permutation of {0,...,b-1} for every b-adic box of volume b^-(m-1):
/// shape k in {0,...,m-1} has |R1| = b^-k, |R2| = b^-(m-1-k), b^(m-1) boxes
/// per shape. The permutation parametrizes the +-1 function phi_R whose +1
/// subboxes form the pattern { (i, pi(i)) } on the b x b subdivision
/// (x-digit i, y-digit pi(i)). For b = 2 the identity is h_R and the swap
/// is -h_R.
class PermAssignment {
 public:
  PermAssignment(int base, int m);

  int base() const { return base_; }
  int m() const { return m_; }
  std::size_t box_count() const;

  int perm(int k, std::uint64_t ix, std::uint64_t iy, int digit) const;
  void set_perm(int k, std::uint64_t ix, std::uint64_t iy, const std::vector<int>& pi);
  std::vector<int> get_perm(int k, std::uint64_t ix, std::uint64_t iy) const;

  static PermAssignment random(int base, int m, std::uint64_t seed);
  /// Translate dyadic signs: +1 -> identity, -1 -> swap (b = 2 only).
  static PermAssignment from_signs(const SignAssignment& A);

  friend bool operator==(const PermAssignment&, const PermAssignment&) = default;

 private:
  std::size_t offset(int k, std::uint64_t ix, std::uint64_t iy) const;
  int base_;
  int m_;
  std::vector<std::uint8_t> table_;  // box-major, b entries per box
};

/// phi_R evaluated on the b-adic cell (cx, cy) of side b^-cell_level
/// (cell_level must exceed both interval levels, so phi is constant on the
/// cell): 0 outside R; inside, +1 iff the y-digit of the containing subbox
/// equals pi(x-digit), else -1.
int phi_eval(const BadicInterval& Rx, const BadicInterval& Ry,
             const std::vector<int>& pi, std::uint64_t cx, std::uint64_t cy,
             int cell_level);

struct BadicExtremal {
  Net net;        // lower-left corners of the b^m maximal cells
  int value = 0;  // always m
};

/// The b^m cells of side b^-m on which every phi_R = +1; their corners
/// form a standard (0,m,2)-net in base b.
BadicExtremal extremal_cells_b(const PermAssignment& PA);

/// Inverse construction: read one permutation per box off a standard net.
PermAssignment perms_from_net(const Net& P);

/// (b!)^(m * b^(m-1)).
BigInt count_nets_b(int base, int m);

/// Exhaustive enumeration over all PermAssignments; guarded to
/// count_nets_b(base, m) <= 10^6 assignments.
std::vector<Net> enumerate_nets_b(int base, int m);

/// Sum of phi_R over all boxes of volume b^-(m-1), evaluated on the cell
/// (cx, cy) of the uniform b^m x b^m grid (the sum is constant per cell).
int eval_sum_b(const PermAssignment& PA, std::uint64_t cx, std::uint64_t cy);

}  // namespace sbnet
