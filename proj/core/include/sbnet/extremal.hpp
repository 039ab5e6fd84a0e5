#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sbnet/assignment.hpp"
#include "sbnet/nets.hpp"
#include "sbnet/rational.hpp"

namespace sbnet {

/// The 2^(n+1) grid squares of side 2^-(n+1) where a signed hyperbolic sum
/// attains its maximum n+1 (or, for general coefficients, where every term
/// has nonnegative sign). Squares are lower-left corners in [0, 2^m)^2,
/// lexicographically ordered.
struct ExtremalSet {
  int m = 0;  // n + 1
  std::vector<std::pair<std::uint64_t, std::uint64_t>> squares;
  Rational value = 0;  // n+1 in the signed case
  /// Per-square attained value sum_{R containing Q} |alpha_R|; set only by
  /// extremal_cells_general.
  std::vector<Rational> square_values;

  Net as_net() const;
};

/// Direct characterization: the squares on which all n+1 terms eps_R h_R
/// equal +1. O(2^m * m) digit walk; valid for every parity of n.
ExtremalSet extremal_squares(const SignAssignment& A);

/// The published induction over F_k = (shape-k part) + (shape-(n-k) part),
/// k = (n+1)/2 .. n, keeping the subsquares where F_k = 2. Defined for odd
/// n only; used as a cross-check oracle for extremal_squares.
ExtremalSet extremal_squares_inductive(const SignAssignment& A);

/// Reconstruct the sign of each box of volume 2^-n from a standard
/// (0,m,2)-net in base 2: each box holds exactly two points in opposite
/// quarters and the sign is the (shared) Haar value at either.
SignAssignment signs_from_net(const Net& P);

struct GeneralCellOptions {
  /// Treat alpha_R = 0 as sign +1 instead of rejecting. The output still
  /// forms a net, but strict maximality of the attained value is lost.
  bool tie_break_positive = false;
};

/// General-coefficient variant: squares where every term alpha_R h_R >=
/// |alpha_R|, with the attained value per square.
ExtremalSet extremal_cells_general(const CoefficientAssignment& C,
                                   const GeneralCellOptions& opts = {});

}  // namespace sbnet
