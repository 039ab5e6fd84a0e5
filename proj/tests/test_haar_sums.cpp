#include <doctest.h>

#include "sbnet/haar_sums.hpp"

using namespace sbnet;

TEST_CASE("eval_sum pointwise examples") {
  SignAssignment all1(1, +1);
  CHECK(eval_sum(all1, snap2(0.1, 0.1, 20)) == 2);  // (-1)(-1) twice

  CoefficientAssignment C(0);
  C.set(0, 0, 0, Rational(7, 2));
  CHECK(eval_sum(C, snap2(0.1, 0.9, 20)) == Rational(-7, 2));
}

TEST_CASE("sign sums have n+1 terms and fixed parity") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const auto A = SignAssignment::random(3, seed);
    for (std::uint64_t cx = 0; cx < 16; ++cx)
      for (std::uint64_t cy = 0; cy < 16; ++cy) {
        const long long v = eval_sum(A, GridPoint2{{cx, 4}, {cy, 4}});
        CHECK(v >= -4);
        CHECK(v <= 4);
        CHECK((v % 2 + 2) % 2 == 0);  // parity of n+1 = 4
      }
  }
}

TEST_CASE("render at n=0 is the bare haar function") {
  SignAssignment plus(0, +1);
  const auto F = render(plus);
  REQUIRE(F.level == 1);
  // cells (cx, cy): value = h(cx-half) * h(cy-half)
  CHECK(F.value_at(0, 0) == Rational(1));
  CHECK(F.value_at(1, 0) == Rational(-1));
  CHECK(F.value_at(0, 1) == Rational(-1));
  CHECK(F.value_at(1, 1) == Rational(1));

  const auto G = render(plus.negated());
  for (std::uint64_t cx = 0; cx < 2; ++cx)
    for (std::uint64_t cy = 0; cy < 2; ++cy)
      CHECK(G.value_at(cx, cy) == -F.value_at(cx, cy));
}

TEST_CASE("render all-+1 at n=1 has exactly 4 maximal cells") {
  SignAssignment all1(1, +1);
  const auto F = render(all1);
  int count = 0;
  for (std::uint64_t cx = 0; cx < 4; ++cx)
    for (std::uint64_t cy = 0; cy < 4; ++cy)
      if (F.value_at(cx, cy) == Rational(2)) ++count;
  CHECK(count == 4);
  CHECK(max_locations(F).size() == 4);
}

TEST_CASE("render matches eval_sum on every cell") {
  for (unsigned seed = 0; seed < 5; ++seed) {
    const auto C = CoefficientAssignment::random(4, seed);
    const auto F = render(C);
    for (std::uint64_t cx = 0; cx < 32; ++cx)
      for (std::uint64_t cy = 0; cy < 32; ++cy)
        CHECK(F.value_at(cx, cy) == eval_sum(C, GridPoint2{{cx, 5}, {cy, 5}}));
  }
}

TEST_CASE("render budget guard") {
  RenderBudget tight;
  tight.max_scale = 3;
  CHECK_THROWS_AS(render(SignAssignment(4), tight), BudgetError);
}

TEST_CASE("signed sup norm equals n+1 and is symmetric") {
  for (int n = 0; n <= 7; ++n)
    for (unsigned seed = 0; seed < 10; ++seed) {
      const auto A = SignAssignment::random(n, seed);
      const auto F = render(A);
      CHECK(sup_norm(F) == Rational(n + 1));
      const auto ex = extrema(A);
      CHECK(ex.max == Rational(n + 1));
      CHECK(ex.min == Rational(-(n + 1)));  // global flip symmetry
    }
}

TEST_CASE("zero coefficients give zero sup") {
  CoefficientAssignment zero(3);
  CHECK(sup_norm(render(zero)) == Rational(0));
}

TEST_CASE("L2 norm examples") {
  SignAssignment all1(1, +1);
  const auto F = render(all1);
  // ||F||_2 = sqrt(2): compare squares exactly
  CHECK(lp_norm_pow(F, 2) == Rational(2));
  CHECK(lp_norm(F, 2) == doctest::Approx(std::sqrt(2.0)));

  const CoefficientAssignment C(all1);
  CHECK(l2_parseval_sq(C) == Rational(2));
  CHECK(l2_parseval(CoefficientAssignment(SignAssignment(2, +1))) ==
        doctest::Approx(std::sqrt(3.0)));

  CoefficientAssignment single(0);
  single.set(0, 0, 0, Rational(3));
  CHECK(l2_parseval(single) == doctest::Approx(3.0));
}

TEST_CASE("parseval is bit-exact against cell enumeration") {
  for (unsigned seed = 0; seed < 20; ++seed) {
    const auto C = CoefficientAssignment::random(5, seed);
    CHECK(lp_norm_pow(render(C), 2) == l2_parseval_sq(C));
  }
}

TEST_CASE("rhs_small_ball") {
  CHECK(rhs_small_ball(SignAssignment::random(6, 1)) == Rational(7));
  CoefficientAssignment single(0);
  single.set(0, 0, 0, Rational(-5, 3));
  CHECK(rhs_small_ball(single) == Rational(5, 3));
  CoefficientAssignment C(1);
  C.set(0, 0, 0, 1);
  C.set(0, 0, 1, 2);
  C.set(1, 0, 0, 3);
  C.set(1, 1, 0, 4);
  CHECK(rhs_small_ball(C) == Rational(5));
}

TEST_CASE("general small ball inequality on random rationals") {
  for (int n = 1; n <= 6; ++n)
    for (unsigned seed = 0; seed < 25; ++seed) {
      const auto C = CoefficientAssignment::random(n, seed);
      CHECK(sup_norm(render(C)) >= rhs_small_ball(C));
    }
}

TEST_CASE("extrema agrees with the rendered scan") {
  for (int n = 1; n <= 6; ++n)
    for (unsigned seed = 0; seed < 10; ++seed) {
      const auto C = CoefficientAssignment::random(n, seed);
      const auto F = render(C);
      Rational mx = F.value_at(0, 0), mn = mx;
      for (std::uint64_t cx = 0; cx < (std::uint64_t{1} << F.level); ++cx)
        for (std::uint64_t cy = 0; cy < (std::uint64_t{1} << F.level); ++cy) {
          const auto v = F.value_at(cx, cy);
          if (v > mx) mx = v;
          if (v < mn) mn = v;
        }
      const auto ex = extrema(C);
      CHECK(ex.max == mx);
      CHECK(ex.min == mn);
      CHECK(ex.sup() == sup_norm(F));
    }
}

TEST_CASE("hoelder consistency ||F||_2^6 <= ||F||_1^2 ||F||_4^4") {
  for (int n = 1; n <= 6; ++n)
    for (unsigned seed = 0; seed < 5; ++seed) {
      const auto F = render(SignAssignment::random(n, seed));
      const Rational i1 = lp_norm_pow(F, 1), i2 = lp_norm_pow(F, 2), i4 = lp_norm_pow(F, 4);
      CHECK(i2 * i2 * i2 <= i1 * i1 * i4);
    }
}
