#include <doctest.h>

#include "sbnet/dyadic.hpp"

using namespace sbnet;

TEST_CASE("haar1 on the unit interval") {
  const DyadicInterval unit{0, 0};
  CHECK(haar1(unit, snap1(0.25, 10)) == -1);
  CHECK(haar1(unit, snap1(0.5, 10)) == 1);  // right half is half-open [1/2,1)
  const DyadicInterval right{1, 1};
  CHECK(haar1(right, snap1(0.25, 10)) == 0);
}

TEST_CASE("haar1 is -1 on the left child and +1 on the right") {
  for (int k = 0; k <= 6; ++k)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx) {
      const DyadicInterval I{k, idx};
      const auto L = I.left_child(), R = I.right_child();
      CHECK(haar1(I, GridPoint1{L.index, L.level}) == -1);
      CHECK(haar1(I, GridPoint1{R.index, R.level}) == 1);
    }
}

TEST_CASE("box_containing picks the unique shape-k box") {
  const auto b0 = box_containing(0, 1, snap2(0.1, 0.6, 20));
  CHECK(b0.x_interval == DyadicInterval{0, 0});
  CHECK(b0.y_interval == DyadicInterval{1, 1});
  const auto b1 = box_containing(1, 1, snap2(0.1, 0.6, 20));
  CHECK(b1.x_interval == DyadicInterval{1, 0});
  CHECK(b1.y_interval == DyadicInterval{0, 0});
  const auto b2 = box_containing(2, 2, snap2(0.7, 0.9, 20));
  CHECK(b2.x_interval == DyadicInterval{2, 2});  // floor(0.7*4) = 2
  CHECK(b2.y_interval == DyadicInterval{0, 0});
  CHECK_THROWS_AS(box_containing(3, 2, snap2(0.0, 0.0, 20)), ContractError);
}

TEST_CASE("quarter_of identifies half-splits; opposite pairs") {
  const DyadicBox2 unit{{0, 0}, {0, 0}};
  CHECK(quarter_of(unit, snap2(0.1, 0.1, 20)) == Quarter::BL);
  CHECK(quarter_of(unit, snap2(0.9, 0.1, 20)) == Quarter::BR);
  const DyadicBox2 half{{1, 0}, {0, 0}};
  CHECK(quarter_of(half, snap2(0.3, 0.7, 20)) == Quarter::TR);
  CHECK(opposite(Quarter::BL) == Quarter::TR);
  CHECK(opposite(Quarter::BR) == Quarter::TL);
  CHECK_THROWS_AS(quarter_of(half, snap2(0.7, 0.7, 20)), ContractError);
}

TEST_CASE("partition: exactly one interval per level contains a point") {
  for (int level = 0; level <= 8; ++level)
    for (std::uint64_t c = 0; c < 64; ++c) {
      const GridPoint1 p{c, 6};
      int hits = 0;
      for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << level); ++idx)
        if (DyadicInterval{level, idx}.contains(p)) ++hits;
      CHECK(hits == 1);
      CHECK(interval_containing(level, p).contains(p));
    }
}

TEST_CASE("haar mean zero over the cells of the support") {
  for (int k = 0; k <= 5; ++k)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << k); ++idx) {
      const DyadicInterval I{k, idx};
      long long total = 0;
      const int cl = k + 1;
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << cl); ++c) {
        const GridPoint1 p{c, cl};
        if (I.contains(p)) total += haar1(I, p);
      }
      CHECK(total == 0);
    }
}

TEST_CASE("haar1 constant on finer cells") {
  const DyadicInterval I{2, 1};
  for (std::uint64_t c = 0; c < 16; ++c) {
    // both endpoints of the level-4 cell [c/16, (c+1)/16) at resolution 6
    const GridPoint1 a{4 * c, 6}, b{4 * c + 3, 6};
    CHECK(haar1(I, a) == haar1(I, b));
  }
}

TEST_CASE("opposite quarters agree in two-dimensional haar sign") {
  const DyadicBox2 R{{1, 1}, {2, 0}};
  std::uint64_t seen = 0;
  for (std::uint64_t cx = 0; cx < 32; ++cx)
    for (std::uint64_t cy = 0; cy < 32; ++cy) {
      const GridPoint2 p{{cx, 5}, {cy, 5}};
      if (!R.contains(p)) continue;
      ++seen;
      for (std::uint64_t dx = 0; dx < 32; ++dx)
        for (std::uint64_t dy = 0; dy < 32; ++dy) {
          const GridPoint2 q{{dx, 5}, {dy, 5}};
          if (!R.contains(q)) continue;
          const bool opp = quarter_of(R, p) == opposite(quarter_of(R, q));
          const bool same_sign = haar2(R, p) == haar2(R, q);
          const bool same_quarter = quarter_of(R, p) == quarter_of(R, q);
          if (opp || same_quarter)
            CHECK(same_sign);
          else
            CHECK(!same_sign);
        }
    }
  CHECK(seen > 0);
}

TEST_CASE("b-adic interval splits into b children") {
  const BadicInterval I{3, 1, 2};
  for (int d = 0; d < 3; ++d) {
    const auto c = I.child(d);
    CHECK(c.level == 2);
    CHECK(c.index == 6 + static_cast<std::uint64_t>(d));
  }
  CHECK(I.contains_cell(18, 3));   // 18/27 in [2/3, 1)
  CHECK(!I.contains_cell(17, 3));  // 17/27 in [1/3, 2/3)
}

TEST_CASE("grid point refinement keeps the value") {
  const GridPoint1 p{3, 3};
  const auto q = p.refined(7);
  CHECK(q.num == 48);
  CHECK(q.exact() == p.exact());
}

TEST_CASE("ipow guards overflow") {
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(3, 4) == 81);
  CHECK_THROWS_AS(ipow(2, 64), BudgetError);
}
