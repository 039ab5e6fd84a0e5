#include <doctest.h>

#include <set>

#include "sbnet/badic.hpp"
#include "sbnet/extremal.hpp"
#include "sbnet/nets.hpp"

using namespace sbnet;

namespace {

std::vector<int> identity_perm(int b) {
  std::vector<int> pi(b);
  for (int i = 0; i < b; ++i) pi[i] = i;
  return pi;
}

}  // namespace

TEST_CASE("phi with b=2 is the haar function up to the swap") {
  // R = [0,1)^2 at m=1; identity -> h_R, swap -> -h_R
  const BadicInterval Rx{2, 0, 0}, Ry{2, 0, 0};
  const std::vector<int> id{0, 1}, sw{1, 0};
  for (std::uint64_t cx = 0; cx < 2; ++cx)
    for (std::uint64_t cy = 0; cy < 2; ++cy) {
      const int h = haar2(DyadicBox2{{0, 0}, {0, 0}}, GridPoint2{{cx, 1}, {cy, 1}});
      CHECK(phi_eval(Rx, Ry, id, cx, cy, 1) == h);
      CHECK(phi_eval(Rx, Ry, sw, cx, cy, 1) == -h);
    }
}

TEST_CASE("phi diagonal values at b=3") {
  const BadicInterval Rx{3, 0, 0}, Ry{3, 0, 0};
  const auto id = identity_perm(3);
  // x=(0.1,0.1) -> cell (0,0); x=(0.1,0.5) -> cell (0,1)
  CHECK(phi_eval(Rx, Ry, id, 0, 0, 1) == 1);
  CHECK(phi_eval(Rx, Ry, id, 0, 1, 1) == -1);
}

TEST_CASE("phi is a permutation-matrix pattern with exact mean (2-b)/b") {
  for (int b : {2, 3, 4}) {
    const BadicInterval Rx{b, 1, 1}, Ry{b, 0, 0};
    std::vector<int> pi(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) pi[static_cast<std::size_t>(i)] = (i + 1) % b;
    const int cl = 2;
    const std::uint64_t side = ipow(static_cast<std::uint64_t>(b), cl);
    long long total = 0;
    std::vector<int> row_plus(static_cast<std::size_t>(b), 0), col_plus(static_cast<std::size_t>(b), 0);
    std::uint64_t support = 0;
    for (std::uint64_t cx = 0; cx < side; ++cx)
      for (std::uint64_t cy = 0; cy < side; ++cy) {
        const int v = phi_eval(Rx, Ry, pi, cx, cy, cl);
        if (v == 0) continue;
        ++support;
        total += v;
        if (v > 0) {
          ++row_plus[static_cast<std::size_t>(cx % static_cast<std::uint64_t>(b))];
          ++col_plus[static_cast<std::size_t>(cy / static_cast<std::uint64_t>(b))];
        }
      }
    // support = |R| in cells; mean over R equals (2-b)/b
    CHECK(Rational(total, BigInt(support)) == Rational(2 - b, b));
    for (int i = 0; i < b; ++i) {
      CHECK(row_plus[static_cast<std::size_t>(i)] >= 1);
      CHECK(col_plus[static_cast<std::size_t>(i)] >= 1);
    }
  }
}

TEST_CASE("extremal cells: diagonal at b=3 m=1") {
  PermAssignment PA(3, 1);  // identity default
  const auto E = extremal_cells_b(PA);
  CHECK(E.value == 1);
  CHECK(E.net.points ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {1, 1}, {2, 2}});
  // brute force over the 9 cells
  for (std::uint64_t cx = 0; cx < 3; ++cx)
    for (std::uint64_t cy = 0; cy < 3; ++cy)
      CHECK(eval_sum_b(PA, cx, cy) == (cx == cy ? 1 : -1));
}

TEST_CASE("max of the b-adic sum is m for every assignment") {
  // exhaustive at b=3 m=1 (6 assignments); sampled at m=2,3
  for (int m : {1, 2, 3}) {
    for (unsigned seed = 0; seed < (m == 3 ? 20u : 50u); ++seed) {
      const auto PA = PermAssignment::random(3, m, seed);
      const std::uint64_t side = ipow(3, m);
      int best = -1000;
      for (std::uint64_t cx = 0; cx < side; ++cx)
        for (std::uint64_t cy = 0; cy < side; ++cy) best = std::max(best, eval_sum_b(PA, cx, cy));
      CHECK(best == m);
      const auto E = extremal_cells_b(PA);
      CHECK(E.value == m);
      CHECK(is_net(E.net, 0).ok);
      CHECK(E.net.points.size() == side);
      for (const auto& [cx, cy] : E.net.points) CHECK(eval_sum_b(PA, cx, cy) == m);
    }
  }
}

TEST_CASE("b=2 path degenerates to the dyadic modules bit for bit") {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const int m = 5;
    const auto A = SignAssignment::random(m - 1, seed);
    const auto PA = PermAssignment::from_signs(A);
    CHECK(extremal_cells_b(PA).net == extremal_squares(A).as_net());
    CHECK(PermAssignment::from_signs(signs_from_net(extremal_cells_b(PA).net)) == PA);
  }
}

TEST_CASE("perms_from_net round trips") {
  PermAssignment diag(3, 1);
  CHECK(perms_from_net(extremal_cells_b(diag).net) == diag);

  // bit-reversal net -> all-identity permutations
  const auto V = van_der_corput(4);
  const auto PV = perms_from_net(V);
  CHECK(PV == PermAssignment(2, 4));

  for (unsigned seed = 0; seed < 100; ++seed) {
    const auto PA = PermAssignment::random(3, 3, seed);
    CHECK(perms_from_net(extremal_cells_b(PA).net) == PA);
  }
}

TEST_CASE("perms_from_net rejects non-nets") {
  Net bad{3, 1, {{0, 0}, {0, 1}, {2, 2}}};
  CHECK_THROWS_AS(perms_from_net(bad), InputError);
}

TEST_CASE("net counting formula") {
  CHECK(count_nets_b(3, 1) == 6);
  CHECK(count_nets_b(2, 2) == 16);
  CHECK(count_nets_b(3, 2) == 46656);
  CHECK(count_nets_b(2, 3) == 4096);
}

TEST_CASE("exhaustive enumeration matches the formula") {
  CHECK(enumerate_nets_b(3, 1).size() == 6);
  CHECK(enumerate_nets_b(2, 2).size() == 16);
  std::set<std::vector<std::pair<std::uint64_t, std::uint64_t>>> dedup;
  const auto nets = enumerate_nets_b(3, 2);
  for (const auto& net : nets) {
    CHECK(is_net(net, 0).ok);
    dedup.insert(net.points);
  }
  CHECK(nets.size() == 46656);
  CHECK(dedup.size() == 46656);
  CHECK_THROWS_AS(enumerate_nets_b(3, 3), BudgetError);
}

TEST_CASE("set_perm validates bijections") {
  PermAssignment PA(3, 2);
  CHECK_THROWS_AS(PA.set_perm(0, 0, 0, std::vector<int>{0, 0, 2}), InputError);
  CHECK_THROWS_AS(PA.set_perm(0, 0, 0, std::vector<int>{0, 1}), InputError);
  PA.set_perm(0, 0, 0, {2, 0, 1});
  CHECK(PA.get_perm(0, 0, 0) == std::vector<int>{2, 0, 1});
}
