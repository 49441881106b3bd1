#include <doctest.h>

#include <stdexcept>

#include "wmlq/flow.hpp"

using namespace wmlq;

TEST_CASE("an empty network has the zero circulation") {
  MinCostCirculation mcc(3);
  const auto out = mcc.solve();
  CHECK(out.feasible);
  CHECK(out.cost == 0);
}

TEST_CASE("plain min-cost flow via a back arc") {
  // Two parallel paths from 0 to 2, cheap one has capacity 1; forcing two
  // units through picks cheap then expensive.
  MinCostCirculation mcc(3);
  const int cheap = mcc.add_arc(0, 1, 0, 1, 1);
  const int expensive = mcc.add_arc(0, 1, 0, 5, 4);
  const int mid = mcc.add_arc(1, 2, 0, 10, 0);
  const int back = mcc.add_arc(2, 0, 2, 2, 0);
  const auto out = mcc.solve();
  REQUIRE(out.feasible);
  CHECK(out.cost == 1 + 4);
  CHECK(mcc.flow(cheap) == 1);
  CHECK(mcc.flow(expensive) == 1);
  CHECK(mcc.flow(mid) == 2);
  CHECK(mcc.flow(back) == 2);
}

TEST_CASE("lower bounds are honored even at positive cost") {
  MinCostCirculation mcc(2);
  const int there = mcc.add_arc(0, 1, 3, 7, 2);
  const int back = mcc.add_arc(1, 0, 0, 7, 1);
  const auto out = mcc.solve();
  REQUIRE(out.feasible);
  CHECK(mcc.flow(there) == 3);  // nothing pushes beyond the bound
  CHECK(mcc.flow(back) == 3);
  CHECK(out.cost == 3 * 2 + 3 * 1);
}

TEST_CASE("negative arcs saturate unless capped by conservation") {
  // The -5 arc wants full flow but the return path costs 3, so each unit
  // nets -2; both units flow.
  MinCostCirculation mcc(2);
  const int gain = mcc.add_arc(0, 1, 0, 2, -5);
  const int pay = mcc.add_arc(1, 0, 0, 2, 3);
  const auto out = mcc.solve();
  REQUIRE(out.feasible);
  CHECK(mcc.flow(gain) == 2);
  CHECK(mcc.flow(pay) == 2);
  CHECK(out.cost == -4);
}

TEST_CASE("negative arcs stay empty when the return path is too expensive") {
  MinCostCirculation mcc(2);
  const int gain = mcc.add_arc(0, 1, 0, 2, -5);
  const int pay = mcc.add_arc(1, 0, 0, 2, 9);
  const auto out = mcc.solve();
  REQUIRE(out.feasible);
  CHECK(mcc.flow(gain) == 0);
  CHECK(mcc.flow(pay) == 0);
  CHECK(out.cost == 0);
}

TEST_CASE("infeasible lower bounds are reported") {
  MinCostCirculation mcc(2);
  mcc.add_arc(0, 1, 2, 5, 1);  // no way back
  CHECK(!mcc.solve().feasible);

  MinCostCirculation capped(2);
  capped.add_arc(0, 1, 3, 5, 0);
  capped.add_arc(1, 0, 0, 2, 0);  // return capacity too small
  CHECK(!capped.solve().feasible);
}

TEST_CASE("add_arc validates its bounds") {
  MinCostCirculation mcc(2);
  CHECK_THROWS_AS(mcc.add_arc(0, 1, 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(mcc.add_arc(0, 1, -1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(mcc.add_arc(0, 2, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("a bipartite assignment as circulation matches the known optimum") {
  // Applicants 0,1 to posts 2,3: classic assignment with weights as negated
  // costs. Optimum picks 9 + 8.
  MinCostCirculation mcc(6);  // 4 nodes + source 4 + sink 5
  mcc.add_arc(4, 0, 0, 1, 0);
  mcc.add_arc(4, 1, 0, 1, 0);
  const int a0p0 = mcc.add_arc(0, 2, 0, 1, -9);
  const int a0p1 = mcc.add_arc(0, 3, 0, 1, -2);
  const int a1p0 = mcc.add_arc(1, 2, 0, 1, -3);
  const int a1p1 = mcc.add_arc(1, 3, 0, 1, -8);
  mcc.add_arc(2, 5, 0, 1, 0);
  mcc.add_arc(3, 5, 0, 1, 0);
  mcc.add_arc(5, 4, 0, 2, 0);
  const auto out = mcc.solve();
  REQUIRE(out.feasible);
  CHECK(out.cost == -17);
  CHECK(mcc.flow(a0p0) == 1);
  CHECK(mcc.flow(a1p1) == 1);
  CHECK(mcc.flow(a0p1) == 0);
  CHECK(mcc.flow(a1p0) == 0);
}
