#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "wmlq/generators.hpp"
#include "wmlq/oracle.hpp"

using namespace wmlq;
using testutil::make_instance;

namespace {

Instance small_random(std::uint64_t seed) {
  RandomSpec spec;
  spec.seed = seed;
  spec.num_applicants = 2 + static_cast<int>(seed % 5);
  spec.num_posts = 1 + static_cast<int>(seed % 3);
  spec.degree_min = 0;
  spec.degree_max = std::min(3, spec.num_posts);
  spec.lower_min = 0;
  spec.lower_max = 2;
  spec.upper_min = 1;
  spec.upper_max = 3;
  spec.weight_min = 0;
  spec.weight_max = 12;
  return gen_random(spec);
}

}  // namespace

TEST_CASE("oracle on trivial instances") {
  Instance empty;
  empty.lower = {0};
  empty.upper = {0};
  const SolveResult res = brute_force(empty);
  CHECK(res.objective == 0);
  CHECK(res.assignment.empty());
  CHECK(res.exact);
  CHECK(res.algorithm == "oracle");
}

TEST_CASE("oracle finds the known family optimum") {
  // the hub post takes all six applicants once its competitors stay closed
  CHECK(brute_force(gen_tight_a(2)).objective == 6);
}

TEST_CASE("oracle respects lower quotas") {
  // post 1 pays for opening: quota 2 forces the cheap edge in as well
  const Instance inst = make_instance(
      3, 2, {{1, 1, 10}, {2, 1, 1}, {2, 2, 6}, {3, 2, 7}}, {2, 0}, {2, 2});
  const SolveResult res = brute_force(inst);
  // open both: 10 + 1 + 7 = 18 (applicant 2 is taken by post 1)
  CHECK(res.objective == 18);
  const auto eval = evaluate(inst, res.assignment);
  CHECK(eval.feasible);
  CHECK(eval.weight == 18);
}

TEST_CASE("oracle matches an independent subset sweep") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Instance inst = small_random(seed);
    const SolveResult res = brute_force(inst);
    CHECK(res.objective == testutil::exhaustive_wmlq_value(inst));
    const auto eval = evaluate(inst, res.assignment);
    CHECK(eval.feasible);
    CHECK(eval.weight == res.objective);
  }
}

TEST_CASE("adding an edge never hurts") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = small_random(seed);
    const long long before = brute_force(inst).objective;
    // connect applicant 1 to the last post (dropping any duplicate first)
    std::erase_if(inst.edges, [&](const Edge& e) {
      return e.applicant == 1 && e.post == inst.num_posts;
    });
    inst.edges.push_back({1, inst.num_posts, 50});
    if (inst.edges.size() > OracleLimits{}.max_edges) continue;
    CHECK(brute_force(inst).objective >= before);
  }
}

TEST_CASE("forced-open with no posts open is the empty assignment") {
  const Instance inst = make_instance(
      2, 1, {{1, 1, 5}, {2, 1, 3}}, {0}, {2});
  const auto res = brute_force_forced_open(inst, {});
  REQUIRE(res);
  CHECK(res->objective == 0);
  CHECK(res->assignment.empty());
  CHECK(res->algorithm == "oracle-forced-open");
}

TEST_CASE("forced-open reports unreachable quotas as infeasible") {
  const Instance inst = make_instance(1, 1, {{1, 1, 5}}, {2}, {2});
  CHECK(!brute_force_forced_open(inst, {1}));
  // feasible when the post may stay closed
  CHECK(brute_force_forced_open(inst, {})->objective == 0);
}

TEST_CASE("forced-open validates the open set") {
  const Instance inst = make_instance(1, 1, {{1, 1, 5}}, {0}, {1});
  CHECK_THROWS_WITH_AS(brute_force_forced_open(inst, {2}),
                       doctest::Contains("out of range"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(brute_force_forced_open(inst, {0}),
                       doctest::Contains("out of range"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(brute_force_forced_open(inst, {1, 1}),
                       doctest::Contains("duplicate"),
                       std::invalid_argument);
}

TEST_CASE("the oracle is the maximum over forced open sets") {
  for (std::uint64_t seed = 200; seed <= 230; ++seed) {
    const Instance inst = small_random(seed);
    long long best = 0;
    REQUIRE(inst.num_posts <= 10);
    for (unsigned mask = 0; mask < (1u << inst.num_posts); ++mask) {
      std::vector<int> open;
      for (int p = 1; p <= inst.num_posts; ++p)
        if (mask >> (p - 1) & 1) open.push_back(p);
      const auto forced = brute_force_forced_open(inst, open);
      if (forced) best = std::max(best, forced->objective);
    }
    CHECK(best == brute_force(inst).objective);
  }
}

TEST_CASE("oracle size caps") {
  Instance wide;
  wide.num_posts = 13;
  wide.lower.assign(14, 0);
  wide.upper.assign(14, 1);
  CHECK_THROWS_WITH_AS(brute_force(wide), doctest::Contains("posts"),
                       std::invalid_argument);

  Instance dense;
  dense.num_applicants = 25;
  dense.num_posts = 1;
  dense.lower = {0, 0};
  dense.upper = {0, 25};
  for (int a = 1; a <= 25; ++a) dense.edges.push_back({a, 1, 1});
  CHECK_THROWS_WITH_AS(brute_force(dense), doctest::Contains("edges"),
                       std::invalid_argument);

  // raising the caps admits the same instance
  OracleLimits roomy;
  roomy.max_edges = 32;
  roomy.edge_enum_limit = 0;
  CHECK(brute_force(dense, roomy).objective == 25);
}
