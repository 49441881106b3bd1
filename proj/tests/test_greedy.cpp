#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "wmlq/core.hpp"
#include "wmlq/generators.hpp"
#include "wmlq/greedy.hpp"
#include "wmlq/oracle.hpp"

using namespace wmlq;
using testutil::make_instance;

TEST_CASE("assignable weight is the top-quota prefix sum") {
  const Instance inst = make_instance(
      4, 2, {{1, 1, 5}, {2, 1, 3}, {3, 1, 9}, {4, 2, 2}}, {1, 2}, {2, 3});
  std::vector<bool> assigned(inst.num_applicants + 1, false);

  CHECK(assignable_weight(inst, 1, assigned) == 14);  // 9 + 5
  CHECK(!assignable_weight(inst, 2, assigned).has_value());  // 1 < lower 2

  assigned[3] = true;
  CHECK(assignable_weight(inst, 1, assigned) == 8);  // 5 + 3
  assigned[1] = true;
  CHECK(assignable_weight(inst, 1, assigned) == 3);
  assigned[2] = true;
  CHECK(!assignable_weight(inst, 1, assigned).has_value());
}

TEST_CASE("greedy result carries the approximation metadata") {
  const Instance inst = gen_tight_a(4);
  const SolveResult res = solve_greedy(inst);
  CHECK(res.algorithm == "greedy");
  CHECK(!res.exact);
  REQUIRE(res.guarantee_factor.has_value());
  CHECK(*res.guarantee_factor == 5);  // min{5 posts, 20 applicants, u_max+1}
  CHECK(evaluate(inst, res.assignment).feasible);
}

TEST_CASE("greedy lands exactly on the adversarial family values") {
  for (int k = 2; k <= 5; ++k) {
    const Instance a = gen_tight_a(k);
    const SolveResult res = solve_greedy(a);
    CHECK(res.objective == k);
    CHECK(evaluate(a, res.assignment).feasible);
    CHECK(evaluate(a, res.assignment).weight == k);
  }
  for (long long scale : {2LL, 10LL, 1000LL}) {
    const Instance b = gen_tight_b(4, scale);
    const SolveResult res = solve_greedy(b);
    CHECK(res.objective == scale + 4 - 1);
  }
}

TEST_CASE("the adversarial ratios match the guarantee exactly") {
  // Family a: greedy k vs optimum k(k+1), ratio 1/(k+1) with factor k+1.
  const Instance a = gen_tight_a(3);
  const SolveResult greedy_a = solve_greedy(a);
  const SolveResult opt_a = brute_force(a);
  CHECK(greedy_a.objective == 3);
  CHECK(opt_a.objective == 12);
  CHECK(*greedy_a.guarantee_factor == 4);
  CHECK(greedy_a.objective * *greedy_a.guarantee_factor ==
        opt_a.objective);  // bound tight

  // Family b: greedy scale + k - 1 vs optimum k * scale.
  const Instance b = gen_tight_b(3, 50);
  const SolveResult greedy_b = solve_greedy(b);
  const SolveResult opt_b = brute_force(b);
  CHECK(greedy_b.objective == 52);
  CHECK(opt_b.objective == 150);
}

TEST_CASE("greedy is deterministic") {
  RandomSpec spec;
  spec.seed = 5;
  spec.num_applicants = 12;
  spec.num_posts = 5;
  spec.degree_min = 1;
  spec.degree_max = 4;
  spec.lower_min = 0;
  spec.lower_max = 2;
  spec.upper_min = 1;
  spec.upper_max = 4;
  spec.weight_min = 1;
  spec.weight_max = 20;
  const Instance inst = gen_random(spec);
  const SolveResult first = solve_greedy(inst);
  const SolveResult second = solve_greedy(inst);
  CHECK(first.assignment == second.assignment);
  CHECK(first.objective == second.objective);
}

TEST_CASE("greedy respects the general ratio bound on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.num_applicants = 3 + static_cast<int>(seed % 6);
    spec.num_posts = 1 + static_cast<int>(seed % 4);
    spec.degree_min = 0;
    spec.degree_max = std::min(3, spec.num_posts);  // keeps |E| within oracle caps
    spec.lower_min = 0;
    spec.lower_max = 2;
    spec.upper_min = 1;
    spec.upper_max = 3;
    spec.weight_min = 0;
    spec.weight_max = 10;
    const Instance inst = gen_random(spec);
    const SolveResult greedy = solve_greedy(inst);
    const SolveResult opt = brute_force(inst);
    CHECK(evaluate(inst, greedy.assignment).feasible);
    CHECK(evaluate(inst, greedy.assignment).weight == greedy.objective);
    REQUIRE(greedy.guarantee_factor.has_value());
    CHECK(greedy.objective * *greedy.guarantee_factor >= opt.objective);
  }
}

TEST_CASE("unit weights obey the sqrt bound") {
  for (std::uint64_t seed = 200; seed <= 260; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.num_applicants = 4 + static_cast<int>(seed % 5);
    spec.num_posts = 1 + static_cast<int>(seed % 4);
    spec.degree_min = 1;
    spec.degree_max = std::min(3, spec.num_posts);
    spec.lower_min = 0;
    spec.lower_max = 3;
    spec.upper_min = 1;
    spec.upper_max = 4;
    spec.weight_min = 1;
    spec.weight_max = 1;  // unit weights
    const Instance inst = gen_random(spec);
    const SolveResult greedy = solve_greedy(inst);
    const SolveResult opt = brute_force(inst);
    const long long factor =
        static_cast<long long>(
            std::ceil(std::sqrt(static_cast<double>(inst.num_applicants)))) +
        1;
    CHECK(greedy.objective * factor >= opt.objective);
  }
}

TEST_CASE("greedy handles degenerate instances") {
  const Instance empty = make_instance(0, 0, {}, {}, {});
  CHECK(solve_greedy(empty).objective == 0);

  const Instance no_edges = make_instance(3, 2, {}, {1, 1}, {2, 2});
  const SolveResult res = solve_greedy(no_edges);
  CHECK(res.objective == 0);
  CHECK(res.assignment.empty());
}
