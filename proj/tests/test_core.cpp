#include <doctest.h>

#include "testutil.hpp"
#include "wmlq/core.hpp"
#include "wmlq/generators.hpp"

using namespace wmlq;
using testutil::make_instance;

namespace {

Instance sample() {
  return make_instance(4, 3,
                       {{1, 1, 5}, {2, 1, 3}, {3, 2, 4}, {4, 2, 2}, {1, 3, 7}},
                       {1, 2, 2}, {2, 2, 3});
}

}  // namespace

TEST_CASE("validate accepts a well-formed instance") {
  CHECK(validate(sample()).empty());
  CHECK(is_valid(sample()));
}

TEST_CASE("validate reports each violation class") {
  Instance inst = sample();
  inst.edges.push_back({1, 1, 5});  // duplicate
  inst.edges.push_back({9, 1, 1});  // dangling applicant
  inst.edges.push_back({1, 9, 1});  // dangling post
  inst.edges.push_back({2, 3, -1});  // negative weight
  inst.lower[2] = 5;  // lower > upper
  const auto violations = validate(inst);
  CHECK(violations.size() == 5);
  CHECK_THROWS_AS(require_valid(inst), std::invalid_argument);

  Instance bad_vectors = sample();
  bad_vectors.lower.pop_back();
  CHECK(!validate(bad_vectors).empty());
}

TEST_CASE("simplify applies all four reductions") {
  // post 1: lower 3 > degree 2, deleted; post 2: upper capped at degree;
  // post 3: degree 0 so upper drops to 0, deleted; post 4: lower raised to 1.
  Instance inst = make_instance(
      3, 4, {{1, 1, 1}, {2, 1, 1}, {1, 2, 4}, {2, 2, 4}, {3, 4, 9}},
      {3, 1, 0, 0}, {3, 5, 2, 7});
  const SimplifyResult res = simplify_mapped(inst);
  const Instance& s = res.instance;
  CHECK(s.num_posts == 2);
  CHECK(res.original_post_id == std::vector<int>{0, 2, 4});
  CHECK(s.lower == std::vector<long long>{0, 1, 1});
  CHECK(s.upper == std::vector<long long>{0, 2, 1});
  CHECK(s.edges == std::vector<Edge>{{1, 1, 4}, {2, 1, 4}, {3, 2, 9}});
  CHECK(s.num_applicants == 3);  // applicants survive even when isolated
}

TEST_CASE("simplify is idempotent and value-preserving") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.num_applicants = 6;
    spec.num_posts = 4;
    spec.degree_min = 0;
    spec.degree_max = 3;
    spec.lower_min = 0;
    spec.lower_max = 3;
    spec.upper_min = 1;
    spec.upper_max = 3;
    spec.weight_min = 1;
    spec.weight_max = 8;
    const Instance inst = gen_random(spec);
    const Instance once = simplify(inst);
    CHECK(simplify(once) == once);
    for (int p = 1; p <= once.num_posts; ++p) {
      CHECK(once.lower[p] >= 1);
      CHECK(once.lower[p] <= once.upper[p]);
    }
    const auto deg = post_degrees(once);
    for (int p = 1; p <= once.num_posts; ++p) CHECK(once.upper[p] <= deg[p]);
    CHECK(testutil::exhaustive_wmlq_value(inst) ==
          testutil::exhaustive_wmlq_value(once));
  }
}

TEST_CASE("evaluate checks the quota model") {
  const Instance inst = sample();

  SUBCASE("a feasible assignment and its weight") {
    const auto res = evaluate(inst, {{1, 1}, {2, 1}, {3, 2}, {4, 2}});
    CHECK(res.feasible);
    CHECK(res.weight == 14);
  }
  SUBCASE("the empty assignment closes every post") {
    const auto res = evaluate(inst, {});
    CHECK(res.feasible);
    CHECK(res.weight == 0);
  }
  SUBCASE("non-edges are rejected") {
    const auto res = evaluate(inst, {{2, 3}});
    CHECK(!res.feasible);
    CHECK(res.violation.find("(2, 3)") != std::string::npos);
  }
  SUBCASE("an applicant cannot serve two posts") {
    const auto res = evaluate(inst, {{1, 1}, {2, 1}, {1, 3}});
    CHECK(!res.feasible);
    CHECK(res.violation.find("applicant 1") != std::string::npos);
  }
  SUBCASE("open posts respect the lower quota") {
    const auto res = evaluate(inst, {{3, 2}});
    CHECK(!res.feasible);
    CHECK(res.violation.find("post 2") != std::string::npos);
  }
  SUBCASE("open posts respect the upper quota") {
    Instance loose = inst;
    loose.lower[1] = 1;
    loose.upper[1] = 1;
    const auto res = evaluate(loose, {{1, 1}, {2, 1}});
    CHECK(!res.feasible);
    CHECK(res.violation.find("post 1") != std::string::npos);
  }
}

TEST_CASE("degree helpers and quota maximum") {
  const Instance inst = sample();
  CHECK(post_degrees(inst) == std::vector<int>{0, 2, 2, 1});
  CHECK(applicant_degrees(inst) == std::vector<int>{0, 2, 1, 1, 1});
  CHECK(max_upper_quota(inst) == 3);
  CHECK(max_upper_quota(make_instance(0, 0, {}, {}, {})) == 0);
}
