#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "testutil.hpp"
#include "wmlq/generators.hpp"
#include "wmlq/oracle.hpp"

using namespace wmlq;

namespace {

// Independent maximum-independent-set size by raw subset enumeration.
int mis_size(const GeneralGraph& g) {
  REQUIRE(g.num_vertices <= 20);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << g.num_vertices); ++mask) {
    bool independent = true;
    for (const auto& e : g.edges)
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("tight-a layout") {
  const Instance inst = gen_tight_a(4);
  CHECK(validate(inst).empty());
  CHECK(inst.num_applicants == 20);
  CHECK(inst.num_posts == 5);
  CHECK(inst.edges.size() == 36);
  for (int p = 1; p <= 5; ++p) {
    CHECK(inst.lower[p] == 4);
    CHECK(inst.upper[p] == 4);
  }
  for (const auto& e : inst.edges) CHECK(e.weight == 1);
  // post 1 sees everyone, the others see k applicants each
  const auto degrees = post_degrees(inst);
  CHECK(degrees[1] == 20);
  for (int p = 2; p <= 5; ++p) CHECK(degrees[p] == 4);
  CHECK_THROWS_AS(gen_tight_a(0), std::invalid_argument);
}

TEST_CASE("tight-a optimum fills every post") {
  CHECK(brute_force(gen_tight_a(2)).objective == 6);
  CHECK(brute_force(gen_tight_a(3), {12, 24, 0}).objective == 12);
}

TEST_CASE("tight-b layout and optimum") {
  const Instance inst = gen_tight_b(4, 100);
  CHECK(validate(inst).empty());
  CHECK(inst.num_applicants == 4);
  CHECK(inst.num_posts == 4);
  CHECK(inst.edges.size() == 16);
  long long heavy = 0;
  for (const auto& e : inst.edges) {
    if (e.applicant == e.post) {
      CHECK(e.weight == 100);
      ++heavy;
    } else {
      CHECK(e.weight == 1);
    }
    CHECK(inst.lower[e.post] == 0);
    CHECK(inst.upper[e.post] == 4);
  }
  CHECK(heavy == 4);
  CHECK(brute_force(gen_tight_b(3, 10), {12, 24, 0}).objective == 30);
  CHECK_THROWS_AS(gen_tight_b(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(gen_tight_b(3, 1), std::invalid_argument);
}

TEST_CASE("independent set reduction on cubic graphs") {
  const GeneralGraph k4 = testutil::complete_graph(4);
  const Instance inst = gen_mis_cubic(k4);
  CHECK(validate(inst).empty());
  CHECK(inst.num_posts == 4);
  CHECK(inst.num_applicants == 6);
  CHECK(inst.edges.size() == 12);
  for (int p = 1; p <= 4; ++p) {
    CHECK(inst.lower[p] == 3);
    CHECK(inst.upper[p] == 3);
  }
  CHECK(brute_force(inst).objective == 3 * mis_size(k4));

  const GeneralGraph pet = testutil::petersen_graph();
  OracleLimits roomy;
  roomy.max_edges = 36;
  roomy.edge_enum_limit = 0;
  CHECK(brute_force(gen_mis_cubic(pet), roomy).objective ==
        3 * mis_size(pet));

  CHECK_THROWS_WITH_AS(gen_mis_cubic(testutil::path_graph(4)),
                       doctest::Contains("3-regular"), std::invalid_argument);
}

TEST_CASE("independent set reduction on general graphs") {
  for (const auto& g : {testutil::cycle_graph(3), testutil::cycle_graph(4),
                        testutil::path_graph(4)}) {
    const Instance inst = gen_inapprox(g);
    CHECK(validate(inst).empty());
    CHECK(inst.num_posts == g.num_vertices);
    const long long n = g.num_vertices;
    CHECK(inst.num_applicants ==
          n * n - static_cast<long long>(g.edges.size()));
    CHECK(inst.edges.size() == static_cast<std::size_t>(n * n));
    for (int p = 1; p <= inst.num_posts; ++p) {
      CHECK(inst.lower[p] == n);
      CHECK(inst.upper[p] == n);
    }
    OracleLimits roomy;
    roomy.max_edges = 36;
    roomy.edge_enum_limit = 0;
    CHECK(brute_force(inst, roomy).objective == n * mis_size(g));
  }
}

TEST_CASE("orientation gadget") {
  const GeneralGraph triangle = testutil::cycle_graph(3);
  const Instance inst = gen_outdegree(triangle, 1);
  CHECK(validate(inst).empty());
  CHECK(inst.num_posts == 3 + 2 * 3);   // a post per vertex, two per edge
  CHECK(inst.num_applicants == 3 * 3);  // 2w + 1 per unit-weight edge
  // all applicants servable: orient the triangle as a directed cycle
  OracleLimits roomy;
  roomy.max_edges = 36;
  roomy.edge_enum_limit = 0;
  CHECK(brute_force(inst, roomy).objective == 9);
  // with bound 0 no orientation works, some applicant stays unserved
  CHECK(brute_force(gen_outdegree(triangle, 0), roomy).objective < 9);

  CHECK_THROWS_AS(gen_outdegree(triangle, -1), std::invalid_argument);
  GeneralGraph weightless = triangle;
  weightless.edges[0].weight = 0;
  CHECK_THROWS_WITH_AS(gen_outdegree(weightless, 1),
                       doctest::Contains("positive"), std::invalid_argument);
  OutdegreeOptions tiny;
  tiny.max_applicants = 2;
  CHECK_THROWS_WITH_AS(gen_outdegree(triangle, 1, tiny),
                       doctest::Contains("limit"), std::invalid_argument);
}

TEST_CASE("random instances are reproducible") {
  RandomSpec spec;
  spec.seed = 99;
  spec.num_applicants = 12;
  spec.num_posts = 5;
  spec.degree_min = 1;
  spec.degree_max = 3;
  spec.lower_min = 0;
  spec.lower_max = 2;
  spec.upper_min = 1;
  spec.upper_max = 3;
  spec.weight_min = 1;
  spec.weight_max = 9;
  CHECK(gen_random(spec) == gen_random(spec));
  RandomSpec reseeded = spec;
  reseeded.seed = 100;
  CHECK(gen_random(reseeded) != gen_random(spec));
}

TEST_CASE("quota ranges do not disturb the sampled graph") {
  RandomSpec spec;
  spec.seed = 7;
  spec.num_applicants = 10;
  spec.num_posts = 4;
  spec.degree_min = 1;
  spec.degree_max = 4;
  spec.upper_max = 2;
  const Instance base = gen_random(spec);
  RandomSpec widened = spec;
  widened.lower_max = 2;
  widened.upper_min = 2;
  widened.upper_max = 6;
  widened.weight_min = 3;
  widened.weight_max = 8;
  const Instance other = gen_random(widened);
  REQUIRE(base.edges.size() == other.edges.size());
  for (std::size_t i = 0; i < base.edges.size(); ++i) {
    CHECK(base.edges[i].applicant == other.edges[i].applicant);
    CHECK(base.edges[i].post == other.edges[i].post);
  }
}

TEST_CASE("random instances respect the requested bounds") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.num_applicants = 8;
    spec.num_posts = 4;
    spec.degree_min = 1;
    spec.degree_max = 3;
    spec.lower_min = 1;
    spec.lower_max = 2;
    spec.upper_min = 2;
    spec.upper_max = 4;
    spec.weight_min = 5;
    spec.weight_max = 7;
    const Instance inst = gen_random(spec);
    CHECK(validate(inst).empty());
    const auto degrees = applicant_degrees(inst);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : inst.edges) {
      CHECK(seen.insert({e.applicant, e.post}).second);
      CHECK(e.weight >= 5);
      CHECK(e.weight <= 7);
    }
    for (int a = 1; a <= inst.num_applicants; ++a) {
      CHECK(degrees[a] >= 1);
      CHECK(degrees[a] <= 3);
    }
    for (int p = 1; p <= inst.num_posts; ++p) {
      CHECK(inst.lower[p] >= 1);
      CHECK(inst.lower[p] <= 2);
      CHECK(inst.upper[p] >= std::max(inst.lower[p], 2LL));
      CHECK(inst.upper[p] <= 4);
    }
  }
}

TEST_CASE("random spec validation") {
  RandomSpec spec;
  spec.num_applicants = -1;
  CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
  spec = {};
  spec.degree_min = 2;
  spec.degree_max = 1;
  CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
  spec = {};
  spec.lower_min = 3;
  spec.lower_max = 1;
  CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
  spec = {};
  spec.lower_max = 5;
  spec.upper_max = 2;
  CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
  spec = {};
  spec.weight_min = 4;
  spec.weight_max = 2;
  CHECK_THROWS_AS(gen_random(spec), std::invalid_argument);
}
