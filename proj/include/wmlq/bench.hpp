#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wmlq/core.hpp"
#include "wmlq/special.hpp"

namespace wmlq {

// Runs every algorithm on every named instance and returns a CSV report
// with columns
//   instance,applicants,posts,edges,u_max,width_estimate,algorithm,
//   objective,exact,cells,elapsed_ms,status
// Rows are sorted by (instance, algorithm). Failures (budget refusals,
// infeasible all-open runs, precondition violations) become rows with an
// explanatory status instead of aborting the sweep. `jobs` > 1 runs
// instances concurrently; the output order does not depend on it.
struct BenchSpec {
  std::vector<std::pair<std::string, Instance>> instances;
  std::vector<Algorithm> algorithms;
  SolveOptions base_options;
  int jobs = 1;
};

std::string run_bench_csv(const BenchSpec& spec);

}  // namespace wmlq
