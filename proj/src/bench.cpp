#include "wmlq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "wmlq/twdp.hpp"

namespace wmlq {

namespace {

// Minimal CSV quoting: only fields that need it get quoted, so the common
// all-plain case stays byte-stable and easy to diff.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

struct Row {
  std::string instance;
  std::string algorithm;
  std::string objective;
  std::string exact;
  std::string cells;
  std::string elapsed_ms;
  std::string status;
};

// The width column is a best-effort estimate from the same heuristic the
// dispatcher uses; oversized or degenerate instances just leave it blank.
std::string width_estimate(const Instance& inst,
                           DecomposeStrategy strategy) {
  const Instance s = simplify(inst);
  if (s.num_applicants + s.num_posts > 5000 || s.edges.size() > 20000)
    return "";
  try {
    return std::to_string(width(decompose(instance_graph(s), strategy)));
  } catch (const std::exception&) {
    return "";
  }
}

std::vector<Row> run_instance(const std::string& name, const Instance& inst,
                              const BenchSpec& spec) {
  std::vector<Row> rows;
  for (Algorithm algo : spec.algorithms) {
    Row row;
    row.instance = name;
    row.algorithm = algorithm_name(algo);
    SolveOptions options = spec.base_options;
    options.algorithm = algo;
    try {
      const auto result = solve(inst, options);
      if (!result) {
        row.status = "infeasible";
      } else {
        row.objective = std::to_string(result->objective);
        row.exact = result->exact ? "1" : "0";
        if (result->dp_cells) row.cells = std::to_string(*result->dp_cells);
        row.elapsed_ms = format_ms(result->elapsed_ms);
        // auto reports the branch it took, which is more useful than "auto"
        row.algorithm = result->algorithm;
        row.status = "ok";
      }
    } catch (const BudgetError& e) {
      row.status = std::string("budget: ") + e.what();
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string run_bench_csv(const BenchSpec& spec) {
  const std::size_t n = spec.instances.size();
  std::vector<std::vector<Row>> per_instance(n);
  std::vector<std::string> widths(n);

  auto work = [&](std::size_t i) {
    const auto& [name, inst] = spec.instances[i];
    widths[i] = width_estimate(inst, spec.base_options.strategy);
    per_instance[i] = run_instance(name, inst, spec);
  };

  if (spec.jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    // Parallel across instances only; each solver call stays single-threaded
    // and writes land in per-instance slots, so no locking is needed.
    std::atomic<std::size_t> next{0};
    const std::size_t threads =
        std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          work(i);
      });
    for (auto& th : pool) th.join();
  }

  struct Flat {
    std::string prefix;  // instance-level columns
    Row row;
  };
  std::vector<Flat> flat;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [name, inst] = spec.instances[i];
    std::string prefix = csv_field(name) + "," +
                         std::to_string(inst.num_applicants) + "," +
                         std::to_string(inst.num_posts) + "," +
                         std::to_string(inst.edges.size()) + "," +
                         std::to_string(max_upper_quota(inst)) + "," +
                         widths[i];
    for (auto& row : per_instance[i])
      flat.push_back({prefix, std::move(row)});
  }
  std::sort(flat.begin(), flat.end(), [](const Flat& a, const Flat& b) {
    if (a.row.instance != b.row.instance)
      return a.row.instance < b.row.instance;
    return a.row.algorithm < b.row.algorithm;
  });

  std::string csv =
      "instance,applicants,posts,edges,u_max,width_estimate,algorithm,"
      "objective,exact,cells,elapsed_ms,status\n";
  for (const auto& f : flat) {
    csv += f.prefix;
    csv += ',';
    csv += csv_field(f.row.algorithm);
    csv += ',';
    csv += f.row.objective;
    csv += ',';
    csv += f.row.exact;
    csv += ',';
    csv += f.row.cells;
    csv += ',';
    csv += f.row.elapsed_ms;
    csv += ',';
    csv += csv_field(f.row.status);
    csv += '\n';
  }
  return csv;
}

}  // namespace wmlq
