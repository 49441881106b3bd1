#pragma once

#include <stdexcept>
#include <string>

#include "wmlq/core.hpp"
#include "wmlq/matching.hpp"

// Text formats. Instance files:
//
//   wmlq <num-applicants> <num-posts> <num-edges>
//   p <post-id> <lower> <upper>          one line per post
//   e <applicant-id> <post-id> <weight>  one line per edge
//
// Solution files:
//
//   sol <objective> <num-pairs>
//   a <applicant-id> <post-id>
//
// Graph files (generator inputs):
//
//   graph <num-vertices> <num-edges>
//   e <u> <v> [<weight>]                 1-based vertices, weight defaults 1
//
// Comment lines start with 'c' and may appear anywhere. Rendering is
// canonical (no comments, ids ascending where the format does not fix an
// order, '\n' line endings), so render(parse(render(x))) is byte-identical
// to render(x).

namespace wmlq {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse errors carry 1-based line numbers in their message.
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

struct Solution {
  long long objective = 0;
  Assignment pairs;
};

Solution parse_solution(const std::string& text);
std::string render_solution(const Solution& sol);

GeneralGraph parse_graph(const std::string& text);
std::string render_graph(const GeneralGraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wmlq
