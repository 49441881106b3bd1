#include "wmlq/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace wmlq {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long long to_int(const std::string& token, std::size_t line_no) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    fail(line_no, "expected an integer, got '" + token + "'");
  return value;
}

// Splits into lines, keeping 1-based line numbers and dropping comment and
// blank lines. Tolerates trailing carriage returns and a missing final
// newline.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == 'c' && (raw.size() == 1 || raw[1] == ' ')) continue;
    Line line{line_no, {}};
    std::istringstream in(raw);
    std::string token;
    while (in >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (eol == text.size()) break;
  }
  return out;
}

const Line& expect_line(const std::vector<Line>& lines, std::size_t index,
                        const std::string& what) {
  if (index >= lines.size())
    throw ParseError("unexpected end of file: expected " + what);
  return lines[index];
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const auto lines = significant_lines(text);
  const Line& header = expect_line(lines, 0, "'wmlq' header");
  if (header.tokens[0] != "wmlq" || header.tokens.size() != 4)
    fail(header.number, "expected header 'wmlq <applicants> <posts> <edges>'");

  Instance inst;
  inst.num_applicants = static_cast<int>(to_int(header.tokens[1], header.number));
  inst.num_posts = static_cast<int>(to_int(header.tokens[2], header.number));
  const long long num_edges = to_int(header.tokens[3], header.number);
  if (inst.num_applicants < 0 || inst.num_posts < 0 || num_edges < 0)
    fail(header.number, "negative count in header");

  inst.lower.assign(inst.num_posts + 1, 0);
  inst.upper.assign(inst.num_posts + 1, 0);
  std::vector<bool> quota_seen(inst.num_posts + 1, false);
  long long quota_lines = 0;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "p") {
      if (line.tokens.size() != 4)
        fail(line.number, "expected 'p <post-id> <lower> <upper>'");
      const long long p = to_int(line.tokens[1], line.number);
      if (p < 1 || p > inst.num_posts)
        fail(line.number, "post id " + std::to_string(p) + " out of range");
      if (quota_seen[p])
        fail(line.number, "duplicate quota line for post " + std::to_string(p));
      quota_seen[p] = true;
      ++quota_lines;
      inst.lower[p] = to_int(line.tokens[2], line.number);
      inst.upper[p] = to_int(line.tokens[3], line.number);
    } else if (line.tokens[0] == "e") {
      if (line.tokens.size() != 4)
        fail(line.number, "expected 'e <applicant-id> <post-id> <weight>'");
      Edge e;
      e.applicant = static_cast<int>(to_int(line.tokens[1], line.number));
      e.post = static_cast<int>(to_int(line.tokens[2], line.number));
      e.weight = to_int(line.tokens[3], line.number);
      inst.edges.push_back(e);
    } else {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }

  if (quota_lines != inst.num_posts)
    throw ParseError("header declares " + std::to_string(inst.num_posts) +
                     " posts but " + std::to_string(quota_lines) +
                     " quota lines present");
  if (static_cast<long long>(inst.edges.size()) != num_edges)
    throw ParseError("header declares " + std::to_string(num_edges) +
                     " edges but " + std::to_string(inst.edges.size()) +
                     " edge lines present");
  return inst;
}

std::string render_instance(const Instance& inst) {
  std::string out = "wmlq " + std::to_string(inst.num_applicants) + " " +
                    std::to_string(inst.num_posts) + " " +
                    std::to_string(inst.edges.size()) + "\n";
  for (int p = 1; p <= inst.num_posts; ++p)
    out += "p " + std::to_string(p) + " " + std::to_string(inst.lower[p]) +
           " " + std::to_string(inst.upper[p]) + "\n";
  for (const Edge& e : inst.edges)
    out += "e " + std::to_string(e.applicant) + " " + std::to_string(e.post) +
           " " + std::to_string(e.weight) + "\n";
  return out;
}

Solution parse_solution(const std::string& text) {
  const auto lines = significant_lines(text);
  const Line& header = expect_line(lines, 0, "'sol' header");
  if (header.tokens[0] != "sol" || header.tokens.size() != 3)
    fail(header.number, "expected header 'sol <objective> <pairs>'");

  Solution sol;
  sol.objective = to_int(header.tokens[1], header.number);
  const long long pairs = to_int(header.tokens[2], header.number);
  if (pairs < 0) fail(header.number, "negative pair count");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "a" || line.tokens.size() != 3)
      fail(line.number, "expected 'a <applicant-id> <post-id>'");
    sol.pairs.emplace_back(
        static_cast<int>(to_int(line.tokens[1], line.number)),
        static_cast<int>(to_int(line.tokens[2], line.number)));
  }
  if (static_cast<long long>(sol.pairs.size()) != pairs)
    throw ParseError("header declares " + std::to_string(pairs) +
                     " pairs but " + std::to_string(sol.pairs.size()) +
                     " present");
  return sol;
}

std::string render_solution(const Solution& sol) {
  std::string out = "sol " + std::to_string(sol.objective) + " " +
                    std::to_string(sol.pairs.size()) + "\n";
  for (const auto& [a, p] : sol.pairs)
    out += "a " + std::to_string(a) + " " + std::to_string(p) + "\n";
  return out;
}

GeneralGraph parse_graph(const std::string& text) {
  const auto lines = significant_lines(text);
  const Line& header = expect_line(lines, 0, "'graph' header");
  if (header.tokens[0] != "graph" || header.tokens.size() != 3)
    fail(header.number, "expected header 'graph <vertices> <edges>'");

  GeneralGraph g;
  g.num_vertices = static_cast<int>(to_int(header.tokens[1], header.number));
  const long long num_edges = to_int(header.tokens[2], header.number);
  if (g.num_vertices < 0 || num_edges < 0)
    fail(header.number, "negative count in header");

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e" ||
        (line.tokens.size() != 3 && line.tokens.size() != 4))
      fail(line.number, "expected 'e <u> <v> [<weight>]'");
    const long long u = to_int(line.tokens[1], line.number);
    const long long v = to_int(line.tokens[2], line.number);
    if (u < 1 || u > g.num_vertices || v < 1 || v > g.num_vertices)
      fail(line.number, "vertex id out of range");
    GeneralGraph::Edge e;
    e.u = static_cast<int>(u - 1);
    e.v = static_cast<int>(v - 1);
    e.weight = line.tokens.size() == 4 ? to_int(line.tokens[3], line.number) : 1;
    g.edges.push_back(e);
  }
  if (static_cast<long long>(g.edges.size()) != num_edges)
    throw ParseError("header declares " + std::to_string(num_edges) +
                     " edges but " + std::to_string(g.edges.size()) +
                     " present");
  return g;
}

std::string render_graph(const GeneralGraph& g) {
  std::string out = "graph " + std::to_string(g.num_vertices) + " " +
                    std::to_string(g.edges.size()) + "\n";
  for (const auto& e : g.edges)
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) +
           " " + std::to_string(e.weight) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace wmlq
