#include "mvmatch/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mvmatch {
namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses a 1-based vertex token and returns the 0-based index.
Vertex read_vertex(std::istringstream& fields, int line_no, int n) {
  long long value = 0;
  if (!(fields >> value)) fail(line_no, "expected a vertex index");
  if (value < 1 || value > n) {
    fail(line_no, "vertex index " + std::to_string(value) + " out of range [1, " +
                      std::to_string(n) + "]");
  }
  return static_cast<Vertex>(value - 1);
}

void expect_end(std::istringstream& fields, int line_no) {
  std::string extra;
  if (fields >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_problem = false;
  long long n = 0;
  long long declared = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_problem) fail(line_no, "duplicate problem line");
      std::string format;
      if (!(fields >> format >> n >> declared)) fail(line_no, "malformed problem line");
      if (format != "edge") fail(line_no, "unsupported problem format '" + format + "'");
      if (n < 0 || declared < 0) fail(line_no, "negative size in problem line");
      if (n > std::numeric_limits<Vertex>::max()) fail(line_no, "vertex count too large");
      expect_end(fields, line_no);
      have_problem = true;
      edges.reserve(static_cast<std::size_t>(declared));
    } else if (tag == "e") {
      if (!have_problem) fail(line_no, "edge line before problem line");
      Vertex u = read_vertex(fields, line_no, static_cast<int>(n));
      Vertex v = read_vertex(fields, line_no, static_cast<int>(n));
      expect_end(fields, line_no);
      if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u + 1));
      edges.push_back({u, v});
    } else {
      fail(line_no, "unrecognized line tag '" + tag + "'");
    }
  }
  if (!have_problem) throw InputError("missing problem line 'p edge <n> <m>'");
  if (static_cast<long long>(edges.size()) != declared) {
    throw InputError("problem line declares " + std::to_string(declared) + " edges but " +
                     std::to_string(edges.size()) + " edge lines were read");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_matching(const Matching& m, std::ostream& out) {
  const auto pairs = m.pairs();
  out << "size " << pairs.size() << '\n';
  for (const Edge& e : pairs) out << "matched " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Matching parse_matching(std::istream& in, int num_vertices) {
  std::vector<Vertex> partners(static_cast<std::size_t>(num_vertices), kNoVertex);
  std::string line;
  int line_no = 0;
  long long declared = -1;
  long long listed = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "c") continue;
    if (tag == "size") {
      if (declared >= 0) fail(line_no, "duplicate size line");
      if (!(fields >> declared) || declared < 0) fail(line_no, "malformed size line");
      expect_end(fields, line_no);
    } else if (tag == "matched") {
      if (declared < 0) fail(line_no, "matched line before size line");
      Vertex u = read_vertex(fields, line_no, num_vertices);
      Vertex v = read_vertex(fields, line_no, num_vertices);
      expect_end(fields, line_no);
      partners[static_cast<std::size_t>(u)] = v;
      partners[static_cast<std::size_t>(v)] = u;
      ++listed;
    } else {
      fail(line_no, "unrecognized line tag '" + tag + "'");
    }
  }
  if (declared < 0) throw InputError("missing 'size <k>' line");
  if (listed != declared) {
    throw InputError("size line declares " + std::to_string(declared) + " pairs but " +
                     std::to_string(listed) + " were listed");
  }
  return Matching::from_partners(std::move(partners));
}

Matching parse_matching_string(std::string_view text, int num_vertices) {
  std::istringstream in{std::string(text)};
  return parse_matching(in, num_vertices);
}

}  // namespace mvmatch
