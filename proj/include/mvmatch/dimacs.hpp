#pragma once

#include <iosfwd>
#include <string_view>

#include "mvmatch/graph.hpp"

namespace mvmatch {

/// Reads the DIMACS edge format (`c` comments, one `p edge <n> <m>` line,
/// then m lines `e <u> <v>` with 1-based endpoints). Throws InputError with
/// the offending line number on malformed input.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs_string(std::string_view text);

void write_dimacs(const Graph& g, std::ostream& out);

/// `size <k>` followed by one `matched <u> <v>` line per pair, 1-based.
void write_matching(const Matching& m, std::ostream& out);

/// Inverse of write_matching for a graph on n vertices. Partners are stored
/// exactly as listed, so a file naming one vertex in two pairs yields an
/// asymmetric Matching that validate_matching will flag.
Matching parse_matching(std::istream& in, int num_vertices);
Matching parse_matching_string(std::string_view text, int num_vertices);

}  // namespace mvmatch
