#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mvmatch {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

/// Level / tenacity value; unreachable levels are kInfinity.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Saturating addition for level arithmetic (inf + x = inf).
constexpr int level_add(int a, int b) noexcept {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

constexpr int level_add(int a, int b, int c) noexcept {
  return level_add(level_add(a, b), c);
}

/// Thrown for malformed external input (DIMACS text, matching files, bad
/// arguments to public operations).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive oracle is asked to work beyond its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mvmatch
