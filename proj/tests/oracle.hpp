#pragma once

// Test-only reference implementations, kept independent of the solver's
// search machinery: plain iteration over all anchored assignments.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pathsys/types.hpp"

namespace pathsys::testing {

/// Every valid 2-colouring with c(anchor) = 0, by checking all 2^(n-1)
/// assignments of the remaining vertices. Usable up to n ~ 20.
inline std::vector<Colouring> brute_force_2colourings(const PathSystem& system, Vertex anchor) {
  std::vector<Vertex> rest;
  for (Vertex v : system.vertices()) {
    if (v != anchor) rest.push_back(v);
  }
  std::vector<Colouring> out;
  const std::uint64_t total = std::uint64_t{1} << rest.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::unordered_map<Vertex, int> assignment;
    assignment.emplace(anchor, 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      assignment.emplace(rest[i], (mask >> i) & 1 ? 1 : 0);
    }
    bool valid = true;
    for (const PathBlock& b : system.blocks()) {
      int first = assignment.at(b.vertices().front());
      bool mono = true;
      for (Vertex v : b.vertices()) {
        if (assignment.at(v) != first) {
          mono = false;
          break;
        }
      }
      if (mono) {
        valid = false;
        break;
      }
    }
    if (valid) out.emplace_back(2, std::move(assignment));
  }
  return out;
}

/// Canonical key of a colouring for set comparison: class of each vertex in
/// ascending vertex order.
inline std::vector<int> colouring_key(const Colouring& colouring) {
  std::vector<Vertex> vs;
  for (const auto& [v, c] : colouring.assignment()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  std::vector<int> key;
  key.reserve(vs.size());
  for (Vertex v : vs) key.push_back(colouring.at(v));
  return key;
}

inline std::vector<std::vector<int>> colouring_key_set(const std::vector<Colouring>& cs) {
  std::vector<std::vector<int>> keys;
  keys.reserve(cs.size());
  for (const Colouring& c : cs) keys.push_back(colouring_key(c));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace pathsys::testing
