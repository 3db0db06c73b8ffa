#pragma once

#include <filesystem>
#include <iosfwd>
#include <unordered_map>
#include <vector>

#include "pathsys/types.hpp"

namespace pathsys {

/// PATHSYS text format:
///   PATHSYS 1 <n> <m> <b>
///   b lines of m space-separated vertex labels in 1..n
/// Lines starting with '#' are ignored.
struct SystemFileData {
  int n = 0;
  int m = 0;
  std::vector<PathBlock> blocks;
};

SystemFileData read_system_file(std::istream& in);
SystemFileData read_system_file(const std::filesystem::path& path);
void write_system_file(std::ostream& out, const PathSystem& system);
void write_system_file(const std::filesystem::path& path, const PathSystem& system);

/// Builds the system over the vertex set 1..n; throws on blocks that
/// violate the system invariants.
PathSystem to_system(const SystemFileData& data);

/// COLOURING text format:
///   COLOURING <n> <k>
///   n lines "<vertex> <class>", every vertex 1..n exactly once
struct ColouringFileData {
  int n = 0;
  int k = 0;
  std::unordered_map<Vertex, int> assignment;
};

ColouringFileData read_colouring_file(std::istream& in);
ColouringFileData read_colouring_file(const std::filesystem::path& path);
void write_colouring_file(std::ostream& out, const Colouring& colouring);
void write_colouring_file(const std::filesystem::path& path, const Colouring& colouring);

Colouring to_colouring(const ColouringFileData& data);

}  // namespace pathsys
