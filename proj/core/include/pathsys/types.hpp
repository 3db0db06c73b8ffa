#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathsys {

/// 1-based vertex label.
using Vertex = std::int32_t;

enum class Errc {
  invalid_block,
  invalid_relabelling,
  invalid_system,
  invalid_colouring,
  arity_mismatch,
  not_admissible,
  odd_order,
  not_a_design,
  wrong_residue,
  unsupported_k,
  unreachable,
  pattern_unavailable,
  guard_failed,
  not_supported,
  invalid_k,
  not_applicable,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Unordered vertex pair, stored with a <= b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    // splitmix64 finalizer
    std::uint64_t x = e.key();
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

/// A path on m >= 2 distinct vertices, identified with its reversal.
/// Always held in canonical form: the lexicographically smaller of the
/// vertex sequence and its reverse.
class PathBlock {
 public:
  explicit PathBlock(std::vector<Vertex> vertices);
  PathBlock(std::initializer_list<Vertex> vertices)
      : PathBlock(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  int order() const noexcept { return static_cast<int>(vertices_.size()); }

  /// The m-1 consecutive unordered pairs.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const;

  friend bool operator==(const PathBlock&, const PathBlock&) = default;
  friend auto operator<=>(const PathBlock&, const PathBlock&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct PathBlockHash {
  std::size_t operator()(const PathBlock& b) const noexcept;
};

/// Replaces every vertex of every block through the given bijection.
/// The map must be injective on all vertices that occur in the blocks.
std::vector<PathBlock> relabel(std::span<const PathBlock> blocks,
                               const std::unordered_map<Vertex, Vertex>& map);

/// Edge set a decomposition is expected to cover exactly.
class GraphSpec {
 public:
  enum class Kind { complete, complete_bipartite, bipartite_plus_clique };

  static GraphSpec complete(std::vector<Vertex> vertices);
  static GraphSpec complete_bipartite(std::vector<Vertex> left, std::vector<Vertex> right);
  /// Edges between the sides plus the complete graph on the right side.
  static GraphSpec bipartite_plus_clique(std::vector<Vertex> left, std::vector<Vertex> right);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Vertex>& left() const noexcept { return left_; }
  const std::vector<Vertex>& right() const noexcept { return right_; }

  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

 private:
  GraphSpec(Kind kind, std::vector<Vertex> left, std::vector<Vertex> right);

  Kind kind_;
  std::vector<Vertex> left_;   // sorted
  std::vector<Vertex> right_;  // sorted; empty for Kind::complete
};

/// Total map from vertices to colour classes 0..k-1.
class Colouring {
 public:
  Colouring(int k, std::unordered_map<Vertex, int> assignment);

  int k() const noexcept { return k_; }
  std::optional<int> colour_of(Vertex v) const;
  /// Throws when v is unassigned.
  int at(Vertex v) const;
  const std::unordered_map<Vertex, int>& assignment() const noexcept { return assignment_; }

  std::size_t size() const noexcept { return assignment_.size(); }
  std::vector<int> class_sizes() const;
  /// Vertices of one class in ascending label order.
  std::vector<Vertex> vertices_in_class(int c) const;

 private:
  int k_;
  std::unordered_map<Vertex, int> assignment_;
};

enum class Equitability { strong, equitable, neither };

Equitability equitability(const Colouring& colouring);

/// An edge-disjoint collection of paths of a fixed order m over a vertex set.
/// Construction rejects blocks of the wrong order, blocks using vertices
/// outside the set, repeated blocks, and any pair of blocks sharing an edge.
class PathSystem {
 public:
  PathSystem(int m, std::vector<Vertex> vertices, std::vector<PathBlock> blocks);

  int path_order() const noexcept { return m_; }
  int order() const noexcept { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<PathBlock>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  bool contains_block(const PathBlock& block) const;
  bool contains_vertex(Vertex v) const;

 private:
  int m_;
  std::vector<Vertex> vertices_;  // sorted unique
  std::vector<PathBlock> blocks_;
};

}  // namespace pathsys
