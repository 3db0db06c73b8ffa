#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pathsys/types.hpp"

namespace pathsys {

/// Limits for a single solver query. An exceeded budget yields "unknown",
/// never a wrong answer.
struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
};

enum class Answer { yes, no, unknown };

enum class ViolationKind {
  missing_edge,
  duplicate_edge,
  stray_edge,
  monochromatic_block,
  unassigned_vertex,
};

struct Violation {
  ViolationKind kind;
  std::vector<Vertex> detail;  // edge endpoints, block vertices, or a single vertex
};

struct VerifyReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

const char* violation_name(ViolationKind kind);

/// Checks that every target edge occurs in exactly one block and that no
/// block edge lies outside the target.
VerifyReport verify_decomposition(std::span<const PathBlock> blocks, const GraphSpec& target);

/// Checks that the colouring is total on the system's vertices and leaves
/// no block monochromatic.
VerifyReport verify_colouring(const PathSystem& system, const Colouring& colouring);
VerifyReport verify_colouring(std::span<const PathBlock> blocks, std::span<const Vertex> vertices,
                              const Colouring& colouring);

enum class SearchStatus { exhausted, limit_reached, budget_exhausted };

struct EnumerateResult {
  std::vector<Colouring> colourings;
  SearchStatus status = SearchStatus::exhausted;
  std::uint64_t nodes = 0;
};

/// All valid 2-colourings with c(anchor) = 0, in a deterministic order,
/// stopping once `limit` have been found. Backtracking with unit
/// propagation: when m-1 vertices of a block share a colour the last one is
/// forced to the other class.
EnumerateResult enumerate_2colourings(const PathSystem& system, Vertex anchor, std::size_t limit,
                                      const SearchBudget& budget = {});

/// yes iff the system admits exactly one 2-colouring up to swapping the
/// two classes.
Answer is_uniquely_2chromatic(const PathSystem& system, const SearchBudget& budget = {});

struct ForcedPairResult {
  Answer answer = Answer::unknown;
  /// A valid colouring with c(u) = c(v), present when answer is no.
  std::optional<Colouring> witness;
  std::uint64_t nodes = 0;
};

/// yes iff no valid 2-colouring gives u and v the same class.
ForcedPairResult forced_distinct(const PathSystem& system, Vertex u, Vertex v,
                                 const SearchBudget& budget = {});

struct ColourabilityResult {
  Answer answer = Answer::unknown;
  std::optional<Colouring> witness;  // present when answer is yes
  std::uint64_t nodes = 0;
};

ColourabilityResult is_k_colourable(const PathSystem& system, int k,
                                    const SearchBudget& budget = {});

struct ChromaticResult {
  /// Absent when the budget ran out before the ascending search settled.
  std::optional<int> value;
  /// Largest k for which every smaller class count was refuted.
  int lower_bound = 1;
  std::optional<Colouring> witness;
};

ChromaticResult chromatic_number(const PathSystem& system, const SearchBudget& budget = {});

/// Best-effort randomized search for a P4 system of order n that the solver
/// can prove not (k-1)-colourable. Starts from the constructive 2-chromatic
/// system and applies edge-preserving block trades.
std::optional<std::pair<PathSystem, Colouring>> search_seed(int k, int n,
                                                            const SearchBudget& budget = {},
                                                            std::uint64_t seed = 0);

}  // namespace pathsys
