#pragma once

#include <vector>

#include "pathsys/solver.hpp"
#include "pathsys/types.hpp"

namespace pathsys {

/// A strongly equitably 2-colourable system in which vertices u and v take
/// different classes in every valid 2-colouring (solver-checked, not
/// assumed).
struct ForcedPairCertificate {
  PathSystem system;
  Vertex u;
  Vertex v;
  Colouring colouring;
};

/// The order-28 system with forced pair (27, 28): 126 blocks over seven
/// explicit block families, coloured odd/even.
ForcedPairCertificate build_forced_pair_28();

/// Shapes of blocks whose removal keeps the 2-colouring unique, as consumed
/// by the growth steps. Roles list the template vertices in a fixed order:
///   w3b3: a1..a6 for the pair (a6,a2,a3,a5), (a2,a4,a1,a3)
///   w2b4: a1,a2,b1,b2,b3,b4 for the pair (a1,a2,b1,b2), (b2,b3,a2,b4)
///   w1b3: b1,b2,a1,b3 for the single block (b1,b2,a1,b3)
/// The a-roles carry colour class w_class, the b-roles the other class.
enum class PatternKind { w3b3, w2b4, w1b3 };

struct PatternEntry {
  PatternKind kind;
  std::vector<Vertex> roles;
  int w_class = 0;

  std::vector<PathBlock> blocks() const;
};

struct ExtensionContext {
  PathSystem system;
  Colouring colouring;  // k = 2
  std::vector<PatternEntry> noncritical;
};

/// The order-109 uniquely 2-colourable system: four copies of the order-28
/// system glued at one point, the cross families that force the colouring,
/// and the 94 filler paths. 1962 blocks, class sizes 53 and 56.
ExtensionContext build_unique_109();

enum class UniqueStep { plus2, plus3, plus5, plus6_w2b4, plus6_w3b3 };

struct ExtendOptions {
  /// Re-prove, before consuming a pattern, that the system stays uniquely
  /// 2-colourable without the pattern's blocks. Skipped above the order cap.
  bool check_noncritical = true;
  int noncritical_max_order = 121;
  SearchBudget budget{100'000'000, 600.0};
};

/// Removes one registered pattern, redistributes its edges together with
/// the edges to the fresh points, and returns the grown context. The
/// consumed entry is dropped from the registry; steps that build a fresh
/// hexad register its embedded w3b3 pair.
ExtensionContext extend_unique(const ExtensionContext& ctx, UniqueStep step,
                               const ExtendOptions& options = {});

/// Uniquely 2-colourable system of order n for n = 0,1 (mod 3), n >= 109,
/// routed through the order-109 base:
///   n = 0 (mod 6): 109 -> 114 -> +6 chain
///   n = 1 (mod 6): 109 -> 115 -> +6 chain
///   n = 3 (mod 6): 109 -> 111 -> 117 -> +6 chain
///   n = 4 (mod 6): 109 -> 112 -> 118 -> +6 chain
ExtensionContext unique_pipeline(int n, const ExtendOptions& options = {});

/// Blocks (or block pairs) of the system whose vertex colours realize a
/// pattern template, in a deterministic order. Non-criticality is not
/// checked here.
std::vector<PatternEntry> find_noncritical_candidates(const PathSystem& system,
                                                      const Colouring& colouring,
                                                      PatternKind kind);

}  // namespace pathsys
