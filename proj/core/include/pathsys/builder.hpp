#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathsys/types.hpp"

namespace pathsys {

/// Tarsi's existence conditions for a P_m system of order n:
/// n = 1, or n >= m and n(n-1) = 0 (mod 2m-2).
bool is_admissible(std::int64_t n, int m);

struct BuiltSystem {
  PathSystem system;
  Colouring colouring;
};

/// A complete P4 system of order n together with a 2-colouring in which
/// no block is monochromatic. The classes are the odd and the even labels,
/// which makes the colouring strongly equitable for n = 0,4 (mod 6) and
/// equitable otherwise. Orders 4, 6, 7 are the explicit small systems;
/// larger orders are assembled from hexads and the bipartite gadgets.
BuiltSystem build_2chromatic(int n);

/// Partition of the edges of K_n (n even) into n/2 Hamilton paths on the
/// labels 1..n, by the classical zig-zag cycle decomposition of K_{n+1}
/// with the hub vertex deleted.
std::vector<PathBlock> hamilton_path_decomposition(int n);

/// Replaces each block of a (n, 2t, 1)-design by a Hamilton-path
/// decomposition of the clique on its vertices, yielding a P_{2t} system
/// of order n.
PathSystem compose_design(std::span<const std::vector<Vertex>> design_blocks, int n);

/// Allowed order increments for a k-chromatic extension starting from a
/// complete system of order n: {3,4,6,7} for n = 0,3 (mod 6) and
/// {2,3,5,6} for n = 1,4 (mod 6).
std::vector<int> k_extension_steps(int n);

/// Grows a k-chromatic P4 system (k >= 3) by one of the residue's allowed
/// increments, adding gadget decompositions on fresh points. The input
/// blocks are a subset of the output blocks and the input colouring is
/// extended exactly by the published class additions.
BuiltSystem extend_k_chromatic(const PathSystem& system, const Colouring& colouring, int step);

/// Repeated extension from the seed to order n, choosing the fewest steps
/// (ties: smaller first step).
BuiltSystem k_chromatic_pipeline(const PathSystem& seed_system, const Colouring& seed_colouring,
                                 int n);

}  // namespace pathsys
