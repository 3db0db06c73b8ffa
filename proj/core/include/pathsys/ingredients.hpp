#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pathsys/types.hpp"

namespace pathsys {

/// The catalogue of small explicit P4 decompositions used as building
/// blocks: three complete systems, eight complete-bipartite decompositions,
/// and six bipartite-plus-clique decompositions. Each carries a fixed block
/// list and a two-class split with no monochromatic block.
enum class IngredientKind {
  sys4,
  sys6,
  sys7,
  k33,
  k43,
  k73,
  k62,
  k63,
  k64,
  k65,
  k66,
  k67,
  k63_plus_k3,
  k72_plus_k2,
  k73_plus_k3,
  k42_plus_k2,
  k45_plus_k5,
};

constexpr int kIngredientCount = 17;

std::span<const IngredientKind> all_ingredient_kinds();

std::string_view ingredient_tag(IngredientKind kind);
std::optional<IngredientKind> ingredient_from_tag(std::string_view tag);

/// (v-side, w-side) label counts the kind expects.
std::pair<int, int> ingredient_arity(IngredientKind kind);

struct IngredientInstance {
  std::vector<PathBlock> blocks;
  GraphSpec target;
  /// Class 0/1 split of exactly the instantiated labels.
  std::vector<std::pair<Vertex, int>> colouring;
};

/// Instantiates the kind's block list with v_i -> left[i-1] and
/// w_j -> right[j-1]. Both lists together must be duplicate-free and match
/// the kind's arity.
IngredientInstance build_ingredient(IngredientKind kind, std::span<const Vertex> left,
                                    std::span<const Vertex> right);

}  // namespace pathsys
