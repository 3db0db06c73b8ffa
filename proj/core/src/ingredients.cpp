#include "pathsys/ingredients.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace pathsys {

namespace {

// Vertex code: +j means v_j, -j means w_j.
struct IngredientDef {
  IngredientKind kind;
  std::string_view tag;
  int nv;
  int nw;
  GraphSpec::Kind target;
  std::vector<std::array<int, 4>> blocks;
  std::vector<int> red;  // class-0 codes; every other label is class 1
};

const std::vector<IngredientDef>& catalogue() {
  static const std::vector<IngredientDef> defs = {
      {IngredientKind::sys4, "sys4", 4, 0, GraphSpec::Kind::complete,
       {{3, 1, 2, 4}, {1, 4, 3, 2}},
       {1, 3}},
      {IngredientKind::sys6, "sys6", 6, 0, GraphSpec::Kind::complete,
       {{6, 1, 2, 5}, {6, 2, 3, 5}, {2, 4, 1, 3}, {4, 3, 6, 5}, {1, 5, 4, 6}},
       {1, 3, 5}},
      {IngredientKind::sys7, "sys7", 7, 0, GraphSpec::Kind::complete,
       {{2, 7, 4, 3}, {7, 3, 6, 5}, {1, 7, 6, 2}, {2, 4, 1, 3}, {1, 5, 4, 6}, {2, 3, 5, 7},
        {6, 1, 2, 5}},
       {1, 3, 5, 7}},
      {IngredientKind::k33, "k33", 3, 3, GraphSpec::Kind::complete_bipartite,
       {{2, -1, 1, -3}, {1, -2, 3, -1}, {3, -3, 2, -2}},
       {1, 3, -2}},
      {IngredientKind::k43, "k43", 4, 3, GraphSpec::Kind::complete_bipartite,
       {{4, -3, 1, -1}, {2, -1, 4, -2}, {1, -2, 3, -1}, {3, -3, 2, -2}},
       {1, 3, -1, -3}},
      {IngredientKind::k73, "k73", 7, 3, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 7, -3}, {7, -2, 2, -1}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1},
        {5, -2, 6, -1}, {6, -3, 1, -2}},
       {1, 3, 5, 7, -2}},
      {IngredientKind::k62, "k62", 6, 2, GraphSpec::Kind::complete_bipartite,
       {{-1, 1, -2, 2}, {2, -1, 3, -2}, {-1, 4, -2, 5}, {5, -1, 6, -2}},
       {1, 3, 5, -1}},
      {IngredientKind::k63, "k63", 6, 3, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 2, -2}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1}, {5, -2, 6, -1},
        {6, -3, 1, -2}},
       {1, 3, 5, -1, -3}},
      {IngredientKind::k64, "k64", 6, 4, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 2, -2}, {1, -3, 2, -4}, {1, -2, 3, -1}, {1, -4, 3, -3}, {4, -1, 5, -2},
        {4, -3, 5, -4}, {4, -2, 6, -1}, {4, -4, 6, -3}},
       {1, 3, 5, -1, -3}},
      {IngredientKind::k65, "k65", 6, 5, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 2, -2}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1}, {5, -2, 6, -1},
        {6, -3, 1, -2}, {2, -4, 3, -5}, {2, -5, 4, -4}, {5, -4, 6, -5}, {5, -5, 1, -4}},
       {1, 3, 5, -1, -3, -5}},
      {IngredientKind::k66, "k66", 6, 6, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 2, -2}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1}, {5, -2, 6, -1},
        {6, -3, 1, -2}, {1, -4, 2, -5}, {2, -6, 3, -4}, {3, -5, 4, -4}, {4, -6, 5, -4},
        {5, -5, 6, -4}, {6, -6, 1, -5}},
       {1, 3, 5, -1, -3, -5}},
      {IngredientKind::k67, "k67", 6, 7, GraphSpec::Kind::complete_bipartite,
       {{1, -1, 2, -2}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1}, {5, -2, 6, -1},
        {6, -3, 1, -2}, {1, -4, 2, -5}, {1, -6, 2, -7}, {1, -5, 3, -4}, {1, -7, 3, -6},
        {4, -4, 5, -5}, {4, -6, 5, -7}, {4, -5, 6, -4}, {4, -7, 6, -6}},
       {1, 3, 5, -1, -3, -5, -7}},
      {IngredientKind::k63_plus_k3, "k63plusk3", 6, 3, GraphSpec::Kind::bipartite_plus_clique,
       {{1, -1, -2, -3}, {-2, 2, -1, -3}, {2, -3, 3, -1}, {3, -2, 4, -1}, {4, -3, 5, -1},
        {5, -2, 6, -1}, {6, -3, 1, -2}},
       {1, 3, 5, -1, -3}},
      {IngredientKind::k72_plus_k2, "k72plusk2", 7, 2, GraphSpec::Kind::bipartite_plus_clique,
       {{2, -1, 3, -2}, {2, -2, -1, 4}, {4, -2, 5, -1}, {6, -1, 7, -2}, {6, -2, 1, -1}},
       {1, 3, 5, 7, -1}},
      {IngredientKind::k73_plus_k3, "k73plusk3", 7, 3, GraphSpec::Kind::bipartite_plus_clique,
       {{4, -1, 5, -3}, {5, -2, 4, -3}, {6, -1, 7, -3}, {7, -2, 6, -3}, {1, -3, 3, -1},
        {2, -1, 1, -2}, {3, -2, -3, 2}, {2, -2, -1, -3}},
       {1, 3, 5, 7, -1}},
      {IngredientKind::k42_plus_k2, "k42plusk2", 4, 2, GraphSpec::Kind::bipartite_plus_clique,
       {{1, -1, -2, 4}, {4, -1, 2, -2}, {1, -2, 3, -1}},
       {1, 3, -1}},
      {IngredientKind::k45_plus_k5, "k45plusk5", 4, 5, GraphSpec::Kind::bipartite_plus_clique,
       {{4, -3, 1, -1}, {2, -1, 4, -2}, {1, -2, 3, -1}, {3, -3, 2, -2}, {1, -4, -5, 4},
        {4, -4, 2, -5}, {1, -5, 3, -4}, {-4, -1, -2, -3}, {-4, -2, -5, -3}, {-4, -3, -1, -5}},
       {1, 3, -1, -3, -5}},
  };
  return defs;
}

const IngredientDef& def_for(IngredientKind kind) {
  for (const IngredientDef& d : catalogue()) {
    if (d.kind == kind) return d;
  }
  throw Error(Errc::not_supported, "unknown ingredient kind");
}

}  // namespace

std::span<const IngredientKind> all_ingredient_kinds() {
  static const std::array<IngredientKind, kIngredientCount> kinds = [] {
    std::array<IngredientKind, kIngredientCount> out{};
    int i = 0;
    for (const IngredientDef& d : catalogue()) out[i++] = d.kind;
    return out;
  }();
  return kinds;
}

std::string_view ingredient_tag(IngredientKind kind) { return def_for(kind).tag; }

std::optional<IngredientKind> ingredient_from_tag(std::string_view tag) {
  for (const IngredientDef& d : catalogue()) {
    if (d.tag == tag) return d.kind;
  }
  return std::nullopt;
}

std::pair<int, int> ingredient_arity(IngredientKind kind) {
  const IngredientDef& d = def_for(kind);
  return {d.nv, d.nw};
}

IngredientInstance build_ingredient(IngredientKind kind, std::span<const Vertex> left,
                                    std::span<const Vertex> right) {
  const IngredientDef& d = def_for(kind);
  if (static_cast<int>(left.size()) != d.nv || static_cast<int>(right.size()) != d.nw) {
    throw Error(Errc::arity_mismatch,
                std::string(d.tag) + " takes " + std::to_string(d.nv) + "+" +
                    std::to_string(d.nw) + " labels, got " + std::to_string(left.size()) + "+" +
                    std::to_string(right.size()));
  }
  std::unordered_set<Vertex> seen;
  for (Vertex v : left) {
    if (!seen.insert(v).second) {
      throw Error(Errc::invalid_relabelling, "repeated label " + std::to_string(v));
    }
  }
  for (Vertex v : right) {
    if (!seen.insert(v).second) {
      throw Error(Errc::invalid_relabelling, "repeated label " + std::to_string(v));
    }
  }

  auto resolve = [&](int code) -> Vertex {
    return code > 0 ? left[code - 1] : right[-code - 1];
  };

  IngredientInstance out{
      {},
      [&] {
        std::vector<Vertex> ls(left.begin(), left.end());
        std::vector<Vertex> rs(right.begin(), right.end());
        switch (d.target) {
          case GraphSpec::Kind::complete:
            return GraphSpec::complete(std::move(ls));
          case GraphSpec::Kind::complete_bipartite:
            return GraphSpec::complete_bipartite(std::move(ls), std::move(rs));
          case GraphSpec::Kind::bipartite_plus_clique:
            return GraphSpec::bipartite_plus_clique(std::move(ls), std::move(rs));
        }
        throw Error(Errc::not_supported, "bad target kind");
      }(),
      {}};

  out.blocks.reserve(d.blocks.size());
  for (const auto& codes : d.blocks) {
    out.blocks.emplace_back(
        std::vector<Vertex>{resolve(codes[0]), resolve(codes[1]), resolve(codes[2]),
                            resolve(codes[3])});
  }

  std::unordered_set<int> red(d.red.begin(), d.red.end());
  for (int j = 1; j <= d.nv; ++j) out.colouring.emplace_back(left[j - 1], red.contains(j) ? 0 : 1);
  for (int j = 1; j <= d.nw; ++j) out.colouring.emplace_back(right[j - 1], red.contains(-j) ? 0 : 1);
  return out;
}

}  // namespace pathsys
