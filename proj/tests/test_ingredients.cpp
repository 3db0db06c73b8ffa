#include <doctest.h>

#include <map>

#include "pathsys/ingredients.hpp"
#include "pathsys/solver.hpp"

using namespace pathsys;

namespace {

IngredientInstance on_canonical_labels(IngredientKind kind) {
  auto [nv, nw] = ingredient_arity(kind);
  std::vector<Vertex> left, right;
  for (int i = 1; i <= nv; ++i) left.push_back(i);
  for (int j = 1; j <= nw; ++j) right.push_back(nv + j);
  return build_ingredient(kind, left, right);
}

}  // namespace

TEST_CASE("every ingredient decomposes its target exactly") {
  for (IngredientKind kind : all_ingredient_kinds()) {
    CAPTURE(ingredient_tag(kind));
    IngredientInstance inst = on_canonical_labels(kind);
    VerifyReport report = verify_decomposition(inst.blocks, inst.target);
    CHECK(report.ok());
    CHECK(inst.blocks.size() * 3 == inst.target.edge_count());
  }
}

TEST_CASE("published block counts") {
  const std::map<std::string_view, std::size_t> expected = {
      {"sys4", 2},      {"sys6", 5},      {"sys7", 7},      {"k33", 3},      {"k43", 4},
      {"k73", 7},       {"k62", 4},       {"k63", 6},       {"k64", 8},      {"k65", 10},
      {"k66", 12},      {"k67", 14},      {"k63plusk3", 7}, {"k72plusk2", 5},
      {"k73plusk3", 8}, {"k42plusk2", 3}, {"k45plusk5", 10},
  };
  REQUIRE(expected.size() == static_cast<std::size_t>(kIngredientCount));
  for (IngredientKind kind : all_ingredient_kinds()) {
    CAPTURE(ingredient_tag(kind));
    CHECK(on_canonical_labels(kind).blocks.size() == expected.at(ingredient_tag(kind)));
  }
}

TEST_CASE("no ingredient block is monochromatic under its published split") {
  for (IngredientKind kind : all_ingredient_kinds()) {
    CAPTURE(ingredient_tag(kind));
    IngredientInstance inst = on_canonical_labels(kind);
    std::unordered_map<Vertex, int> assignment(inst.colouring.begin(), inst.colouring.end());
    REQUIRE(assignment.size() == inst.colouring.size());
    Colouring colouring(2, std::move(assignment));
    std::vector<Vertex> vertices;
    for (auto [v, c] : inst.colouring) vertices.push_back(v);
    CHECK(verify_colouring(inst.blocks, vertices, colouring).ok());
    // The split is strongly equitable or equitable, never worse.
    CHECK(equitability(colouring) != Equitability::neither);
  }
}

TEST_CASE("k33 matches its printed paths") {
  IngredientInstance inst = build_ingredient(IngredientKind::k33, std::vector<Vertex>{1, 2, 3},
                                             std::vector<Vertex>{4, 5, 6});
  REQUIRE(inst.blocks.size() == 3);
  CHECK(inst.blocks[0] == PathBlock{2, 4, 1, 6});
  CHECK(inst.blocks[1] == PathBlock{1, 5, 3, 4});
  CHECK(inst.blocks[2] == PathBlock{3, 6, 2, 5});
}

TEST_CASE("k45plusk5 covers the right-side clique") {
  IngredientInstance inst = on_canonical_labels(IngredientKind::k45_plus_k5);
  CHECK(inst.target.edge_count() == 30);
  CHECK(inst.blocks.size() == 10);
  // Clique edges among labels 5..9 are present.
  VerifyReport report = verify_decomposition(inst.blocks, inst.target);
  CHECK(report.ok());
}

TEST_CASE("arity and label validation") {
  CHECK_THROWS_AS(build_ingredient(IngredientKind::k67, std::vector<Vertex>{1, 2, 3, 4, 5, 6},
                                   std::vector<Vertex>{7, 8}),
                  Error);
  CHECK_THROWS_AS(build_ingredient(IngredientKind::k33, std::vector<Vertex>{1, 2, 3},
                                   std::vector<Vertex>{3, 4, 5}),
                  Error);
  CHECK(ingredient_from_tag("k66").has_value());
  CHECK(!ingredient_from_tag("k99").has_value());
}

TEST_CASE("relabelled instances stay valid decompositions") {
  for (IngredientKind kind : all_ingredient_kinds()) {
    auto [nv, nw] = ingredient_arity(kind);
    std::vector<Vertex> left, right;
    for (int i = 1; i <= nv; ++i) left.push_back(100 + 7 * i);
    for (int j = 1; j <= nw; ++j) right.push_back(500 + 3 * j);
    IngredientInstance inst = build_ingredient(kind, left, right);
    CHECK(verify_decomposition(inst.blocks, inst.target).ok());
  }
}
