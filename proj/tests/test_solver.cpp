#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracle.hpp"
#include "pathsys/builder.hpp"
#include "pathsys/solver.hpp"

using namespace pathsys;

namespace {

PathSystem order4() { return PathSystem(4, {1, 2, 3, 4}, {{3, 1, 2, 4}, {1, 4, 3, 2}}); }

PathSystem order6() {
  return PathSystem(4, {1, 2, 3, 4, 5, 6},
                    {{6, 1, 2, 5}, {6, 2, 3, 5}, {2, 4, 1, 3}, {4, 3, 6, 5}, {1, 5, 4, 6}});
}

/// Random edge-disjoint partial P4 collection on 1..n.
PathSystem random_partial(std::mt19937& rng, int n) {
  std::unordered_set<Edge, EdgeHash> used;
  std::vector<PathBlock> blocks;
  int target = 1 + static_cast<int>(rng() % (2 * n));
  int attempts = 0;
  while (static_cast<int>(blocks.size()) < target && attempts < 400) {
    ++attempts;
    std::vector<Vertex> vs;
    while (vs.size() < 4) {
      Vertex v = 1 + static_cast<Vertex>(rng() % n);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    PathBlock b(vs);
    bool fresh = true;
    for (const Edge& e : b.edges()) {
      if (used.contains(e)) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    for (const Edge& e : b.edges()) used.insert(e);
    blocks.push_back(std::move(b));
  }
  std::vector<Vertex> vertices;
  for (Vertex v = 1; v <= n; ++v) vertices.push_back(v);
  return PathSystem(4, std::move(vertices), std::move(blocks));
}

}  // namespace

TEST_CASE("verify_decomposition flags missing, duplicate, and stray edges") {
  auto system = order4();
  auto target = GraphSpec::complete({1, 2, 3, 4});
  CHECK(verify_decomposition(system.blocks(), target).ok());

  std::vector<PathBlock> doubled = system.blocks();
  for (const PathBlock& b : system.blocks()) doubled.push_back(b);
  VerifyReport dup = verify_decomposition(doubled, target);
  CHECK(!dup.ok());
  int dup_count = 0;
  for (const Violation& v : dup.violations) {
    if (v.kind == ViolationKind::duplicate_edge) ++dup_count;
  }
  CHECK(dup_count == 6);

  // A bipartite gadget does not cover the intra-side pairs of K6.
  std::vector<PathBlock> k33{{2, 4, 1, 6}, {1, 5, 3, 4}, {3, 6, 2, 5}};
  VerifyReport missing = verify_decomposition(k33, GraphSpec::complete({1, 2, 3, 4, 5, 6}));
  CHECK(!missing.ok());
  bool saw_missing = false;
  for (const Violation& v : missing.violations) {
    if (v.kind == ViolationKind::missing_edge) saw_missing = true;
    CHECK(v.kind != ViolationKind::stray_edge);
  }
  CHECK(saw_missing);

  VerifyReport stray = verify_decomposition(k33, GraphSpec::complete_bipartite({1, 2}, {4, 5, 6}));
  bool saw_stray = false;
  for (const Violation& v : stray.violations) {
    if (v.kind == ViolationKind::stray_edge) saw_stray = true;
  }
  CHECK(saw_stray);
}

TEST_CASE("verify_colouring flags monochromatic blocks and gaps") {
  auto system = order6();
  Colouring good(2, {{1, 0}, {3, 0}, {5, 0}, {2, 1}, {4, 1}, {6, 1}});
  CHECK(verify_colouring(system, good).ok());

  Colouring all_one(2, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}});
  VerifyReport mono = verify_colouring(system, all_one);
  std::size_t mono_count = 0;
  for (const Violation& v : mono.violations) {
    if (v.kind == ViolationKind::monochromatic_block) ++mono_count;
  }
  CHECK(mono_count == system.size());

  Colouring partial(2, {{1, 0}, {2, 1}});
  VerifyReport gaps = verify_colouring(system, partial);
  int unassigned = 0;
  for (const Violation& v : gaps.violations) {
    if (v.kind == ViolationKind::unassigned_vertex) ++unassigned;
  }
  CHECK(unassigned == 4);
}

TEST_CASE("single-block enumeration matches the 2^3 - 1 count") {
  PathSystem one(4, {1, 2, 3, 4}, {{1, 2, 3, 4}});
  auto result = enumerate_2colourings(one, 1, 100);
  CHECK(result.status == SearchStatus::exhausted);
  CHECK(result.colourings.size() == 7);  // all anchored assignments except all-equal
}

TEST_CASE("enumeration matches brute force on the explicit small systems") {
  for (const PathSystem& system : {order4(), order6()}) {
    auto fast = enumerate_2colourings(system, 1, 10'000);
    REQUIRE(fast.status == SearchStatus::exhausted);
    auto slow = testing::brute_force_2colourings(system, 1);
    CHECK(fast.colourings.size() == slow.size());
    CHECK(testing::colouring_key_set(fast.colourings) == testing::colouring_key_set(slow));
  }
}

TEST_CASE("enumeration matches brute force on random partial systems") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng() % 10);  // 5..14
    PathSystem system = random_partial(rng, n);
    CAPTURE(trial);
    CAPTURE(n);
    CAPTURE(system.size());
    auto fast = enumerate_2colourings(system, 1, 1 << 20);
    REQUIRE(fast.status == SearchStatus::exhausted);
    auto slow = testing::brute_force_2colourings(system, 1);
    REQUIRE(fast.colourings.size() == slow.size());
    CHECK(testing::colouring_key_set(fast.colourings) == testing::colouring_key_set(slow));
    for (const Colouring& c : fast.colourings) {
      CHECK(verify_colouring(system, c).ok());
    }
  }
}

TEST_CASE("the printed order-4 split appears among the enumerated colourings") {
  auto result = enumerate_2colourings(order4(), 1, 100);
  REQUIRE(result.status == SearchStatus::exhausted);
  bool found = false;
  for (const Colouring& c : result.colourings) {
    if (c.at(1) == 0 && c.at(3) == 0 && c.at(2) == 1 && c.at(4) == 1) found = true;
  }
  CHECK(found);
}

TEST_CASE("forced pairs on tiny systems") {
  PathSystem one(4, {1, 2, 3, 4}, {{1, 2, 3, 4}});
  auto res = forced_distinct(one, 1, 2);
  CHECK(res.answer == Answer::no);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->at(1) == res.witness->at(2));
  CHECK(verify_colouring(one, *res.witness).ok());
}

TEST_CASE("uniqueness of small systems is decided correctly") {
  CHECK(is_uniquely_2chromatic(order6()) == Answer::no);
  auto built = build_2chromatic(9);
  CHECK(is_uniquely_2chromatic(built.system) == Answer::no);
}

TEST_CASE("budget exhaustion reports unknown") {
  auto built = build_2chromatic(12);
  SearchBudget tiny{1, 60.0};
  CHECK(is_uniquely_2chromatic(built.system, tiny) == Answer::unknown);
}

TEST_CASE("k-colourability basics") {
  auto system = order6();
  CHECK(is_k_colourable(system, 1).answer == Answer::no);
  auto two = is_k_colourable(system, 2);
  REQUIRE(two.answer == Answer::yes);
  CHECK(verify_colouring(system, *two.witness).ok());
  auto three = is_k_colourable(system, 3);
  REQUIRE(three.answer == Answer::yes);  // monotone in k
  CHECK(verify_colouring(system, *three.witness).ok());
}

TEST_CASE("chromatic number of the small systems is 2") {
  for (int n : {4, 6, 7}) {
    auto built = build_2chromatic(n);
    auto result = chromatic_number(built.system);
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 2);
  }
  PathSystem empty(4, {1, 2, 3, 4}, {});
  CHECK_THROWS_AS(chromatic_number(empty), Error);
}

TEST_CASE("a 2-colourable order-12 system is also 3-colourable") {
  auto built = build_2chromatic(12);
  auto res = is_k_colourable(built.system, 3);
  REQUIRE(res.answer == Answer::yes);
  CHECK(verify_colouring(built.system, *res.witness).ok());
}

TEST_CASE("chromatic search under a starved budget yields a lower bound only") {
  auto built = build_2chromatic(12);
  auto result = chromatic_number(built.system, {1, 60.0});
  CHECK(!result.value.has_value());
  CHECK(result.lower_bound == 2);  // k = 1 is refuted without search
}

TEST_CASE("refutations agree with brute force on random partials") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng() % 8);
    PathSystem system = random_partial(rng, n);
    Vertex u = 1, v = 2;
    auto res = forced_distinct(system, u, v);
    bool brute_same_colour_possible = false;
    for (const Colouring& c : testing::brute_force_2colourings(system, 1)) {
      if (c.at(u) == c.at(v)) {
        brute_same_colour_possible = true;
        break;
      }
    }
    CHECK((res.answer == Answer::no) == brute_same_colour_possible);
  }
}

TEST_CASE("enumeration is deterministic") {
  auto built = build_2chromatic(10);
  auto a = enumerate_2colourings(built.system, 1, 50);
  auto b = enumerate_2colourings(built.system, 1, 50);
  REQUIRE(a.colourings.size() == b.colourings.size());
  CHECK(a.nodes == b.nodes);
  for (std::size_t i = 0; i < a.colourings.size(); ++i) {
    CHECK(testing::colouring_key(a.colourings[i]) == testing::colouring_key(b.colourings[i]));
  }
}

TEST_CASE("seed search validates its inputs") {
  CHECK_THROWS_AS(search_seed(2, 6), Error);
  CHECK_THROWS_AS(search_seed(3, 5), Error);
  // Any order-4 system is 2-colourable, so no 3-chromatic seed exists.
  auto none = search_seed(3, 4, {200'000, 5.0}, 1);
  CHECK(!none.has_value());
}
