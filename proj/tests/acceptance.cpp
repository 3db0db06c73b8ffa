// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// Each check pins its own thresholds and search budgets; budgets are stated
// in the line so a run is reproducible from its output alone.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracle.hpp"
#include "pathsys/builder.hpp"
#include "pathsys/ingredients.hpp"
#include "pathsys/io.hpp"
#include "pathsys/solver.hpp"
#include "pathsys/unique.hpp"

using namespace pathsys;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            const std::string& note = "") {
  std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              seconds, note.empty() ? "" : " ", note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void run(int number, const std::string& name, double time_limit_seconds,
         const std::function<bool(std::string&)>& body) {
  std::string note;
  auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
    ok = false;
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_seconds > 0 && seconds > time_limit_seconds) {
    ok = false;
    note += " [exceeded " + std::to_string(time_limit_seconds) + "s limit]";
  }
  report(number, name, ok, seconds, note);
}

bool verified_complete(const PathSystem& system, const Colouring& colouring) {
  auto target = GraphSpec::complete(system.vertices());
  return verify_decomposition(system.blocks(), target).ok() &&
         verify_colouring(system, colouring).ok();
}

// --- criterion bodies -------------------------------------------------------

bool ingredient_audit(std::string& note) {
  const std::map<std::string_view, std::size_t> expected = {
      {"sys4", 2},      {"sys6", 5},      {"sys7", 7},      {"k33", 3},      {"k43", 4},
      {"k73", 7},       {"k62", 4},       {"k63", 6},       {"k64", 8},      {"k65", 10},
      {"k66", 12},      {"k67", 14},      {"k63plusk3", 7}, {"k72plusk2", 5},
      {"k73plusk3", 8}, {"k42plusk2", 3}, {"k45plusk5", 10},
  };
  for (IngredientKind kind : all_ingredient_kinds()) {
    auto [nv, nw] = ingredient_arity(kind);
    std::vector<Vertex> left, right;
    for (int i = 1; i <= nv; ++i) left.push_back(i);
    for (int j = 1; j <= nw; ++j) right.push_back(nv + j);
    IngredientInstance inst = build_ingredient(kind, left, right);
    if (inst.blocks.size() != expected.at(ingredient_tag(kind))) {
      note = std::string(ingredient_tag(kind)) + ": wrong block count";
      return false;
    }
    if (!verify_decomposition(inst.blocks, inst.target).ok()) {
      note = std::string(ingredient_tag(kind)) + ": decomposition failed";
      return false;
    }
    std::unordered_map<Vertex, int> assignment(inst.colouring.begin(), inst.colouring.end());
    Colouring colouring(2, std::move(assignment));
    std::vector<Vertex> vertices;
    for (auto [v, c] : inst.colouring) vertices.push_back(v);
    if (!verify_colouring(inst.blocks, vertices, colouring).ok()) {
      note = std::string(ingredient_tag(kind)) + ": colouring failed";
      return false;
    }
  }
  note = "17 kinds";
  return true;
}

bool two_chromatic_desk_scale(std::string& note) {
  int built_count = 0;
  for (int n = 4; n <= 200; ++n) {
    if (!is_admissible(n, 4)) continue;
    BuiltSystem built = build_2chromatic(n);
    if (!verified_complete(built.system, built.colouring)) {
      note = "order " + std::to_string(n) + " failed verification";
      return false;
    }
    Equitability eq = equitability(built.colouring);
    bool strong_expected = (n % 6 == 0 || n % 6 == 4);
    if (strong_expected && eq != Equitability::strong) {
      note = "order " + std::to_string(n) + " should be strongly equitable";
      return false;
    }
    if (!strong_expected && eq == Equitability::neither) {
      note = "order " + std::to_string(n) + " should be equitable";
      return false;
    }
    if (n <= 30) {
      ChromaticResult chi = chromatic_number(built.system, {10'000'000, 30.0});
      if (!chi.value || *chi.value != 2) {
        note = "order " + std::to_string(n) + ": chromatic number is not 2";
        return false;
      }
    }
    ++built_count;
  }
  note = std::to_string(built_count) + " orders, chromatic checked to n=30";
  return true;
}

bool order28_forced_pair(std::string& note) {
  ForcedPairCertificate cert = build_forced_pair_28();
  if (cert.system.size() != 126) {
    note = "expected 126 blocks, got " + std::to_string(cert.system.size());
    return false;
  }
  if (!verified_complete(cert.system, cert.colouring)) {
    note = "verification failed";
    return false;
  }
  if (equitability(cert.colouring) != Equitability::strong) {
    note = "printed colouring is not strongly equitable";
    return false;
  }
  ForcedPairResult forced = forced_distinct(cert.system, 27, 28, {10'000'000, 60.0});
  if (forced.answer != Answer::yes) {
    note = "forced_distinct(27,28) did not hold";
    return false;
  }
  note = "forced pair proved in " + std::to_string(forced.nodes) + " nodes (budget 1e7)";
  return true;
}

bool order109_unique_colouring(std::string& note) {
  ExtensionContext ctx = build_unique_109();
  if (ctx.system.size() != 1962) {
    note = "expected 1962 blocks, got " + std::to_string(ctx.system.size());
    return false;
  }
  if (!verified_complete(ctx.system, ctx.colouring)) {
    note = "verification failed";
    return false;
  }
  auto sizes = ctx.colouring.class_sizes();
  if (sizes[0] != 53 || sizes[1] != 56) {
    note = "class sizes are not (53,56)";
    return false;
  }
  EnumerateResult result = enumerate_2colourings(ctx.system, 28, 2, {100'000'000, 600.0});
  if (result.status == SearchStatus::budget_exhausted) {
    note = "budget 1e8/600s exhausted: unknown";
    return false;
  }
  if (result.colourings.size() != 1) {
    note = "expected exactly 1 anchored colouring, got " +
           std::to_string(result.colourings.size());
    return false;
  }
  for (Vertex v : ctx.system.vertices()) {
    if (result.colourings[0].at(v) != ctx.colouring.at(v)) {
      note = "enumerated colouring differs from the printed one";
      return false;
    }
  }
  note = "unique in " + std::to_string(result.nodes) + " nodes (budget 1e8/600s)";
  return true;
}

bool growth_corollaries(std::string& note) {
  ExtendOptions options;  // non-criticality checked up to order 121
  std::uint64_t max_nodes = 0;
  for (int n : {109, 111, 112, 114, 115, 117, 118, 120, 121, 123, 124}) {
    ExtensionContext ctx = unique_pipeline(n, options);
    if (ctx.system.order() != n) {
      note = "pipeline returned the wrong order for n=" + std::to_string(n);
      return false;
    }
    if (!verified_complete(ctx.system, ctx.colouring)) {
      note = "n=" + std::to_string(n) + " failed verification";
      return false;
    }
    if (n <= 121) {
      EnumerateResult unique = enumerate_2colourings(ctx.system, ctx.system.vertices().front(), 2,
                                                     {100'000'000, 600.0});
      if (unique.status != SearchStatus::exhausted || unique.colourings.size() != 1) {
        note = "n=" + std::to_string(n) + " is not uniquely 2-colourable";
        return false;
      }
      max_nodes = std::max(max_nodes, unique.nodes);
    }
  }
  // The +6 chain keeps going; decomposition+colouring checks only. Walk
  // each residue's chain out to the largest order <= 150.
  ExtendOptions fast;
  fast.check_noncritical = false;
  for (int n = 126; n <= 150; n += 6) {
    for (int target : {n, n - 5, n - 3, n - 2}) {  // residues 0, 1, 3, 4
      ExtensionContext ctx = unique_pipeline(target, fast);
      if (ctx.system.order() != target || !verified_complete(ctx.system, ctx.colouring)) {
        note = "chain order " + std::to_string(target) + " failed verification";
        return false;
      }
    }
  }
  note = "11 orders; uniqueness to 121 (max " + std::to_string(max_nodes) +
         " nodes, budget 1e8/600s); chain to 150";
  return true;
}

bool solver_oracle_equivalence(std::string& note) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 5 + static_cast<int>(rng() % 10);  // 5..14
    std::unordered_set<Edge, EdgeHash> used;
    std::vector<PathBlock> blocks;
    int target = 1 + static_cast<int>(rng() % (2 * n));
    for (int attempt = 0; attempt < 400 && static_cast<int>(blocks.size()) < target; ++attempt) {
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
    PathSystem system(4, std::move(vertices), std::move(blocks));

    EnumerateResult fast = enumerate_2colourings(system, 1, std::size_t{1} << 20);
    if (fast.status != SearchStatus::exhausted) {
      note = "trial " + std::to_string(trial) + ": enumeration did not finish";
      return false;
    }
    auto slow = testing::brute_force_2colourings(system, 1);
    if (fast.colourings.size() != slow.size() ||
        testing::colouring_key_set(fast.colourings) != testing::colouring_key_set(slow)) {
      note = "trial " + std::to_string(trial) + ": solver disagrees with brute force";
      return false;
    }
  }
  note = "200 random partial systems, n <= 14";
  return true;
}

bool k_extension_soundness(std::string& note) {
  // Fresh-point class additions, keyed by (base residue, step), with the
  // classes listed in ascending label order.
  const std::map<std::pair<int, int>, std::vector<int>> published_additions = {
      {{0, 3}, {0, 1, 2}},          {{0, 4}, {0, 1, 0, 1}},
      {{0, 6}, {0, 1, 0, 1, 0, 1}}, {{0, 7}, {0, 1, 2, 1, 0, 1, 0}},
      {{1, 2}, {0, 1}},             {{1, 3}, {0, 1, 2}},
      {{1, 5}, {0, 1, 2, 0, 1}},    {{1, 6}, {0, 1, 2, 1, 0, 2}},
      {{3, 3}, {0, 1, 2}},          {{3, 4}, {0, 0, 1, 1}},
      {{3, 6}, {0, 1, 0, 1, 0, 1}}, {{3, 7}, {0, 1, 2, 1, 0, 1, 2}},
      {{4, 2}, {0, 1}},             {{4, 3}, {0, 1, 2}},
      {{4, 5}, {0, 1, 2, 0, 1}},    {{4, 6}, {0, 1, 2, 1, 0, 2}},
  };
  int combinations = 0;
  for (int t = 1; t <= 3; ++t) {
    for (int base : {6 * t, 6 * t + 1, 6 * t + 3, 6 * t + 4}) {
      BuiltSystem seed = build_2chromatic(base);
      // Split the valid 2-colouring into 3 classes; any split keeps every
      // block bichromatic.
      auto assignment = seed.colouring.assignment();
      Vertex mover = 0;
      for (const auto& [v, c] : assignment) {
        if (c == 1 && v > mover) mover = v;
      }
      assignment[mover] = 2;
      Colouring three(3, std::move(assignment));
      if (!verify_colouring(seed.system, three).ok()) {
        note = "3-colouring of order " + std::to_string(base) + " is invalid";
        return false;
      }
      for (int step : k_extension_steps(base)) {
        BuiltSystem grown = extend_k_chromatic(seed.system, three, step);
        if (grown.system.order() != base + step) {
          note = "wrong output order";
          return false;
        }
        if (!verified_complete(grown.system, grown.colouring)) {
          note = "base " + std::to_string(base) + " step +" + std::to_string(step) + " failed";
          return false;
        }
        for (const PathBlock& b : seed.system.blocks()) {
          if (!grown.system.contains_block(b)) {
            note = "input block lost at base " + std::to_string(base) + " step +" +
                   std::to_string(step);
            return false;
          }
        }
        for (Vertex v : seed.system.vertices()) {
          if (grown.colouring.at(v) != three.at(v)) {
            note = "old colour changed";
            return false;
          }
        }
        const std::vector<int>& additions = published_additions.at({base % 6, step});
        for (int j = 0; j < step; ++j) {
          if (grown.colouring.at(base + 1 + j) != additions[j]) {
            note = "class addition mismatch at base " + std::to_string(base) + " step +" +
                   std::to_string(step);
            return false;
          }
        }
        ++combinations;
      }
    }
  }
  note = std::to_string(combinations) + " base/step combinations";
  return true;
}

bool walecki_and_design(std::string& note) {
  for (int n = 2; n <= 100; n += 2) {
    std::vector<PathBlock> paths = hamilton_path_decomposition(n);
    if (paths.size() != static_cast<std::size_t>(n) / 2) {
      note = "n=" + std::to_string(n) + ": wrong path count";
      return false;
    }
    for (const PathBlock& p : paths) {
      if (p.order() != n) {
        note = "n=" + std::to_string(n) + ": path does not visit every vertex";
        return false;
      }
    }
    std::vector<Vertex> vs;
    for (Vertex v = 1; v <= n; ++v) vs.push_back(v);
    if (!verify_decomposition(paths, GraphSpec::complete(vs)).ok()) {
      note = "n=" + std::to_string(n) + ": not an exact partition";
      return false;
    }
  }

  // A (13,4,1) design from the {0,1,3,9} difference set, via a file.
  namespace fs = std::filesystem;
  fs::path design_path = fs::temp_directory_path() / "pathsys-design-13-4-1.txt";
  {
    std::ofstream out(design_path);
    for (int i = 0; i < 13; ++i) {
      for (int d : {0, 1, 3, 9}) out << (i + d) % 13 + 1 << ' ';
      out << '\n';
    }
  }
  std::vector<std::vector<Vertex>> design;
  {
    std::ifstream in(design_path);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::vector<Vertex> block;
      Vertex v;
      while (fields >> v) block.push_back(v);
      if (!block.empty()) design.push_back(std::move(block));
    }
  }
  PathSystem composed = compose_design(design, 13);
  if (composed.size() != 26 || composed.path_order() != 4) {
    note = "composed design has the wrong shape";
    return false;
  }
  std::vector<Vertex> vs;
  for (Vertex v = 1; v <= 13; ++v) vs.push_back(v);
  if (!verify_decomposition(composed.blocks(), GraphSpec::complete(vs)).ok()) {
    note = "composed design does not partition K_13";
    return false;
  }
  note = "even n <= 100; (13,4,1) design -> 26 blocks";
  return true;
}

}  // namespace

int main() {
  run(1, "ingredient audit", 1.0, ingredient_audit);
  run(2, "equitably 2-chromatic systems for admissible n <= 200", 30.0, two_chromatic_desk_scale);
  run(3, "order-28 forced pair", 60.0, order28_forced_pair);
  run(4, "order-109 unique colouring", 600.0, order109_unique_colouring);
  run(5, "uniquely colourable growth to 124 and chain to 150", 0.0, growth_corollaries);
  run(6, "solver/brute-force equivalence", 60.0, solver_oracle_equivalence);
  run(7, "k-chromatic extension soundness", 0.0, k_extension_soundness);
  run(8, "hamilton decompositions and design composition", 0.0, walecki_and_design);
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
