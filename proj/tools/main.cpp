// Command-line front end: construct, verify, analyze, extend.
//
// Exit codes: 0 success, 1 a checked property is false, 2 usage or parse
// error, 3 self-verification of a constructed output failed, 4 budget
// exhausted before a definite answer.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathsys/builder.hpp"
#include "pathsys/ingredients.hpp"
#include "pathsys/io.hpp"
#include "pathsys/solver.hpp"
#include "pathsys/unique.hpp"

namespace {

using namespace pathsys;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUnknown = 4;

void print_violations(const VerifyReport& report) {
  for (const Violation& violation : report.violations) {
    std::cout << violation_name(violation.kind);
    for (Vertex v : violation.detail) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

/// Verifies in memory, writes both files, then re-reads them from disk and
/// verifies again. Returns kExitOk or kExitInternal.
int write_and_recheck(const PathSystem& system, const Colouring& colouring,
                      const std::string& out_system, const std::string& out_colouring) {
  auto target = GraphSpec::complete(system.vertices());
  if (!verify_decomposition(system.blocks(), target).ok() ||
      !verify_colouring(system, colouring).ok()) {
    std::cerr << "self-verification of the constructed system failed\n";
    return kExitInternal;
  }
  write_system_file(std::filesystem::path(out_system), system);
  write_colouring_file(std::filesystem::path(out_colouring), colouring);

  PathSystem reread = to_system(read_system_file(std::filesystem::path(out_system)));
  Colouring recoloured = to_colouring(read_colouring_file(std::filesystem::path(out_colouring)));
  auto reread_target = GraphSpec::complete(reread.vertices());
  if (!verify_decomposition(reread.blocks(), reread_target).ok() ||
      !verify_colouring(reread, recoloured).ok()) {
    std::cerr << "self-verification of the written files failed\n";
    return kExitInternal;
  }
  return kExitOk;
}

struct BudgetFlags {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;

  void attach(CLI::App* app) {
    app->add_option("--max-nodes", max_nodes, "search node budget");
    app->add_option("--max-seconds", max_seconds, "search wall-clock budget");
  }
  SearchBudget budget() const { return {max_nodes, max_seconds}; }
};

int run_construct(int order, const std::string& mode, const std::string& seed_system_path,
                  const std::string& seed_colouring_path, const std::string& out_system,
                  const std::string& out_colouring, const BudgetFlags& budget) {
  if (mode == "two-chromatic") {
    if (!is_admissible(order, 4) || order < 4) {
      std::cerr << "order " << order << " is not admissible for a P4 system\n";
      return kExitUsage;
    }
    BuiltSystem built = build_2chromatic(order);
    return write_and_recheck(built.system, built.colouring, out_system, out_colouring);
  }
  if (mode == "unique") {
    if (order < 109 || order % 3 == 2) {
      std::cerr << "unique mode needs order = 0,1 (mod 3) and order >= 109\n";
      return kExitUsage;
    }
    ExtendOptions options;
    options.budget = budget.budget();
    ExtensionContext ctx = unique_pipeline(order, options);
    return write_and_recheck(ctx.system, ctx.colouring, out_system, out_colouring);
  }
  if (mode == "k-chromatic") {
    if (seed_system_path.empty() || seed_colouring_path.empty()) {
      std::cerr << "k-chromatic mode needs --seed-system and --seed-colouring\n";
      return kExitUsage;
    }
    PathSystem seed = to_system(read_system_file(std::filesystem::path(seed_system_path)));
    Colouring seed_col =
        to_colouring(read_colouring_file(std::filesystem::path(seed_colouring_path)));
    auto seed_target = GraphSpec::complete(seed.vertices());
    if (!verify_decomposition(seed.blocks(), seed_target).ok() ||
        !verify_colouring(seed, seed_col).ok()) {
      std::cerr << "seed files do not verify\n";
      return kExitUsage;
    }
    BuiltSystem built = k_chromatic_pipeline(seed, seed_col, order);
    return write_and_recheck(built.system, built.colouring, out_system, out_colouring);
  }
  std::cerr << "unknown mode '" << mode << "'\n";
  return kExitUsage;
}

int run_ingredient(const std::string& tag, const std::string& out_system,
                   const std::string& out_colouring) {
  auto kind = ingredient_from_tag(tag);
  if (!kind) {
    std::cerr << "unknown ingredient kind '" << tag << "'\n";
    return kExitUsage;
  }
  auto [nv, nw] = ingredient_arity(*kind);
  std::vector<Vertex> left, right;
  for (int i = 1; i <= nv; ++i) left.push_back(i);
  for (int j = 1; j <= nw; ++j) right.push_back(nv + j);
  IngredientInstance inst = build_ingredient(*kind, left, right);

  std::unordered_map<Vertex, int> assignment(inst.colouring.begin(), inst.colouring.end());
  Colouring colouring(2, std::move(assignment));
  std::vector<Vertex> vertices;
  for (auto [v, c] : inst.colouring) vertices.push_back(v);
  if (!verify_decomposition(inst.blocks, inst.target).ok() ||
      !verify_colouring(inst.blocks, vertices, colouring).ok()) {
    std::cerr << "ingredient failed self-verification\n";
    return kExitInternal;
  }

  PathSystem as_system(4, vertices, inst.blocks);
  write_system_file(std::filesystem::path(out_system), as_system);
  write_colouring_file(std::filesystem::path(out_colouring), colouring);
  const char* shape = inst.target.kind() == GraphSpec::Kind::complete ? "complete"
                      : inst.target.kind() == GraphSpec::Kind::complete_bipartite
                          ? "bipartite"
                          : "bipartite-clique";
  std::cout << "INGREDIENT " << tag << ' ' << shape << ' ' << nv << ' ' << nw << ' '
            << inst.blocks.size() << '\n';
  return kExitOk;
}

int run_verify(const std::string& system_path, const std::string& colouring_path,
               const std::string& target_kind, int left_size) {
  SystemFileData data = read_system_file(std::filesystem::path(system_path));

  GraphSpec target = [&] {
    std::vector<Vertex> all;
    for (Vertex v = 1; v <= data.n; ++v) all.push_back(v);
    if (target_kind == "complete") return GraphSpec::complete(std::move(all));
    if (left_size < 1 || left_size >= data.n) {
      throw Error(Errc::parse_error, "--left must split 1..n into two nonempty sides");
    }
    std::vector<Vertex> left(all.begin(), all.begin() + left_size);
    std::vector<Vertex> right(all.begin() + left_size, all.end());
    if (target_kind == "bipartite") {
      return GraphSpec::complete_bipartite(std::move(left), std::move(right));
    }
    if (target_kind == "bipartite-clique") {
      return GraphSpec::bipartite_plus_clique(std::move(left), std::move(right));
    }
    throw Error(Errc::parse_error, "unknown target '" + target_kind + "'");
  }();

  VerifyReport report = verify_decomposition(data.blocks, target);

  bool colouring_checked_ok = true;
  if (!colouring_path.empty()) {
    ColouringFileData col = read_colouring_file(std::filesystem::path(colouring_path));
    if (col.n != data.n) {
      throw Error(Errc::parse_error, "system and colouring disagree on the vertex count");
    }
    std::vector<Vertex> vertices;
    for (Vertex v = 1; v <= data.n; ++v) vertices.push_back(v);
    VerifyReport colour_report = verify_colouring(data.blocks, vertices, to_colouring(col));
    colouring_checked_ok = colour_report.ok();
    report.violations.insert(report.violations.end(), colour_report.violations.begin(),
                             colour_report.violations.end());
  }

  print_violations(report);
  return (report.ok() && colouring_checked_ok) ? kExitOk : kExitPropertyFalse;
}

int run_analyze(const std::string& system_path, bool query_chromatic, int max_k, bool query_unique,
                bool query_forced, int u, int v, const BudgetFlags& budget) {
  if (query_chromatic + query_unique + query_forced != 1) {
    std::cerr << "pick exactly one of --chromatic, --unique, --forced-pair\n";
    return kExitUsage;
  }
  PathSystem system = to_system(read_system_file(std::filesystem::path(system_path)));

  if (query_chromatic) {
    ChromaticResult result = chromatic_number(system, budget.budget());
    if (result.value) {
      if (max_k == 0 || *result.value <= max_k) {
        std::cout << "CHROMATIC " << *result.value << '\n';
      } else {
        std::cout << "CHROMATIC > " << max_k << '\n';
      }
      return kExitOk;
    }
    if (max_k != 0 && result.lower_bound > max_k) {
      std::cout << "CHROMATIC > " << max_k << '\n';
      return kExitOk;
    }
    std::cout << "UNKNOWN budget\n";
    return kExitUnknown;
  }
  if (query_unique) {
    Answer answer = is_uniquely_2chromatic(system, budget.budget());
    if (answer == Answer::unknown) {
      std::cout << "UNKNOWN budget\n";
      return kExitUnknown;
    }
    std::cout << "UNIQUE " << (answer == Answer::yes ? "true" : "false") << '\n';
    return kExitOk;
  }
  if (u < 1 || v < 1 || u == v) {
    std::cerr << "--forced-pair needs distinct --u and --v\n";
    return kExitUsage;
  }
  ForcedPairResult result = forced_distinct(system, u, v, budget.budget());
  if (result.answer == Answer::unknown) {
    std::cout << "UNKNOWN budget\n";
    return kExitUnknown;
  }
  std::cout << "FORCED_DISTINCT " << (result.answer == Answer::yes ? "true" : "false") << '\n';
  return kExitOk;
}

int run_extend(const std::string& system_path, const std::string& colouring_path,
               const std::string& lemma, const std::string& out_system,
               const std::string& out_colouring, const BudgetFlags& budget) {
  PathSystem system = to_system(read_system_file(std::filesystem::path(system_path)));
  Colouring colouring = to_colouring(read_colouring_file(std::filesystem::path(colouring_path)));
  auto target = GraphSpec::complete(system.vertices());
  if (!verify_decomposition(system.blocks(), target).ok() ||
      !verify_colouring(system, colouring).ok()) {
    std::cerr << "input files do not verify\n";
    return kExitUsage;
  }

  if (lemma.starts_with("kplus")) {
    const std::string suffix = lemma.substr(5);
    if (suffix.size() != 1 || suffix[0] < '2' || suffix[0] > '7') {
      std::cerr << "unknown lemma '" << lemma << "'\n";
      return kExitUsage;
    }
    BuiltSystem built = extend_k_chromatic(system, colouring, suffix[0] - '0');
    return write_and_recheck(built.system, built.colouring, out_system, out_colouring);
  }

  UniqueStep step;
  if (lemma == "plus2") step = UniqueStep::plus2;
  else if (lemma == "plus3") step = UniqueStep::plus3;
  else if (lemma == "plus5") step = UniqueStep::plus5;
  else if (lemma == "plus6_w2b4") step = UniqueStep::plus6_w2b4;
  else if (lemma == "plus6_w3b3") step = UniqueStep::plus6_w3b3;
  else {
    std::cerr << "unknown lemma '" << lemma << "'\n";
    return kExitUsage;
  }

  // The files carry no pattern registry, so rebuild candidates from the
  // colours and take the first that survives the non-criticality check.
  PatternKind kind = (step == UniqueStep::plus2 || step == UniqueStep::plus3)
                         ? PatternKind::w1b3
                         : (step == UniqueStep::plus5 || step == UniqueStep::plus6_w2b4)
                               ? PatternKind::w2b4
                               : PatternKind::w3b3;
  std::vector<PatternEntry> candidates = find_noncritical_candidates(system, colouring, kind);
  if (candidates.empty()) {
    std::cerr << "no block of the required pattern exists in the system\n";
    return kExitUsage;
  }
  ExtendOptions options;
  options.budget = budget.budget();
  std::string last_error;
  for (const PatternEntry& candidate : candidates) {
    ExtensionContext ctx{system, colouring, {candidate}};
    try {
      ExtensionContext grown = extend_unique(ctx, step, options);
      return write_and_recheck(grown.system, grown.colouring, out_system, out_colouring);
    } catch (const Error& e) {
      if (e.code() == Errc::guard_failed || e.code() == Errc::pattern_unavailable) {
        last_error = e.what();
        continue;
      }
      throw;
    }
  }
  std::cerr << last_error << '\n';
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P4 path system construction and verification"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a system and write it to disk");
  int order = 0;
  std::string mode = "two-chromatic";
  std::string seed_system_path, seed_colouring_path;
  std::string out_system = "system.pathsys", out_colouring = "system.colouring";
  BudgetFlags construct_budget;
  construct_budget.max_nodes = 100'000'000;
  construct_budget.max_seconds = 600.0;
  construct->add_option("--order", order, "target order n")->required();
  construct->add_option("--mode", mode, "two-chromatic | unique | k-chromatic");
  construct->add_option("--seed-system", seed_system_path, "seed system file (k-chromatic)");
  construct->add_option("--seed-colouring", seed_colouring_path,
                        "seed colouring file (k-chromatic)");
  construct->add_option("--out-system", out_system, "output system file");
  construct->add_option("--out-colouring", out_colouring, "output colouring file");
  construct_budget.attach(construct);

  // ingredient
  auto* ingredient = app.add_subcommand("ingredient", "emit a catalogue gadget on labels 1..n");
  std::string ingredient_kind;
  std::string ingredient_out_system = "ingredient.pathsys";
  std::string ingredient_out_colouring = "ingredient.colouring";
  ingredient->add_option("--kind", ingredient_kind, "tag, e.g. k66 or sys6")->required();
  ingredient->add_option("--out-system", ingredient_out_system, "output blocks file");
  ingredient->add_option("--out-colouring", ingredient_out_colouring, "output colouring file");

  // verify
  auto* verify = app.add_subcommand("verify", "check a system file against a target graph");
  std::string system_path, colouring_path;
  std::string target_kind = "complete";
  int left_size = 0;
  verify->add_option("--system", system_path, "system file")->required();
  verify->add_option("--colouring", colouring_path, "optional colouring file");
  verify->add_option("--target", target_kind, "complete | bipartite | bipartite-clique");
  verify->add_option("--left", left_size, "left side size for bipartite targets (1..left)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "solver queries against a system file");
  std::string analyze_system;
  bool query_chromatic = false, query_unique = false, query_forced = false;
  int max_k = 0, forced_u = 0, forced_v = 0;
  BudgetFlags analyze_budget;
  analyze->add_option("--system", analyze_system, "system file")->required();
  analyze->add_flag("--chromatic", query_chromatic, "compute the chromatic number");
  analyze->add_option("--max-k", max_k, "stop the ascending chromatic search at this k")
      ->check(CLI::NonNegativeNumber);
  analyze->add_flag("--unique", query_unique, "decide unique 2-colourability");
  analyze->add_flag("--forced-pair", query_forced, "decide whether --u and --v never share");
  analyze->add_option("--u", forced_u, "first vertex of the pair");
  analyze->add_option("--v", forced_v, "second vertex of the pair");
  analyze_budget.attach(analyze);

  // extend
  auto* extend = app.add_subcommand("extend", "grow a verified system by one growth step");
  std::string extend_system, extend_colouring, lemma;
  std::string extend_out_system = "extended.pathsys", extend_out_colouring = "extended.colouring";
  BudgetFlags extend_budget;
  extend_budget.max_nodes = 100'000'000;
  extend_budget.max_seconds = 600.0;
  extend->add_option("--system", extend_system, "system file")->required();
  extend->add_option("--colouring", extend_colouring, "colouring file")->required();
  extend->add_option("--lemma", lemma,
                     "plus2 | plus3 | plus5 | plus6_w2b4 | plus6_w3b3 | kplus<2..7>")
      ->required();
  extend->add_option("--out-system", extend_out_system, "output system file");
  extend->add_option("--out-colouring", extend_out_colouring, "output colouring file");
  extend_budget.attach(extend);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      return run_construct(order, mode, seed_system_path, seed_colouring_path, out_system,
                           out_colouring, construct_budget);
    }
    if (ingredient->parsed()) {
      return run_ingredient(ingredient_kind, ingredient_out_system, ingredient_out_colouring);
    }
    if (verify->parsed()) {
      return run_verify(system_path, colouring_path, target_kind, left_size);
    }
    if (analyze->parsed()) {
      return run_analyze(analyze_system, query_chromatic, max_k, query_unique, query_forced,
                         forced_u, forced_v, analyze_budget);
    }
    if (extend->parsed()) {
      return run_extend(extend_system, extend_colouring, lemma, extend_out_system,
                        extend_out_colouring, extend_budget);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
