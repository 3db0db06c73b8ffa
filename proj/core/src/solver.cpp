#include "pathsys/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "pathsys/builder.hpp"

namespace pathsys {

const char* violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::missing_edge: return "MISSING_EDGE";
    case ViolationKind::duplicate_edge: return "DUPLICATE_EDGE";
    case ViolationKind::stray_edge: return "STRAY_EDGE";
    case ViolationKind::monochromatic_block: return "MONOCHROMATIC_BLOCK";
    case ViolationKind::unassigned_vertex: return "UNASSIGNED_VERTEX";
  }
  return "UNKNOWN";
}

VerifyReport verify_decomposition(std::span<const PathBlock> blocks, const GraphSpec& target) {
  std::unordered_map<Edge, int, EdgeHash> seen;
  for (const PathBlock& b : blocks) {
    for (const Edge& e : b.edges()) ++seen[e];
  }

  std::unordered_set<Edge, EdgeHash> target_edges;
  std::vector<Edge> target_list = target.edges();
  target_edges.reserve(target_list.size() * 2);
  for (const Edge& e : target_list) target_edges.insert(e);

  VerifyReport report;
  for (const Edge& e : target_list) {
    if (!seen.contains(e)) {
      report.violations.push_back({ViolationKind::missing_edge, {e.a, e.b}});
    }
  }
  std::vector<Edge> dup, stray;
  for (const auto& [e, count] : seen) {
    if (count > 1) dup.push_back(e);
    if (!target_edges.contains(e)) stray.push_back(e);
  }
  std::sort(dup.begin(), dup.end());
  std::sort(stray.begin(), stray.end());
  for (const Edge& e : dup) report.violations.push_back({ViolationKind::duplicate_edge, {e.a, e.b}});
  for (const Edge& e : stray) report.violations.push_back({ViolationKind::stray_edge, {e.a, e.b}});
  return report;
}

VerifyReport verify_colouring(std::span<const PathBlock> blocks, std::span<const Vertex> vertices,
                              const Colouring& colouring) {
  VerifyReport report;
  for (Vertex v : vertices) {
    if (!colouring.colour_of(v)) {
      report.violations.push_back({ViolationKind::unassigned_vertex, {v}});
    }
  }
  for (const PathBlock& b : blocks) {
    std::optional<int> shared;
    bool mono = true;
    for (Vertex v : b.vertices()) {
      auto c = colouring.colour_of(v);
      if (!c) {
        mono = false;  // reported above as unassigned
        break;
      }
      if (!shared) {
        shared = c;
      } else if (*shared != *c) {
        mono = false;
        break;
      }
    }
    if (mono) {
      report.violations.push_back({ViolationKind::monochromatic_block, b.vertices()});
    }
  }
  return report;
}

VerifyReport verify_colouring(const PathSystem& system, const Colouring& colouring) {
  return verify_colouring(system.blocks(), system.vertices(), colouring);
}

namespace {

using Clock = std::chrono::steady_clock;

/// Vertex-indexed view of a system shared by the search engines.
struct Compiled {
  int n = 0;
  int m = 0;
  std::vector<Vertex> labels;                 // index -> label, ascending
  std::unordered_map<Vertex, int> index;      // label -> index
  std::vector<int> block_verts;               // b * m vertex indices
  std::vector<int> adj_off;                   // CSR: vertex -> incident block ids
  std::vector<int> adj;

  explicit Compiled(const PathSystem& system) {
    labels = system.vertices();
    n = static_cast<int>(labels.size());
    m = system.path_order();
    index.reserve(labels.size() * 2);
    for (int i = 0; i < n; ++i) index.emplace(labels[i], i);

    const auto& blocks = system.blocks();
    block_verts.reserve(blocks.size() * m);
    std::vector<int> degree(n, 0);
    for (const PathBlock& b : blocks) {
      for (Vertex v : b.vertices()) {
        int idx = index.at(v);
        block_verts.push_back(idx);
        ++degree[idx];
      }
    }
    adj_off.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) adj_off[i + 1] = adj_off[i] + degree[i];
    adj.resize(adj_off[n]);
    std::vector<int> cursor(adj_off.begin(), adj_off.end() - 1);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      for (int j = 0; j < m; ++j) {
        int v = block_verts[bi * m + j];
        adj[cursor[v]++] = static_cast<int>(bi);
      }
    }
  }

  std::size_t block_count() const { return block_verts.size() / m; }
};

/// Exhaustive 2-colouring search with unit propagation. Branches on the
/// vertex contained in the most blocks that are one assignment away from
/// forcing, smallest label first; both colours are explored at every
/// decision, so with an unbounded budget the enumeration is exact.
class TwoColourSearch {
 public:
  TwoColourSearch(const Compiled& cs, const SearchBudget& budget)
      : cs_(cs),
        budget_(budget),
        colour_(cs.n, -1),
        cnt_{std::vector<int>(cs.block_count(), 0), std::vector<int>(cs.block_count(), 0)},
        unassigned_(cs.block_count(), cs.m),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.max_seconds))) {}

  /// Pre-assigns a vertex before the search starts. Returns false when the
  /// assignments are already contradictory.
  bool assume(int v, std::int8_t c) {
    if (colour_[v] >= 0) return colour_[v] == c;
    std::size_t qhead = trail_.size();
    set(v, c);
    return propagate(qhead);
  }

  EnumerateResult run(std::size_t limit) {
    limit_ = limit;
    result_ = {};
    search();
    result_.nodes = nodes_;
    if (budget_hit_) {
      result_.status = SearchStatus::budget_exhausted;
    } else if (limit_hit_) {
      result_.status = SearchStatus::limit_reached;
    } else {
      result_.status = SearchStatus::exhausted;
    }
    return std::move(result_);
  }

 private:
  void set(int v, std::int8_t c) {
    colour_[v] = c;
    trail_.push_back(v);
    for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
      int bi = cs_.adj[i];
      ++cnt_[c][bi];
      --unassigned_[bi];
    }
  }

  bool propagate(std::size_t qhead) {
    while (qhead < trail_.size()) {
      int v = trail_[qhead++];
      for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
        int bi = cs_.adj[i];
        int c0 = cnt_[0][bi];
        int c1 = cnt_[1][bi];
        int un = unassigned_[bi];
        if (un == 0) {
          if (c0 == 0 || c1 == 0) return false;
          continue;
        }
        if (un == 1) {
          std::int8_t forced = -1;
          if (c1 == 0 && c0 == cs_.m - 1) forced = 1;
          else if (c0 == 0 && c1 == cs_.m - 1) forced = 0;
          if (forced >= 0) {
            int u = find_unassigned(bi);
            if (u >= 0) set(u, forced);
          }
        }
      }
    }
    return true;
  }

  int find_unassigned(int bi) const {
    for (int j = 0; j < cs_.m; ++j) {
      int v = cs_.block_verts[static_cast<std::size_t>(bi) * cs_.m + j];
      if (colour_[v] < 0) return v;
    }
    return -1;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      std::int8_t c = colour_[v];
      colour_[v] = -1;
      for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
        int bi = cs_.adj[i];
        --cnt_[c][bi];
        ++unassigned_[bi];
      }
    }
  }

  int pick_branch_vertex() const {
    int best = -1;
    long best_score = -1;
    for (int v = 0; v < cs_.n; ++v) {
      if (colour_[v] >= 0) continue;
      long score = 0;
      for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
        int bi = cs_.adj[i];
        if (unassigned_[bi] == 2 &&
            ((cnt_[0][bi] == cs_.m - 2 && cnt_[1][bi] == 0) ||
             (cnt_[1][bi] == cs_.m - 2 && cnt_[0][bi] == 0))) {
          ++score;
        }
      }
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    return best;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  void record_solution() {
    std::unordered_map<Vertex, int> assignment;
    assignment.reserve(cs_.n * 2);
    for (int v = 0; v < cs_.n; ++v) assignment.emplace(cs_.labels[v], colour_[v]);
    result_.colourings.emplace_back(2, std::move(assignment));
    if (result_.colourings.size() >= limit_) limit_hit_ = true;
  }

  // Returns false when the search should stop (limit or budget).
  bool search() {
    int v = pick_branch_vertex();
    if (v < 0) {
      record_solution();
      return !limit_hit_;
    }
    for (std::int8_t c = 0; c < 2; ++c) {
      if (out_of_budget()) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      std::size_t mark = trail_.size();
      std::size_t qhead = trail_.size();
      set(v, c);
      bool ok = propagate(qhead);
      if (ok && !search()) {
        undo(mark);
        return false;
      }
      undo(mark);
    }
    return true;
  }

  const Compiled& cs_;
  SearchBudget budget_;
  std::vector<std::int8_t> colour_;
  std::array<std::vector<int>, 2> cnt_;
  std::vector<int> unassigned_;
  std::vector<int> trail_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  std::size_t limit_ = 0;
  bool limit_hit_ = false;
  bool budget_hit_ = false;
  EnumerateResult result_;
};

/// Backtracking k-colouring search over colour-domain bitmasks, with the
/// usual dynamic symmetry break: a decision may open at most one colour
/// class beyond those already in use.
class KColourSearch {
 public:
  KColourSearch(const Compiled& cs, int k, const SearchBudget& budget)
      : cs_(cs),
        k_(k),
        budget_(budget),
        full_((k >= 32) ? ~0u : ((1u << k) - 1u)),
        colour_(cs.n, -1),
        domain_(cs.n, full_),
        counts_(static_cast<std::size_t>(cs.block_count()) * k, 0),
        unassigned_(cs.block_count(), cs.m),
        deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget.max_seconds))) {}

  ColourabilityResult run() {
    ColourabilityResult result;
    found_ = false;
    bool finished = search(0);
    result.nodes = nodes_;
    if (found_) {
      std::unordered_map<Vertex, int> assignment;
      for (int v = 0; v < cs_.n; ++v) assignment.emplace(cs_.labels[v], solution_[v]);
      result.answer = Answer::yes;
      result.witness = Colouring(k_, std::move(assignment));
    } else if (!finished) {
      result.answer = Answer::unknown;
    } else {
      result.answer = Answer::no;
    }
    return result;
  }

 private:
  int& count(int bi, int c) { return counts_[static_cast<std::size_t>(bi) * k_ + c]; }

  struct Event {
    int vertex;
    std::uint32_t old_domain;
    std::int8_t old_colour;
  };

  void set(int v, int c) {
    events_.push_back({v, domain_[v], colour_[v]});
    colour_[v] = static_cast<std::int8_t>(c);
    domain_[v] = 1u << c;
    queue_.push_back(v);
    for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
      int bi = cs_.adj[i];
      ++count(bi, c);
      --unassigned_[bi];
    }
  }

  bool shrink(int v, std::uint32_t mask) {
    std::uint32_t next = domain_[v] & mask;
    if (next == domain_[v]) return true;
    events_.push_back({v, domain_[v], colour_[v]});
    domain_[v] = next;
    if (next == 0) return false;
    if (colour_[v] < 0 && std::popcount(next) == 1) {
      set(v, std::countr_zero(next));
    }
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int v = queue_.back();
      queue_.pop_back();
      int c = colour_[v];
      for (int i = cs_.adj_off[v]; i < cs_.adj_off[v + 1]; ++i) {
        int bi = cs_.adj[i];
        int same = count(bi, c);
        int un = unassigned_[bi];
        if (un == 0 && same == cs_.m) return false;
        if (un == 1 && same == cs_.m - 1) {
          int u = find_unassigned(bi);
          if (u >= 0 && !shrink(u, ~(1u << c))) return false;
        }
      }
    }
    return true;
  }

  int find_unassigned(int bi) const {
    for (int j = 0; j < cs_.m; ++j) {
      int v = cs_.block_verts[static_cast<std::size_t>(bi) * cs_.m + j];
      if (colour_[v] < 0) return v;
    }
    return -1;
  }

  void undo(std::size_t mark) {
    queue_.clear();
    while (events_.size() > mark) {
      const Event& e = events_.back();
      if (colour_[e.vertex] >= 0 && e.old_colour < 0) {
        int c = colour_[e.vertex];
        for (int i = cs_.adj_off[e.vertex]; i < cs_.adj_off[e.vertex + 1]; ++i) {
          int bi = cs_.adj[i];
          --count(bi, c);
          ++unassigned_[bi];
        }
      }
      colour_[e.vertex] = e.old_colour;
      domain_[e.vertex] = e.old_domain;
      events_.pop_back();
    }
  }

  int pick_branch_vertex() const {
    int best = -1;
    int best_size = k_ + 1;
    for (int v = 0; v < cs_.n; ++v) {
      if (colour_[v] >= 0) continue;
      int size = std::popcount(domain_[v]);
      if (size < best_size) {
        best_size = size;
        best = v;
      }
    }
    return best;
  }

  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return true;
    if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) return true;
    return false;
  }

  // Returns false only when the budget was exhausted.
  bool search(int used) {
    int v = pick_branch_vertex();
    if (v < 0) {
      found_ = true;
      solution_.assign(colour_.begin(), colour_.end());
      return true;
    }
    std::uint32_t allowed = domain_[v];
    int cap = std::min(used, k_ - 1);  // may open one fresh class
    allowed &= (cap + 1 >= 32) ? ~0u : ((1u << (cap + 1)) - 1u);
    for (int c = 0; c < k_; ++c) {
      if (!(allowed & (1u << c))) continue;
      if (out_of_budget()) {
        budget_hit_ = true;
        return false;
      }
      ++nodes_;
      std::size_t mark = events_.size();
      queue_.clear();
      set(v, c);
      bool ok = propagate();
      if (ok) {
        if (!search(std::max(used, c + 1))) {
          undo(mark);
          return false;
        }
        if (found_) {
          undo(mark);
          return true;
        }
      }
      undo(mark);
    }
    return true;
  }

  const Compiled& cs_;
  int k_;
  SearchBudget budget_;
  std::uint32_t full_;
  std::vector<std::int8_t> colour_;
  std::vector<std::int8_t> solution_;
  std::vector<std::uint32_t> domain_;
  std::vector<int> counts_;
  std::vector<int> unassigned_;
  std::vector<Event> events_;
  std::vector<int> queue_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool budget_hit_ = false;
};

}  // namespace

EnumerateResult enumerate_2colourings(const PathSystem& system, Vertex anchor, std::size_t limit,
                                      const SearchBudget& budget) {
  if (!system.contains_vertex(anchor)) {
    throw Error(Errc::invalid_colouring, "anchor " + std::to_string(anchor) + " is not a vertex");
  }
  Compiled cs(system);
  TwoColourSearch engine(cs, budget);
  if (!engine.assume(cs.index.at(anchor), 0)) {
    return {{}, SearchStatus::exhausted, 0};
  }
  return engine.run(limit);
}

Answer is_uniquely_2chromatic(const PathSystem& system, const SearchBudget& budget) {
  if (system.vertices().empty()) return Answer::no;
  EnumerateResult r = enumerate_2colourings(system, system.vertices().front(), 2, budget);
  if (r.colourings.size() >= 2) return Answer::no;
  if (r.status == SearchStatus::budget_exhausted) return Answer::unknown;
  return r.colourings.size() == 1 ? Answer::yes : Answer::no;
}

ForcedPairResult forced_distinct(const PathSystem& system, Vertex u, Vertex v,
                                 const SearchBudget& budget) {
  if (u == v) throw Error(Errc::invalid_colouring, "forced-pair vertices must differ");
  if (!system.contains_vertex(u) || !system.contains_vertex(v)) {
    throw Error(Errc::invalid_colouring, "forced-pair vertices must belong to the system");
  }
  // Solutions come in colour-swapped pairs, so it is enough to look for a
  // colouring with c(u) = c(v) = 0.
  Compiled cs(system);
  TwoColourSearch engine(cs, budget);
  ForcedPairResult result;
  if (!engine.assume(cs.index.at(u), 0) || !engine.assume(cs.index.at(v), 0)) {
    result.answer = Answer::yes;
    return result;
  }
  EnumerateResult r = engine.run(1);
  result.nodes = r.nodes;
  if (!r.colourings.empty()) {
    result.answer = Answer::no;
    result.witness = std::move(r.colourings.front());
  } else if (r.status == SearchStatus::budget_exhausted) {
    result.answer = Answer::unknown;
  } else {
    result.answer = Answer::yes;
  }
  return result;
}

ColourabilityResult is_k_colourable(const PathSystem& system, int k, const SearchBudget& budget) {
  if (k < 1) throw Error(Errc::invalid_k, "class count must be >= 1");
  if (system.blocks().empty()) {
    std::unordered_map<Vertex, int> all0;
    for (Vertex v : system.vertices()) all0.emplace(v, 0);
    return {Answer::yes, Colouring(k, std::move(all0)), 0};
  }
  if (k == 1) return {Answer::no, std::nullopt, 0};
  if (k >= 32) throw Error(Errc::invalid_k, "class counts above 31 are not supported");
  Compiled cs(system);
  KColourSearch engine(cs, k, budget);
  return engine.run();
}

ChromaticResult chromatic_number(const PathSystem& system, const SearchBudget& budget) {
  if (system.blocks().empty()) {
    throw Error(Errc::not_applicable, "chromatic number of a system with no blocks");
  }
  ChromaticResult result;
  std::uint64_t nodes_left = budget.max_nodes;
  Clock::time_point deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(budget.max_seconds));
  for (int k = 1; k <= system.order(); ++k) {
    double seconds_left =
        std::chrono::duration<double>(deadline - Clock::now()).count();
    if (seconds_left <= 0 || nodes_left == 0) break;
    ColourabilityResult r = is_k_colourable(system, k, {nodes_left, seconds_left});
    nodes_left -= std::min(nodes_left, r.nodes);
    if (r.answer == Answer::yes) {
      result.value = k;
      result.witness = std::move(r.witness);
      return result;
    }
    if (r.answer == Answer::unknown) break;
    result.lower_bound = k + 1;
  }
  return result;
}

namespace {

/// Orders three edges into a path on four distinct vertices, if they form one.
std::optional<std::vector<Vertex>> as_p4(const std::array<Edge, 3>& es) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : es) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  if (adj.size() != 4) return std::nullopt;
  Vertex start = 0;
  int ends = 0;
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 2) return std::nullopt;
    if (nb.size() == 1) {
      ++ends;
      if (start == 0) start = v;
    }
  }
  if (ends != 2) return std::nullopt;
  std::vector<Vertex> path{start};
  Vertex prev = 0;
  while (path.size() < 4) {
    Vertex cur = path.back();
    Vertex next = 0;
    for (Vertex nb : adj[cur]) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    if (next == 0) return std::nullopt;
    prev = cur;
    path.push_back(next);
  }
  return path;
}

/// All ways to split the six edges of two P4 blocks into two new P4 blocks.
std::vector<std::pair<PathBlock, PathBlock>> block_trades(const PathBlock& b1,
                                                          const PathBlock& b2) {
  std::vector<Edge> edges = b1.edges();
  for (const Edge& e : b2.edges()) edges.push_back(e);
  std::vector<std::pair<PathBlock, PathBlock>> out;
  for (int mask = 0; mask < 64; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
    if (!(mask & 1)) continue;  // complements appear once
    std::array<Edge, 3> in{}, rest{};
    int ni = 0, nr = 0;
    for (int i = 0; i < 6; ++i) {
      if (mask & (1 << i)) in[ni++] = edges[i];
      else rest[nr++] = edges[i];
    }
    auto p = as_p4(in);
    auto q = as_p4(rest);
    if (!p || !q) continue;
    PathBlock x(std::move(*p));
    PathBlock y(std::move(*q));
    if ((x == b1 && y == b2) || (x == b2 && y == b1)) continue;
    if (y < x) std::swap(x, y);
    if (std::find(out.begin(), out.end(), std::make_pair(x, y)) == out.end()) {
      out.emplace_back(std::move(x), std::move(y));
    }
  }
  return out;
}

}  // namespace

std::optional<std::pair<PathSystem, Colouring>> search_seed(int k, int n,
                                                            const SearchBudget& budget,
                                                            std::uint64_t seed) {
  if (k < 3) throw Error(Errc::invalid_k, "seed search needs a target chromatic number >= 3");
  if (!is_admissible(n, 4)) {
    throw Error(Errc::not_admissible, "order " + std::to_string(n) + " is not admissible for P4");
  }

  BuiltSystem start = build_2chromatic(n);
  std::vector<PathBlock> blocks = start.system.blocks();
  std::mt19937_64 rng(seed);
  Clock::time_point deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                                  std::chrono::duration<double>(budget.max_seconds));
  std::uint64_t nodes_left = budget.max_nodes;
  const std::uint64_t slice = std::max<std::uint64_t>(1, budget.max_nodes / 64);

  auto current_system = [&] { return PathSystem(4, start.system.vertices(), blocks); };

  while (Clock::now() < deadline && nodes_left > 0) {
    // A batch of random trades, then one refutation attempt.
    for (int t = 0; t < 24 && blocks.size() >= 2; ++t) {
      std::size_t i = rng() % blocks.size();
      std::size_t j = rng() % blocks.size();
      if (i == j) continue;
      auto trades = block_trades(blocks[i], blocks[j]);
      if (trades.empty()) continue;
      auto& [x, y] = trades[rng() % trades.size()];
      blocks[i] = x;
      blocks[j] = y;
    }
    PathSystem candidate = current_system();
    double seconds_left = std::chrono::duration<double>(deadline - Clock::now()).count();
    if (seconds_left <= 0) break;
    ColourabilityResult refute =
        is_k_colourable(candidate, k - 1, {std::min(nodes_left, slice), seconds_left});
    nodes_left -= std::min(nodes_left, refute.nodes);
    if (refute.answer == Answer::no) {
      seconds_left = std::chrono::duration<double>(deadline - Clock::now()).count();
      if (seconds_left <= 0) break;
      ColourabilityResult witness = is_k_colourable(candidate, k, {nodes_left, seconds_left});
      nodes_left -= std::min(nodes_left, witness.nodes);
      if (witness.answer == Answer::yes) {
        return std::make_pair(std::move(candidate), std::move(*witness.witness));
      }
    }
  }
  return std::nullopt;
}

}  // namespace pathsys
