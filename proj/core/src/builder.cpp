#include "pathsys/builder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pathsys/ingredients.hpp"

namespace pathsys {

bool is_admissible(std::int64_t n, int m) {
  if (m < 2) throw Error(Errc::not_supported, "path order m must be >= 2");
  if (n < 1) return false;
  if (n == 1) return true;
  if (n < m) return false;
  return (n * (n - 1)) % (2 * (m - 1)) == 0;
}

namespace {

std::vector<Vertex> range(Vertex first, Vertex last) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (Vertex v = first; v <= last; ++v) out.push_back(v);
  return out;
}

void append_ingredient(std::vector<PathBlock>& sink, IngredientKind kind,
                       std::span<const Vertex> left, std::span<const Vertex> right) {
  IngredientInstance inst = build_ingredient(kind, left, right);
  for (PathBlock& b : inst.blocks) sink.push_back(std::move(b));
}

Colouring odd_even_colouring(int n) {
  std::unordered_map<Vertex, int> assignment;
  assignment.reserve(static_cast<std::size_t>(n) * 2);
  for (Vertex v = 1; v <= n; ++v) assignment.emplace(v, v % 2 == 1 ? 0 : 1);
  return Colouring(2, std::move(assignment));
}

/// Hexad partition {1..6},{7..12},... of 1..6t.
std::vector<std::vector<Vertex>> hexads(int t) {
  std::vector<std::vector<Vertex>> parts;
  parts.reserve(t);
  for (int i = 1; i <= t; ++i) parts.push_back(range(6 * i - 5, 6 * i));
  return parts;
}

std::vector<PathBlock> blocks_order_6t(int t) {
  std::vector<PathBlock> blocks;
  auto parts = hexads(t);
  for (int i = 0; i < t; ++i) append_ingredient(blocks, IngredientKind::sys6, parts[i], {});
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      append_ingredient(blocks, IngredientKind::k66, parts[i], parts[j]);
  return blocks;
}

std::vector<PathBlock> blocks_order_6t_plus_1(int t) {
  // One heptad {1..7}, then hexads {8..13}, ...
  std::vector<std::vector<Vertex>> parts;
  parts.push_back(range(1, 7));
  for (int i = 2; i <= t; ++i) parts.push_back(range(6 * i - 4, 6 * i + 1));

  std::vector<PathBlock> blocks;
  append_ingredient(blocks, IngredientKind::sys7, parts[0], {});
  for (int i = 1; i < t; ++i) append_ingredient(blocks, IngredientKind::sys6, parts[i], {});
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      if (i == 0) {
        append_ingredient(blocks, IngredientKind::k67, parts[j], parts[0]);
      } else {
        append_ingredient(blocks, IngredientKind::k66, parts[i], parts[j]);
      }
    }
  }
  return blocks;
}

/// The explicit list covering A_1 x {6t+1..6t+4} plus the K4 on the new
/// points, used by the order-(6t+4) step.
std::vector<PathBlock> order_6t4_corner(int t) {
  const Vertex u1 = 6 * t + 1, u2 = 6 * t + 2, u3 = 6 * t + 3, u4 = 6 * t + 4;
  return {
      PathBlock{1, u1, u2, 2}, PathBlock{1, u3, u2, u4}, PathBlock{u4, 2, u3, u1},
      PathBlock{2, u1, u4, u3}, PathBlock{1, u2, 3, u1},  PathBlock{1, u4, 3, u3},
      PathBlock{4, u1, 5, u2},  PathBlock{4, u3, 5, u4},  PathBlock{4, u2, 6, u1},
      PathBlock{4, u4, 6, u3},
  };
}

}  // namespace

BuiltSystem build_2chromatic(int n) {
  if (n < 4 || !is_admissible(n, 4)) {
    throw Error(Errc::not_admissible,
                "no P4 system of order " + std::to_string(n) + " (needs n >= 4, n = 0,1 mod 3)");
  }

  std::vector<PathBlock> blocks;
  switch (n % 6) {
    case 0:
      blocks = blocks_order_6t(n / 6);
      break;
    case 1:
      blocks = blocks_order_6t_plus_1(n / 6);
      break;
    case 4: {
      if (n == 4) {
        append_ingredient(blocks, IngredientKind::sys4, range(1, 4), {});
        break;
      }
      int t = (n - 4) / 6;
      blocks = blocks_order_6t(t);
      auto corner = order_6t4_corner(t);
      blocks.insert(blocks.end(), corner.begin(), corner.end());
      auto parts = hexads(t);
      auto fresh = range(6 * t + 1, 6 * t + 4);
      for (int i = 1; i < t; ++i)
        append_ingredient(blocks, IngredientKind::k64, parts[i], fresh);
      break;
    }
    case 3: {
      int t = (n - 3) / 6;
      blocks = blocks_order_6t(t);
      auto parts = hexads(t);
      auto fresh = range(6 * t + 1, 6 * t + 3);
      append_ingredient(blocks, IngredientKind::k63_plus_k3, parts[0], fresh);
      for (int i = 1; i < t; ++i)
        append_ingredient(blocks, IngredientKind::k63, parts[i], fresh);
      break;
    }
    default:
      throw Error(Errc::not_admissible, "unexpected residue");
  }

  PathSystem system(4, range(1, n), std::move(blocks));
  return {std::move(system), odd_even_colouring(n)};
}

std::vector<PathBlock> hamilton_path_decomposition(int n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::odd_order, "Hamilton path decompositions need an even order >= 2");
  }
  // Walecki cycles of K_{n+1} on {0..n-1} + hub; dropping the hub from
  // cycle i leaves the zig-zag path i, i+1, i-1, i+2, i-2, ...
  std::vector<PathBlock> out;
  out.reserve(n / 2);
  for (int i = 0; i < n / 2; ++i) {
    std::vector<Vertex> path;
    path.reserve(n);
    path.push_back(static_cast<Vertex>(i + 1));
    for (int j = 1; path.size() < static_cast<std::size_t>(n); ++j) {
      path.push_back(static_cast<Vertex>((i + j) % n + 1));
      if (path.size() < static_cast<std::size_t>(n)) {
        path.push_back(static_cast<Vertex>(((i - j) % n + n) % n + 1));
      }
    }
    out.emplace_back(std::move(path));
  }
  return out;
}

PathSystem compose_design(std::span<const std::vector<Vertex>> design_blocks, int n) {
  if (n < 2 || design_blocks.empty()) {
    throw Error(Errc::not_a_design, "a design needs n >= 2 and at least one block");
  }
  const std::size_t block_size = design_blocks.front().size();
  if (block_size < 2 || block_size % 2 != 0) {
    throw Error(Errc::not_a_design, "design blocks must have even size 2t >= 2");
  }

  std::unordered_set<Edge, EdgeHash> covered;
  for (const auto& db : design_blocks) {
    if (db.size() != block_size) {
      throw Error(Errc::not_a_design, "design blocks must all have the same size");
    }
    std::unordered_set<Vertex> distinct;
    for (Vertex v : db) {
      if (v < 1 || v > n) {
        throw Error(Errc::not_a_design, "design point " + std::to_string(v) + " outside 1.." +
                                            std::to_string(n));
      }
      if (!distinct.insert(v).second) {
        throw Error(Errc::not_a_design, "repeated point in a design block");
      }
    }
    for (std::size_t i = 0; i < db.size(); ++i) {
      for (std::size_t j = i + 1; j < db.size(); ++j) {
        if (!covered.insert(Edge(db[i], db[j])).second) {
          throw Error(Errc::not_a_design, "pair {" + std::to_string(db[i]) + "," +
                                              std::to_string(db[j]) + "} covered twice");
        }
      }
    }
  }
  if (covered.size() != static_cast<std::size_t>(n) * (n - 1) / 2) {
    throw Error(Errc::not_a_design, "design does not cover all pairs of 1.." + std::to_string(n));
  }

  const int m = static_cast<int>(block_size);
  std::vector<PathBlock> paths = hamilton_path_decomposition(m);
  std::vector<PathBlock> blocks;
  blocks.reserve(design_blocks.size() * (m / 2));
  for (const auto& db : design_blocks) {
    std::vector<Vertex> sorted(db.begin(), db.end());
    std::sort(sorted.begin(), sorted.end());
    std::unordered_map<Vertex, Vertex> map;
    for (int i = 0; i < m; ++i) map.emplace(static_cast<Vertex>(i + 1), sorted[i]);
    for (PathBlock& b : relabel(paths, map)) blocks.push_back(std::move(b));
  }
  return PathSystem(m, range(1, n), std::move(blocks));
}

std::vector<int> k_extension_steps(int n) {
  switch (n % 6) {
    case 0:
    case 3:
      return {3, 4, 6, 7};
    case 1:
    case 4:
      return {2, 3, 5, 6};
    default:
      throw Error(Errc::wrong_residue, "order " + std::to_string(n) + " is not admissible");
  }
}

namespace {

struct Extension {
  std::vector<PathBlock> added;
  std::vector<std::pair<Vertex, int>> new_colours;  // fresh point -> class
};

/// Instantiates catalogue gadgets so that no block is monochromatic under
/// the combined old+fresh classes. The ascending-label assignment is tried
/// first; when the input colouring defeats it, assignments of both sides
/// are searched in lexicographic order (the covered edge set only depends
/// on the label sets, so validity of the decomposition is unaffected).
class GadgetPlacer {
 public:
  GadgetPlacer(const Colouring& colouring, const std::vector<std::pair<Vertex, int>>& additions) {
    cls_ = colouring.assignment();
    for (auto [v, c] : additions) cls_[v] = c;
  }

  void place(std::vector<PathBlock>& sink, IngredientKind kind, std::vector<Vertex> left,
             std::vector<Vertex> right) const {
    if (try_assignment(sink, kind, left, right)) return;

    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::set<std::pair<std::vector<int>, std::vector<int>>> tried;
    do {
      std::vector<Vertex> r = right;
      do {
        if (tried.emplace(classes_of(left), classes_of(r)).second &&
            try_assignment(sink, kind, left, r)) {
          return;
        }
      } while (std::next_permutation(r.begin(), r.end()));
    } while (std::next_permutation(left.begin(), left.end()));
    throw Error(Errc::guard_failed,
                "no label assignment of " + std::string(ingredient_tag(kind)) +
                    " avoids a monochromatic block under this colouring");
  }

 private:
  bool try_assignment(std::vector<PathBlock>& sink, IngredientKind kind,
                      std::span<const Vertex> left, std::span<const Vertex> right) const {
    IngredientInstance inst = build_ingredient(kind, left, right);
    for (const PathBlock& b : inst.blocks) {
      const auto& vs = b.vertices();
      int first = cls_.at(vs[0]);
      bool mono = true;
      for (Vertex v : vs) {
        if (cls_.at(v) != first) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
    for (PathBlock& b : inst.blocks) sink.push_back(std::move(b));
    return true;
  }

  std::vector<int> classes_of(std::span<const Vertex> labels) const {
    std::vector<int> out;
    out.reserve(labels.size());
    for (Vertex v : labels) out.push_back(cls_.at(v));
    return out;
  }

  std::unordered_map<Vertex, int> cls_;
};

Extension extend_from_residue_0(int n, int step, const Colouring& colouring) {
  // n = 6t: hexads A_1..A_t.
  const int t = n / 6;
  auto parts = hexads(t);
  Extension ext;
  if (step == 3) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 3);
    placer.place(ext.added, IngredientKind::k63_plus_k3, parts[0], fresh);
    for (int i = 1; i < t; ++i) placer.place(ext.added, IngredientKind::k63, parts[i], fresh);
  } else if (step == 4) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 0}, {n + 4, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 4);
    placer.place(ext.added, IngredientKind::sys4, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k64, parts[i], fresh);
  } else if (step == 6) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 0}, {n + 4, 1}, {n + 5, 0}, {n + 6, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 6);
    placer.place(ext.added, IngredientKind::sys6, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k66, parts[i], fresh);
  } else {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 1},
                       {n + 5, 0}, {n + 6, 1}, {n + 7, 0}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 7);
    placer.place(ext.added, IngredientKind::sys7, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k67, parts[i], fresh);
  }
  return ext;
}

Extension extend_from_residue_1(int n, int step, const Colouring& colouring) {
  // n = 6t+1: hexads A_1..A_{t-1}, then the heptad A_t = {6t-5..6t+1}.
  const int t = (n - 1) / 6;
  std::vector<std::vector<Vertex>> parts;
  for (int i = 1; i < t; ++i) parts.push_back(range(6 * i - 5, 6 * i));
  auto heptad = range(6 * t - 5, 6 * t + 1);

  Extension ext;
  if (step == 2) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 2);
    placer.place(ext.added, IngredientKind::k72_plus_k2, heptad, fresh);
    for (const auto& part : parts) placer.place(ext.added, IngredientKind::k62, part, fresh);
  } else if (step == 3) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 3);
    placer.place(ext.added, IngredientKind::k73_plus_k3, heptad, fresh);
    for (const auto& part : parts) placer.place(ext.added, IngredientKind::k63, part, fresh);
  } else if (step == 5) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 0}, {n + 5, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto f1 = range(n + 1, n + 2);
    auto f2 = range(n + 3, n + 5);
    placer.place(ext.added, IngredientKind::k72_plus_k2, heptad, f1);
    for (const auto& part : parts) placer.place(ext.added, IngredientKind::k62, part, f1);
    placer.place(ext.added, IngredientKind::k73_plus_k3, heptad, f2);
    for (const auto& part : parts) placer.place(ext.added, IngredientKind::k63, part, f2);
    ext.added.emplace_back(PathBlock{n + 3, n + 1, n + 4, n + 2});
    ext.added.emplace_back(PathBlock{n + 3, n + 2, n + 5, n + 1});
  } else {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 1}, {n + 5, 0}, {n + 6, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 6);
    placer.place(ext.added, IngredientKind::sys6, fresh, {});
    for (const auto& part : parts) placer.place(ext.added, IngredientKind::k66, part, fresh);
    placer.place(ext.added, IngredientKind::k67, fresh, heptad);
  }
  return ext;
}

Extension extend_from_residue_3(int n, int step, const Colouring& colouring) {
  // n = 6t+3: hexads A_1..A_t plus the triple A_{t+1} = {6t+1..6t+3}.
  const int t = (n - 3) / 6;
  auto parts = hexads(t);
  auto triple = range(6 * t + 1, 6 * t + 3);

  Extension ext;
  if (step == 3) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 3);
    placer.place(ext.added, IngredientKind::k63_plus_k3, parts[0], fresh);
    for (int i = 1; i < t; ++i) placer.place(ext.added, IngredientKind::k63, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k33, triple, fresh);
  } else if (step == 4) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 0}, {n + 3, 1}, {n + 4, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 4);
    placer.place(ext.added, IngredientKind::sys4, fresh, {});
    // w order (n+1, n+3, n+2, n+4): each half of a side pairing sees both
    // fresh classes.
    std::vector<Vertex> w = {n + 1, n + 3, n + 2, n + 4};
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k64, parts[i], w);
    placer.place(ext.added, IngredientKind::k43, fresh, triple);
  } else if (step == 6) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 0}, {n + 4, 1}, {n + 5, 0}, {n + 6, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 6);
    placer.place(ext.added, IngredientKind::sys6, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k66, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k63, fresh, triple);
  } else {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 1},
                       {n + 5, 0}, {n + 6, 1}, {n + 7, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 7);
    placer.place(ext.added, IngredientKind::sys7, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k67, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k73, fresh, triple);
  }
  return ext;
}

Extension extend_from_residue_4(int n, int step, const Colouring& colouring) {
  // n = 6t+4: hexads A_1..A_t plus the quad A_{t+1} = {6t+1..6t+4}.
  const int t = (n - 4) / 6;
  auto parts = hexads(t);
  auto quad = range(6 * t + 1, 6 * t + 4);

  Extension ext;
  if (step == 2) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 2);
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k62, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k42_plus_k2, quad, fresh);
  } else if (step == 3) {
    if (t < 1) {
      throw Error(Errc::wrong_residue, "order-4 systems cannot take this step");
    }
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 3);
    placer.place(ext.added, IngredientKind::k63_plus_k3, parts[0], fresh);
    for (int i = 1; i < t; ++i) placer.place(ext.added, IngredientKind::k63, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k43, quad, fresh);
  } else if (step == 5) {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 0}, {n + 5, 1}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 5);
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k65, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k45_plus_k5, quad, fresh);
  } else {
    ext.new_colours = {{n + 1, 0}, {n + 2, 1}, {n + 3, 2}, {n + 4, 1}, {n + 5, 0}, {n + 6, 2}};
    GadgetPlacer placer(colouring, ext.new_colours);
    auto fresh = range(n + 1, n + 6);
    placer.place(ext.added, IngredientKind::sys6, fresh, {});
    for (int i = 0; i < t; ++i) placer.place(ext.added, IngredientKind::k66, parts[i], fresh);
    placer.place(ext.added, IngredientKind::k64, fresh, quad);
  }
  return ext;
}

}  // namespace

BuiltSystem extend_k_chromatic(const PathSystem& system, const Colouring& colouring, int step) {
  if (colouring.k() < 3) {
    throw Error(Errc::unsupported_k, "extension steps assume at least 3 colour classes");
  }
  const int n = system.order();
  if (n < 4 || system.path_order() != 4) {
    throw Error(Errc::not_supported, "extensions apply to P4 systems of order >= 4");
  }
  if (system.vertices().front() != 1 || system.vertices().back() != n) {
    throw Error(Errc::not_supported, "extensions expect vertex labels 1..n");
  }
  for (Vertex v : system.vertices()) {
    if (!colouring.colour_of(v)) {
      throw Error(Errc::invalid_colouring, "colouring misses vertex " + std::to_string(v));
    }
  }
  auto allowed = k_extension_steps(n);
  if (std::find(allowed.begin(), allowed.end(), step) == allowed.end()) {
    throw Error(Errc::wrong_residue, "step +" + std::to_string(step) +
                                         " is not available from order " + std::to_string(n));
  }

  Extension ext;
  switch (n % 6) {
    case 0: ext = extend_from_residue_0(n, step, colouring); break;
    case 1: ext = extend_from_residue_1(n, step, colouring); break;
    case 3: ext = extend_from_residue_3(n, step, colouring); break;
    default: ext = extend_from_residue_4(n, step, colouring); break;
  }

  std::vector<PathBlock> blocks = system.blocks();
  blocks.insert(blocks.end(), ext.added.begin(), ext.added.end());
  PathSystem grown(4, range(1, n + step), std::move(blocks));

  std::unordered_map<Vertex, int> assignment = colouring.assignment();
  for (auto [v, c] : ext.new_colours) assignment.emplace(v, c);
  return {std::move(grown), Colouring(colouring.k(), std::move(assignment))};
}

BuiltSystem k_chromatic_pipeline(const PathSystem& seed_system, const Colouring& seed_colouring,
                                 int n) {
  const int start = seed_system.order();
  if (!is_admissible(n, 4)) {
    throw Error(Errc::not_admissible, "target order " + std::to_string(n) + " is not admissible");
  }
  if (n < start || (n != start && n < start + 2)) {
    throw Error(Errc::unreachable, "order " + std::to_string(n) + " is not reachable from " +
                                       std::to_string(start));
  }
  if (n == start) return {seed_system, seed_colouring};

  // Fewest remaining steps from each order to n over the step graph.
  std::map<int, int> dist;
  dist[n] = 0;
  for (int cur = n - 2; cur >= start; --cur) {
    if (cur % 6 == 2 || cur % 6 == 5) continue;
    int best = -1;
    for (int step : k_extension_steps(cur)) {
      if (cur == 4 && step == 3) continue;  // no gadget covers K4 + 3 points
      auto it = dist.find(cur + step);
      if (it != dist.end() && (best < 0 || it->second + 1 < best)) best = it->second + 1;
    }
    if (best > 0) dist[cur] = best;
  }
  if (!dist.contains(start)) {
    throw Error(Errc::unreachable, "order " + std::to_string(n) + " is not reachable from " +
                                       std::to_string(start));
  }

  // Depth-first over step sequences, shortest total first and smaller steps
  // first within a length, backtracking when a step's gadget placement
  // rejects the colouring.
  std::optional<Error> last_failure;
  int attempts = 0;
  auto dfs = [&](auto&& self, const BuiltSystem& state, int steps_left) -> std::optional<BuiltSystem> {
    if (state.system.order() == n) return state;
    if (steps_left == 0) return std::nullopt;
    for (int step : k_extension_steps(state.system.order())) {
      if (state.system.order() == 4 && step == 3) continue;
      int next = state.system.order() + step;
      auto it = dist.find(next);
      if (next > n || it == dist.end() || it->second > steps_left - 1) continue;
      if (++attempts > 512) break;
      try {
        BuiltSystem grown = extend_k_chromatic(state.system, state.colouring, step);
        if (auto done = self(self, grown, steps_left - 1)) return done;
      } catch (const Error& e) {
        if (e.code() != Errc::guard_failed) throw;
        last_failure = e;
      }
    }
    return std::nullopt;
  };

  BuiltSystem seed{seed_system, seed_colouring};
  for (int slack = 0; slack <= 4; ++slack) {
    if (auto done = dfs(dfs, seed, dist.at(start) + slack)) return *done;
  }
  if (last_failure) throw *last_failure;
  throw Error(Errc::unreachable,
              "order " + std::to_string(n) + " is not reachable from " + std::to_string(start));
}

}  // namespace pathsys
