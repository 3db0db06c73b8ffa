#include "pathsys/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace pathsys {

namespace {

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

}  // namespace

PathBlock::PathBlock(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw Error(Errc::invalid_block, "path block needs at least 2 vertices");
  }
  std::unordered_set<Vertex> seen;
  for (Vertex v : vertices_) {
    if (v < 1) throw Error(Errc::invalid_block, "vertex labels are 1-based, got " + std::to_string(v));
    if (!seen.insert(v).second) {
      throw Error(Errc::invalid_block,
                  "duplicate vertex " + std::to_string(v) + " in block (" + join(vertices_) + ")");
    }
  }
  if (!std::lexicographical_compare(vertices_.begin(), vertices_.end(),
                                    vertices_.rbegin(), vertices_.rend())) {
    std::reverse(vertices_.begin(), vertices_.end());
  }
}

std::vector<Edge> PathBlock::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    out.emplace_back(vertices_[i], vertices_[i + 1]);
  }
  return out;
}

bool PathBlock::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::size_t PathBlockHash::operator()(const PathBlock& b) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Vertex v : b.vertices()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<PathBlock> relabel(std::span<const PathBlock> blocks,
                               const std::unordered_map<Vertex, Vertex>& map) {
  std::unordered_map<Vertex, Vertex> inverse;
  for (const PathBlock& b : blocks) {
    for (Vertex v : b.vertices()) {
      auto it = map.find(v);
      if (it == map.end()) {
        throw Error(Errc::invalid_relabelling, "no image for vertex " + std::to_string(v));
      }
      auto [inv, fresh] = inverse.emplace(it->second, v);
      if (!fresh && inv->second != v) {
        throw Error(Errc::invalid_relabelling,
                    "map sends " + std::to_string(inv->second) + " and " + std::to_string(v) +
                        " to the same label " + std::to_string(it->second));
      }
    }
  }
  std::vector<PathBlock> out;
  out.reserve(blocks.size());
  for (const PathBlock& b : blocks) {
    std::vector<Vertex> vs;
    vs.reserve(b.vertices().size());
    for (Vertex v : b.vertices()) vs.push_back(map.at(v));
    out.emplace_back(std::move(vs));
  }
  return out;
}

GraphSpec::GraphSpec(Kind kind, std::vector<Vertex> left, std::vector<Vertex> right)
    : kind_(kind), left_(std::move(left)), right_(std::move(right)) {
  auto prepare = [](std::vector<Vertex>& side, const char* name) {
    std::sort(side.begin(), side.end());
    if (std::adjacent_find(side.begin(), side.end()) != side.end()) {
      throw Error(Errc::invalid_system, std::string("repeated vertex in ") + name + " side");
    }
    for (Vertex v : side) {
      if (v < 1) throw Error(Errc::invalid_system, "vertex labels are 1-based");
    }
  };
  prepare(left_, "left");
  prepare(right_, "right");
  if (kind_ == Kind::complete) {
    if (!right_.empty()) throw Error(Errc::invalid_system, "complete spec takes one vertex set");
  } else {
    std::vector<Vertex> common;
    std::set_intersection(left_.begin(), left_.end(), right_.begin(), right_.end(),
                          std::back_inserter(common));
    if (!common.empty()) {
      throw Error(Errc::invalid_system, "bipartition sides overlap at " + std::to_string(common[0]));
    }
  }
}

GraphSpec GraphSpec::complete(std::vector<Vertex> vertices) {
  return GraphSpec(Kind::complete, std::move(vertices), {});
}

GraphSpec GraphSpec::complete_bipartite(std::vector<Vertex> left, std::vector<Vertex> right) {
  return GraphSpec(Kind::complete_bipartite, std::move(left), std::move(right));
}

GraphSpec GraphSpec::bipartite_plus_clique(std::vector<Vertex> left, std::vector<Vertex> right) {
  return GraphSpec(Kind::bipartite_plus_clique, std::move(left), std::move(right));
}

std::size_t GraphSpec::edge_count() const {
  const std::size_t nl = left_.size();
  const std::size_t nr = right_.size();
  switch (kind_) {
    case Kind::complete:
      return nl * (nl - 1) / 2;
    case Kind::complete_bipartite:
      return nl * nr;
    case Kind::bipartite_plus_clique:
      return nl * nr + nr * (nr - 1) / 2;
  }
  return 0;
}

std::vector<Edge> GraphSpec::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  if (kind_ == Kind::complete) {
    for (std::size_t i = 0; i < left_.size(); ++i)
      for (std::size_t j = i + 1; j < left_.size(); ++j) out.emplace_back(left_[i], left_[j]);
    return out;
  }
  for (Vertex u : left_)
    for (Vertex w : right_) out.emplace_back(u, w);
  if (kind_ == Kind::bipartite_plus_clique) {
    for (std::size_t i = 0; i < right_.size(); ++i)
      for (std::size_t j = i + 1; j < right_.size(); ++j) out.emplace_back(right_[i], right_[j]);
  }
  return out;
}

Colouring::Colouring(int k, std::unordered_map<Vertex, int> assignment)
    : k_(k), assignment_(std::move(assignment)) {
  if (k_ < 1) throw Error(Errc::invalid_colouring, "colouring needs k >= 1");
  for (const auto& [v, c] : assignment_) {
    if (c < 0 || c >= k_) {
      throw Error(Errc::invalid_colouring, "vertex " + std::to_string(v) + " has class " +
                                               std::to_string(c) + " outside 0.." +
                                               std::to_string(k_ - 1));
    }
  }
}

std::optional<int> Colouring::colour_of(Vertex v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) return std::nullopt;
  return it->second;
}

int Colouring::at(Vertex v) const {
  auto it = assignment_.find(v);
  if (it == assignment_.end()) {
    throw Error(Errc::invalid_colouring, "vertex " + std::to_string(v) + " is unassigned");
  }
  return it->second;
}

std::vector<int> Colouring::class_sizes() const {
  std::vector<int> sizes(k_, 0);
  for (const auto& [v, c] : assignment_) ++sizes[c];
  return sizes;
}

std::vector<Vertex> Colouring::vertices_in_class(int c) const {
  std::vector<Vertex> out;
  for (const auto& [v, cc] : assignment_) {
    if (cc == c) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Equitability equitability(const Colouring& colouring) {
  auto sizes = colouring.class_sizes();
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  int spread = *hi - *lo;
  if (spread == 0) return Equitability::strong;
  if (spread <= 1) return Equitability::equitable;
  return Equitability::neither;
}

PathSystem::PathSystem(int m, std::vector<Vertex> vertices, std::vector<PathBlock> blocks)
    : m_(m), vertices_(std::move(vertices)), blocks_(std::move(blocks)) {
  if (m_ < 2) throw Error(Errc::invalid_system, "path order m must be >= 2");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  std::unordered_set<Edge, EdgeHash> used;
  std::unordered_set<PathBlock, PathBlockHash> distinct;
  for (const PathBlock& b : blocks_) {
    if (b.order() != m_) {
      throw Error(Errc::invalid_system, "block of order " + std::to_string(b.order()) +
                                            " in a P_" + std::to_string(m_) + " system");
    }
    for (Vertex v : b.vertices()) {
      if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
        throw Error(Errc::invalid_system,
                    "block uses vertex " + std::to_string(v) + " outside the vertex set");
      }
    }
    if (!distinct.insert(b).second) {
      throw Error(Errc::invalid_system, "repeated block (" + join(b.vertices()) + ")");
    }
    for (const Edge& e : b.edges()) {
      if (!used.insert(e).second) {
        throw Error(Errc::invalid_system, "edge {" + std::to_string(e.a) + "," +
                                              std::to_string(e.b) + "} covered twice");
      }
    }
  }
}

bool PathSystem::contains_block(const PathBlock& block) const {
  return std::find(blocks_.begin(), blocks_.end(), block) != blocks_.end();
}

bool PathSystem::contains_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

}  // namespace pathsys
