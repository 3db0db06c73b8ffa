#include "pathsys/unique.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "pathsys/ingredients.hpp"

namespace pathsys {

namespace {

using Blocks = std::vector<PathBlock>;

void add(Blocks& out, std::initializer_list<Vertex> vs) {
  out.emplace_back(std::vector<Vertex>(vs));
}

// ---------------------------------------------------------------------------
// Order 28

/// Four paths between the pair {2i-1,2i} and the pairs {2j-1,2j}, {2l-1,2l},
/// covering all twelve edges among the three pairs' four cross pairings.
void add_triple_family(Blocks& out, int i, int j, int l) {
  const Vertex oi = 2 * i - 1, ei = 2 * i;
  const Vertex oj = 2 * j - 1, ej = 2 * j;
  const Vertex ol = 2 * l - 1, el = 2 * l;
  add(out, {oi, ej, el, ei});
  add(out, {oi, oj, ol, ei});
  add(out, {oi, ol, ej, ei});
  add(out, {oi, el, oj, ei});
}

/// {(c,a1,b1,a2), (d,a2,b2,a1)}
void add_pair_gadget(Blocks& out, Vertex c, Vertex d, Vertex a1, Vertex a2, Vertex b1, Vertex b2) {
  add(out, {c, a1, b1, a2});
  add(out, {d, a2, b2, a1});
}

Blocks blocks_28() {
  Blocks out;
  out.reserve(126);

  for (int i = 1; i <= 12; ++i) add(out, {27, 2 * i - 1, 2 * i, 28});

  add_triple_family(out, 1, 2, 3);
  add_triple_family(out, 4, 5, 6);
  add_triple_family(out, 7, 8, 9);
  add_triple_family(out, 10, 11, 12);

  add(out, {7, 1, 13, 20});
  add(out, {1, 19, 14, 7});
  add(out, {7, 2, 14, 20});
  add(out, {2, 20, 7, 13});
  add(out, {13, 8, 1, 20});
  add(out, {2, 8, 19, 13});
  add(out, {1, 14, 8, 20});
  add(out, {7, 19, 2, 13});

  add_triple_family(out, 2, 4, 9);
  add_triple_family(out, 5, 1, 12);
  add_triple_family(out, 8, 3, 10);
  add_triple_family(out, 11, 6, 7);

  add(out, {9, 3, 15, 22});
  add(out, {3, 21, 16, 9});
  add(out, {9, 4, 16, 22});
  add(out, {4, 22, 9, 15});
  add(out, {15, 10, 3, 22});
  add(out, {4, 10, 21, 15});
  add(out, {3, 16, 10, 22});
  add(out, {9, 21, 4, 15});

  add_pair_gadget(out, 25, 26, 1, 2, 11, 12);
  add_pair_gadget(out, 28, 27, 1, 2, 15, 16);
  add_pair_gadget(out, 26, 25, 1, 2, 17, 18);
  add_pair_gadget(out, 28, 27, 21, 22, 1, 2);
  add_pair_gadget(out, 25, 26, 3, 4, 11, 12);
  add_pair_gadget(out, 26, 25, 3, 4, 23, 24);
  add_pair_gadget(out, 28, 27, 5, 6, 7, 8);
  add_pair_gadget(out, 25, 26, 5, 6, 9, 10);
  add_pair_gadget(out, 26, 25, 5, 6, 11, 12);
  add_pair_gadget(out, 26, 25, 13, 14, 5, 6);
  add_pair_gadget(out, 28, 27, 17, 18, 5, 6);
  add_pair_gadget(out, 25, 26, 21, 22, 5, 6);
  add_pair_gadget(out, 26, 25, 23, 24, 5, 6);
  add_pair_gadget(out, 28, 27, 7, 8, 15, 16);
  add_pair_gadget(out, 25, 26, 7, 8, 21, 22);
  add_pair_gadget(out, 26, 25, 7, 8, 23, 24);
  add_pair_gadget(out, 26, 25, 9, 10, 13, 14);
  add_pair_gadget(out, 25, 26, 9, 10, 17, 18);
  add_pair_gadget(out, 28, 27, 11, 12, 15, 16);
  add_pair_gadget(out, 25, 26, 11, 12, 17, 18);
  add_pair_gadget(out, 26, 25, 11, 12, 19, 20);
  add_pair_gadget(out, 25, 26, 23, 24, 11, 12);
  add_pair_gadget(out, 25, 26, 13, 14, 23, 24);
  add_pair_gadget(out, 28, 27, 15, 16, 23, 24);
  add_pair_gadget(out, 25, 26, 17, 18, 19, 20);
  add_pair_gadget(out, 26, 25, 21, 22, 17, 18);
  add_pair_gadget(out, 26, 25, 17, 18, 23, 24);

  add(out, {15, 25, 26, 16});
  add(out, {15, 26, 19, 25});
  add(out, {16, 25, 20, 26});
  add(out, {28, 26, 27, 14});
  add(out, {13, 28, 25, 27});
  add(out, {23, 28, 27, 24});
  add(out, {14, 3, 28, 19});
  add(out, {13, 4, 19, 10});
  add(out, {14, 4, 20, 27});
  add(out, {3, 19, 9, 28});
  add(out, {4, 27, 10, 20});
  add(out, {13, 3, 20, 9});

  return out;
}

// ---------------------------------------------------------------------------
// Order 109

/// Label of point k with `level` primes: unprimed points are 1..28, the
/// three primed copies of 1..27 follow as 29..55, 56..82, 83..109.
constexpr Vertex pr(int k, int level) {
  return level == 0 ? k : k + 28 + 27 * (level - 1);
}

void remove_blocks(Blocks& from, const Blocks& victims) {
  for (const PathBlock& victim : victims) {
    auto it = std::find(from.begin(), from.end(), victim);
    if (it == from.end()) {
      throw Error(Errc::invalid_system, "block scheduled for removal is absent");
    }
    from.erase(it);
  }
}

Blocks blocks_109() {
  Blocks out;
  out.reserve(1962);

  // Four copies of the order-28 system, 27 and 28 interchanged, sharing
  // the point 28: copy 0 keeps labels, copy r primes 1..27.
  Blocks base = blocks_28();
  {
    std::unordered_map<Vertex, Vertex> swap27_28;
    for (Vertex v = 1; v <= 26; ++v) swap27_28.emplace(v, v);
    swap27_28.emplace(27, 28);
    swap27_28.emplace(28, 27);
    base = relabel(base, swap27_28);
  }
  for (int level = 0; level <= 3; ++level) {
    std::unordered_map<Vertex, Vertex> to_copy;
    for (Vertex v = 1; v <= 27; ++v) to_copy.emplace(v, pr(v, level));
    to_copy.emplace(28, 28);
    Blocks copy = relabel(base, to_copy);
    out.insert(out.end(), copy.begin(), copy.end());
  }

  // P1, P2 and the C/D ladders that force the copies' colours.
  add(out, {27, pr(1, 1), pr(27, 2), pr(27, 1)});
  add(out, {27, pr(3, 1), pr(27, 2), pr(27, 3)});
  add(out, {27, pr(1, 2), pr(27, 3), pr(27, 1)});
  add(out, {pr(27, 1), 27, pr(1, 3), pr(27, 2)});

  for (int level : {2, 3}) {
    for (int k = 1; k <= 12; ++k) {
      add(out, {pr(2 * k, level), pr(1, 1), pr(2 * k - 1, level), pr(3, 1)});
      add(out, {27, pr(2 * k + 1, level), pr(27, 1), pr(2 * k, level)});
    }
    add(out, {pr(26, level), pr(1, 1), pr(25, level), pr(3, 1)});
  }

  for (int k = 2; k <= 12; ++k) {
    add(out, {pr(26, 2), pr(2 * k + 1, 1), pr(2 * k, 3), pr(27, 2)});
  }
  for (int k = 1; k <= 13; ++k) {
    add(out, {pr(1, 3), pr(2 * k, 1), pr(3, 3), pr(2 * k - 1, 2)});
    add(out, {pr(2, 3), 2 * k - 1, pr(2 * k, 2), pr(27, 3)});
    add(out, {2 * k - 1, pr(1, 1), 2 * k, pr(1, 2)});
  }

  // R_k: single-primed points against the unprimed pairs.
  const std::array<std::array<int, 2>, 9> down = {
      {{27, 2}, {26, 4}, {25, 6}, {24, 8}, {23, 10}, {22, 12}, {21, 14}, {20, 16}, {19, 18}}};
  const std::array<std::array<int, 2>, 8> up = {
      {{27, 3}, {26, 5}, {25, 7}, {24, 9}, {23, 11}, {22, 13}, {21, 15}, {20, 17}}};
  for (int k = 1; k <= 25; k += 2) {
    for (auto [a, b] : down) add(out, {pr(a, 1), k, pr(b, 1), k + 1});
    for (auto [a, b] : up) add(out, {pr(a, 1), k + 1, pr(b, 1), k});
  }

  // S: like R for the double-primed points, with twelve paths replaced by
  // four that tie the 18''/19'' diagonals together.
  {
    Blocks s;
    for (int k = 1; k <= 25; k += 2) {
      for (int j = 1; j <= 8; ++j) add(s, {pr(28 - j, 2), k, pr(2 * j, 2), k + 1});
      add(s, {pr(1, 2), k, pr(19, 2), k + 1});
    }
    Blocks drop;
    add(drop, {pr(27, 2), 1, pr(2, 2), 2});
    add(drop, {pr(26, 2), 3, pr(4, 2), 4});
    add(drop, {pr(25, 2), 5, pr(6, 2), 6});
    add(drop, {pr(24, 2), 7, pr(8, 2), 8});
    add(drop, {pr(23, 2), 9, pr(10, 2), 10});
    add(drop, {pr(22, 2), 11, pr(12, 2), 12});
    add(drop, {pr(21, 2), 13, pr(14, 2), 14});
    add(drop, {pr(20, 2), 15, pr(16, 2), 16});
    add(drop, {pr(26, 2), 25, pr(4, 2), 26});
    add(drop, {pr(24, 2), 23, pr(8, 2), 24});
    add(drop, {pr(22, 2), 21, pr(12, 2), 22});
    add(drop, {pr(20, 2), 19, pr(16, 2), 20});
    remove_blocks(s, drop);
    add(s, {pr(18, 2), 25, pr(4, 2), 26});
    add(s, {pr(18, 2), 23, pr(8, 2), 24});
    add(s, {pr(18, 2), 21, pr(12, 2), 22});
    add(s, {pr(18, 2), 19, pr(16, 2), 20});
    out.insert(out.end(), s.begin(), s.end());
  }

  // T ladders: double- and triple-primed points against unprimed pairs.
  for (int k = 1; k <= 25; k += 2) {
    for (int j = 1; j <= 8; ++j) add(out, {pr(28 - j, 2), k + 1, pr(2 * j + 1, 2), k});
    add(out, {pr(27, 3), k, pr(1, 3), k + 1});
    for (int j = 2; j <= 8; ++j) add(out, {pr(28 - j, 3), k, pr(2 * j, 3), k + 1});
    for (int j = 1; j <= 8; ++j) add(out, {pr(28 - j, 3), k + 1, pr(2 * j + 1, 3), k});
    add(out, {pr(2, 3), k + 1, pr(18, 3), k});
  }

  // U: single-primed against double-primed pairs, with the 25''..27''
  // columns given explicitly.
  const std::array<std::array<int, 2>, 8> u_down = {
      {{26, 2}, {25, 5}, {24, 7}, {23, 9}, {22, 11}, {21, 13}, {20, 15}, {19, 17}}};
  const std::array<std::array<int, 2>, 8> u_up = {
      {{26, 4}, {25, 6}, {24, 8}, {23, 10}, {22, 12}, {21, 14}, {20, 16}, {19, 18}}};
  for (int k = 1; k <= 23; k += 2) {
    for (auto [a, b] : u_down) add(out, {pr(a, 1), pr(k, 2), pr(b, 1), pr(k + 1, 2)});
    for (auto [a, b] : u_up) add(out, {pr(a, 1), pr(k + 1, 2), pr(b, 1), pr(k, 2)});
  }
  add(out, {pr(26, 1), pr(25, 2), pr(2, 1), pr(26, 2)});
  add(out, {pr(25, 1), pr(25, 2), pr(5, 1), pr(27, 2)});
  add(out, {pr(24, 1), pr(25, 2), pr(7, 1), pr(27, 2)});
  add(out, {pr(23, 1), pr(25, 2), pr(9, 1), pr(27, 2)});
  add(out, {pr(22, 1), pr(25, 2), pr(11, 1), pr(27, 2)});
  add(out, {pr(21, 1), pr(25, 2), pr(13, 1), pr(27, 2)});
  add(out, {pr(20, 1), pr(25, 2), pr(15, 1), pr(27, 2)});
  add(out, {pr(19, 1), pr(25, 2), pr(17, 1), pr(27, 2)});
  add(out, {pr(26, 1), pr(26, 2), pr(4, 1), pr(25, 2)});
  add(out, {pr(24, 1), pr(26, 2), pr(8, 1), pr(25, 2)});
  add(out, {pr(22, 1), pr(26, 2), pr(12, 1), pr(25, 2)});
  add(out, {pr(20, 1), pr(26, 2), pr(16, 1), pr(25, 2)});
  add(out, {pr(19, 1), pr(27, 2), pr(18, 1), pr(25, 2)});
  add(out, {pr(21, 1), pr(27, 2), pr(14, 1), pr(25, 2)});
  add(out, {pr(23, 1), pr(27, 2), pr(10, 1), pr(25, 2)});
  add(out, {pr(25, 1), pr(27, 2), pr(6, 1), pr(25, 2)});

  // V and W: single-primed against triple-primed pairs 5'''..26''', with
  // six (resp. four) paths rerouted through 27'''.
  {
    Blocks v;
    for (int k = 5; k <= 25; k += 2) {
      for (auto [a, b] : u_down) add(v, {pr(a, 1), pr(k, 3), pr(b, 1), pr(k + 1, 3)});
    }
    Blocks drop;
    add(drop, {pr(24, 1), pr(5, 3), pr(7, 1), pr(6, 3)});
    add(drop, {pr(23, 1), pr(7, 3), pr(9, 1), pr(8, 3)});
    add(drop, {pr(22, 1), pr(9, 3), pr(11, 1), pr(10, 3)});
    add(drop, {pr(21, 1), pr(11, 3), pr(13, 1), pr(12, 3)});
    add(drop, {pr(20, 1), pr(13, 3), pr(15, 1), pr(14, 3)});
    add(drop, {pr(19, 1), pr(15, 3), pr(17, 1), pr(16, 3)});
    remove_blocks(v, drop);
    add(v, {pr(24, 1), pr(5, 3), pr(7, 1), pr(27, 3)});
    add(v, {pr(23, 1), pr(7, 3), pr(9, 1), pr(27, 3)});
    add(v, {pr(22, 1), pr(9, 3), pr(11, 1), pr(27, 3)});
    add(v, {pr(21, 1), pr(11, 3), pr(13, 1), pr(27, 3)});
    add(v, {pr(20, 1), pr(13, 3), pr(15, 1), pr(27, 3)});
    add(v, {pr(19, 1), pr(15, 3), pr(17, 1), pr(27, 3)});
    out.insert(out.end(), v.begin(), v.end());
  }
  {
    Blocks w;
    for (int k = 5; k <= 25; k += 2) {
      for (auto [a, b] : u_up) add(w, {pr(a, 1), pr(k + 1, 3), pr(b, 1), pr(k, 3)});
    }
    Blocks drop;
    add(drop, {pr(25, 1), pr(24, 3), pr(6, 1), pr(23, 3)});
    add(drop, {pr(23, 1), pr(22, 3), pr(10, 1), pr(21, 3)});
    add(drop, {pr(21, 1), pr(20, 3), pr(14, 1), pr(19, 3)});
    add(drop, {pr(19, 1), pr(18, 3), pr(18, 1), pr(17, 3)});
    remove_blocks(w, drop);
    add(w, {pr(23, 3), pr(6, 1), pr(27, 3), pr(25, 1)});
    add(w, {pr(21, 3), pr(10, 1), pr(27, 3), pr(23, 1)});
    add(w, {pr(19, 3), pr(14, 1), pr(27, 3), pr(21, 1)});
    add(w, {pr(17, 3), pr(18, 1), pr(27, 3), pr(19, 1)});
    out.insert(out.end(), w.begin(), w.end());
  }

  // X_k: triple-primed against double-primed pairs.
  const std::array<std::array<int, 2>, 8> x_down = {
      {{26, 1}, {25, 4}, {24, 6}, {23, 8}, {22, 10}, {21, 12}, {20, 14}, {19, 16}}};
  const std::array<std::array<int, 2>, 8> x_up = {
      {{26, 2}, {25, 5}, {24, 7}, {23, 9}, {22, 11}, {21, 13}, {20, 15}, {19, 17}}};
  for (int k = 1; k <= 25; k += 2) {
    for (auto [a, b] : x_down) add(out, {pr(a, 3), pr(k, 2), pr(b, 3), pr(k + 1, 2)});
    for (auto [a, b] : x_up) add(out, {pr(a, 3), pr(k + 1, 2), pr(b, 3), pr(k, 2)});
    add(out, {pr(3, 3), pr(k + 1, 2), pr(18, 3), pr(k, 2)});
  }

  // The 94 remaining paths follow no family pattern; stored verbatim.
  static const char* const filler =
      "17 19''' 1 18''   | 1 27'' 27 2'     | 19 19''' 2 19'   | 21 19''' 3 18''\n"
      "3 26'' 27 4'      | 23 19''' 4 19'   | 25 19''' 5 18''  | 5 25'' 27''' 27\n"
      "1' 27''' 2' 27''  | 1'' 27' 26'' 3'  | 3'' 27''' 3' 2'' | 5'' 27''' 4' 27''\n"
      "7'' 27''' 5' 27   | 9'' 27''' 8' 27  | 11'' 27''' 12' 27| 13'' 27''' 16' 27\n"
      "15'' 27''' 20' 27 | 17'' 27''' 22' 27| 19'' 27''' 24' 27| 5''' 27'' 8' 2'''\n"
      "8' 4''' 27 7'     | 7''' 27'' 12' 2'''| 12' 4''' 3' 4'' | 9''' 27'' 16' 2'''\n"
      "16' 4''' 7' 1'''  | 11''' 27'' 20' 2'''| 20' 4''' 9' 27 | 13''' 27'' 22' 2'''\n"
      "22' 4''' 11' 27   | 15''' 27'' 24' 2'''| 24' 4''' 13' 27| 17''' 27'' 26' 27\n"
      "21''' 27'' 2''' 27| 23''' 27'' 3''' 5'| 25''' 27'' 19''' 6| 27'' 26''' 27 15'\n"
      "2 2'' 27 17'      | 2 18'' 6 19'     | 6 6'' 27 19'     | 6'' 3' 8'' 8\n"
      "8'' 27 21' 1'''   | 4 4'' 27 23'     | 4 18'' 7 24''    | 7 19''' 8 19'\n"
      "8 18'' 9 23''     | 9 19''' 10 19'   | 23'' 27''' 26' 2'''| 26' 4''' 15' 1'''\n"
      "27''' 21'' 13 18''| 13 19''' 11 18'' | 11 22'' 27 6'    | 22'' 3' 10'' 10\n"
      "10 18'' 12 19'    | 10'' 27 25' 1''' | 12 12'' 3' 14''  | 12 19''' 14 19'\n"
      "12'' 27 16'' 3'   | 16'' 16 19' 18   | 14'' 14 18'' 15  | 14'' 27 18'' 3'\n"
      "15 20'' 27 10'    | 15 19''' 16 18'' | 20'' 3' 24'' 27  | 18 18'' 20 19'\n"
      "18 19''' 22 19'   | 20 19''' 24 18'' | 22 18'' 26 19''' | 24 19' 1''' 5'\n"
      "26 19' 2''' 2'    | 2' 4''' 17' 1''' | 5' 2''' 3' 6'''  | 6''' 27 8''' 3'\n"
      "4' 2''' 7' 3'''   | 4' 4''' 19' 3''' | 15' 2''' 6' 26'' | 15' 3''' 9' 2'''\n"
      "9' 1''' 11' 2'''  | 11' 3''' 13' 2'''| 13' 1''' 23' 2'''| 1''' 27' 26''' 3'\n"
      "4''' 6' 24''' 3'  | 24''' 27 10''' 3'| 17' 2''' 10' 26''| 17' 3''' 21' 2'''\n"
      "21' 4''' 10' 22'''| 23' 3''' 25' 2'''| 23' 4''' 14' 26''| 25' 4''' 18' 26''\n"
      "2''' 14' 20''' 3' | 14' 27 12''' 3'  | 2''' 18' 18''' 3'| 18' 27 14''' 3'\n"
      "18''' 27 16''' 3' | 3' 22''' 27 20'''";
  {
    std::string text(filler);
    std::replace(text.begin(), text.end(), '|', '\n');
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream fields(line);
      std::vector<Vertex> vs;
      std::string tok;
      while (fields >> tok) {
        std::size_t primes = 0;
        while (primes < tok.size() && tok[tok.size() - 1 - primes] == '\'') ++primes;
        int k = std::stoi(tok.substr(0, tok.size() - primes));
        vs.push_back(pr(k, static_cast<int>(primes)));
      }
      if (vs.empty()) continue;
      if (vs.size() != 4) throw Error(Errc::invalid_system, "bad filler path: " + line);
      out.emplace_back(std::move(vs));
    }
  }

  return out;
}

Colouring colouring_109() {
  std::unordered_map<Vertex, int> assignment;
  for (int level = 0; level <= 3; ++level) {
    for (int k = 1; k <= 27; ++k) {
      int cls = (k % 2 == 1 && k <= 25) ? 0 : 1;
      assignment.emplace(pr(k, level), cls);
    }
  }
  assignment.emplace(28, 0);
  return Colouring(2, std::move(assignment));
}

std::vector<Vertex> range(Vertex first, Vertex last) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  for (Vertex v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace

ForcedPairCertificate build_forced_pair_28() {
  std::unordered_map<Vertex, int> assignment;
  for (Vertex v = 1; v <= 28; ++v) assignment.emplace(v, v % 2 == 1 ? 0 : 1);
  return {PathSystem(4, range(1, 28), blocks_28()), 27, 28, Colouring(2, std::move(assignment))};
}

std::vector<PathBlock> PatternEntry::blocks() const {
  const auto& r = roles;
  switch (kind) {
    case PatternKind::w3b3:
      return {PathBlock{r[5], r[1], r[2], r[4]}, PathBlock{r[1], r[3], r[0], r[2]}};
    case PatternKind::w2b4:
      return {PathBlock{r[0], r[1], r[2], r[3]}, PathBlock{r[3], r[4], r[1], r[5]}};
    case PatternKind::w1b3:
      return {PathBlock{r[0], r[1], r[2], r[3]}};
  }
  throw Error(Errc::not_supported, "bad pattern kind");
}

ExtensionContext build_unique_109() {
  ExtensionContext ctx{PathSystem(4, range(1, 109), blocks_109()), colouring_109(), {}};
  // (25',1,6',2) with (27',1,2',2), and the same shape over the pair {3,4};
  // the single (27',1,2',2) also matches the one-block template.
  ctx.noncritical.push_back(
      {PatternKind::w2b4, {pr(25, 1), 1, pr(6, 1), 2, pr(2, 1), pr(27, 1)}, 0});
  ctx.noncritical.push_back(
      {PatternKind::w2b4, {pr(25, 1), 3, pr(6, 1), 4, pr(2, 1), pr(27, 1)}, 0});
  ctx.noncritical.push_back({PatternKind::w1b3, {2, pr(2, 1), 1, pr(27, 1)}, 0});
  return ctx;
}

// ---------------------------------------------------------------------------
// Growth steps

namespace {

int step_delta(UniqueStep step) {
  switch (step) {
    case UniqueStep::plus2: return 2;
    case UniqueStep::plus3: return 3;
    case UniqueStep::plus5: return 5;
    case UniqueStep::plus6_w2b4:
    case UniqueStep::plus6_w3b3: return 6;
  }
  return 0;
}

PatternKind pattern_for(UniqueStep step) {
  switch (step) {
    case UniqueStep::plus2:
    case UniqueStep::plus3: return PatternKind::w1b3;
    case UniqueStep::plus5:
    case UniqueStep::plus6_w2b4: return PatternKind::w2b4;
    case UniqueStep::plus6_w3b3: return PatternKind::w3b3;
  }
  throw Error(Errc::not_supported, "bad step");
}

void check_entry(const ExtensionContext& ctx, const PatternEntry& entry) {
  std::size_t expect = entry.kind == PatternKind::w3b3 ? 6
                       : entry.kind == PatternKind::w2b4 ? 6 : 4;
  if (entry.roles.size() != expect) {
    throw Error(Errc::pattern_unavailable, "pattern entry has the wrong number of roles");
  }
  std::unordered_set<Vertex> distinct(entry.roles.begin(), entry.roles.end());
  if (distinct.size() != entry.roles.size()) {
    throw Error(Errc::pattern_unavailable, "pattern roles repeat a vertex");
  }
  for (const PathBlock& b : entry.blocks()) {
    if (!ctx.system.contains_block(b)) {
      throw Error(Errc::pattern_unavailable, "pattern block is not in the system");
    }
  }
  // a-roles carry w_class, b-roles the other class.
  auto expect_class = [&](Vertex v, bool is_a) {
    int want = is_a ? entry.w_class : 1 - entry.w_class;
    if (ctx.colouring.at(v) != want) {
      throw Error(Errc::pattern_unavailable,
                  "pattern vertex " + std::to_string(v) + " has the wrong colour");
    }
  };
  switch (entry.kind) {
    case PatternKind::w3b3:
      for (int i = 0; i < 6; ++i) expect_class(entry.roles[i], i % 2 == 0);
      break;
    case PatternKind::w2b4:
      for (int i = 0; i < 6; ++i) expect_class(entry.roles[i], i < 2);
      break;
    case PatternKind::w1b3:
      for (int i = 0; i < 4; ++i) expect_class(entry.roles[i], i == 2);
      break;
  }
}

/// Ascending labels of the given class, skipping excluded vertices.
std::vector<Vertex> pick_class_vertices(const Colouring& colouring, int cls, std::size_t count,
                                        const std::unordered_set<Vertex>& exclude) {
  std::vector<Vertex> all = colouring.vertices_in_class(cls);
  std::vector<Vertex> out;
  for (Vertex v : all) {
    if (out.size() == count) break;
    if (!exclude.contains(v)) out.push_back(v);
  }
  if (out.size() != count) {
    throw Error(Errc::guard_failed, "colour class " + std::to_string(cls) +
                                        " is too small for this step");
  }
  return out;
}

/// The small-system decomposition of the clique on six labels, containing
/// the paths (h6,h2,h3,h5) and (h2,h4,h1,h3) that seed the next step.
void add_hexad_clique(Blocks& out, const std::array<Vertex, 6>& h) {
  add(out, {h[5], h[0], h[1], h[4]});
  add(out, {h[5], h[1], h[2], h[4]});
  add(out, {h[1], h[3], h[0], h[2]});
  add(out, {h[3], h[2], h[5], h[4]});
  add(out, {h[0], h[4], h[3], h[5]});
}

void append_ingredient(Blocks& sink, IngredientKind kind, std::span<const Vertex> left,
                       std::span<const Vertex> right) {
  IngredientInstance inst = build_ingredient(kind, left, right);
  for (PathBlock& b : inst.blocks) sink.push_back(std::move(b));
}

/// Leftover points in ascending order: every vertex not in `named`.
std::vector<Vertex> leftover(const PathSystem& system, const std::unordered_set<Vertex>& named) {
  std::vector<Vertex> out;
  for (Vertex v : system.vertices()) {
    if (!named.contains(v)) out.push_back(v);
  }
  return out;
}

/// K_{6,2} gadgets on consecutive pairs and, when the count is odd, one
/// K_{6,3} gadget on the trailing triple.
void cover_pairs_and_triple(Blocks& out, std::span<const Vertex> hexad,
                            const std::vector<Vertex>& rest) {
  const bool odd = rest.size() % 2 != 0;
  if (odd && rest.size() < 3) {
    throw Error(Errc::guard_failed, "leftover points do not split into pairs and one triple");
  }
  const std::size_t pairs_end = odd ? rest.size() - 3 : rest.size();
  std::size_t i = 0;
  for (; i < pairs_end; i += 2) {
    std::array<Vertex, 2> pair{rest[i], rest[i + 1]};
    append_ingredient(out, IngredientKind::k62, hexad, pair);
  }
  if (odd) {
    std::array<Vertex, 3> triple{rest[i], rest[i + 1], rest[i + 2]};
    append_ingredient(out, IngredientKind::k63, hexad, triple);
  }
}

struct StepResult {
  Blocks added;
  Blocks removed;
  std::vector<std::pair<Vertex, int>> new_colours;
  std::vector<PatternEntry> new_entries;
};

StepResult apply_w3b3(const ExtensionContext& ctx, const PatternEntry& entry) {
  const int n = ctx.system.order();
  const int phi = entry.w_class;
  const auto& r = entry.roles;  // a1..a6
  const Vertex a1 = r[0], a2 = r[1], a3 = r[2], a4 = r[3], a5 = r[4], a6 = r[5];

  std::unordered_set<Vertex> named(r.begin(), r.end());
  auto ws = pick_class_vertices(ctx.colouring, phi, 3, named);
  auto bs = pick_class_vertices(ctx.colouring, 1 - phi, 3, named);
  const Vertex a7 = ws[0], a9 = ws[1], a11 = ws[2];
  const Vertex a8 = bs[0], a10 = bs[1], a12 = bs[2];
  for (Vertex v : ws) named.insert(v);
  for (Vertex v : bs) named.insert(v);

  const Vertex v1 = n + 1, v2 = n + 2, v3 = n + 3, v4 = n + 4, v5 = n + 5, v6 = n + 6;

  StepResult res;
  res.removed = entry.blocks();

  Blocks& out = res.added;
  add(out, {a1, v4, a3, a5});
  add(out, {v4, a4, v5, a8});
  add(out, {v4, a10, v3, a12});
  add(out, {a4, a2, v1, a6});
  add(out, {a5, v1, a7, v6});
  add(out, {v2, a9, v1, a11});

  add(out, {a2, a3, a1, v5});
  add(out, {a1, v6, a3, v5});
  add(out, {a1, v1, a3, v2});
  add(out, {a3, v3, a1, v2});

  add(out, {a5, v4, a7, v5});
  add(out, {v5, a5, v2, a7});
  add(out, {v6, a5, v3, a7});

  add(out, {a9, v3, a11, v2});
  add(out, {a9, v4, a11, v5});
  add(out, {a11, v6, a9, v5});

  add(out, {v4, a2, a6, v5});
  add(out, {v5, a2, v2, a6});
  add(out, {a1, a4, v6, a8});
  add(out, {v1, a4, v2, a8});
  add(out, {v1, a8, v3, a4});
  add(out, {v3, a6, v4, a8});
  add(out, {v3, a2, v6, a6});

  add(out, {v4, a12, v5, a10});
  add(out, {a10, v6, a12, v1});
  add(out, {v1, a10, v2, a12});

  const std::array<Vertex, 6> hexad{v1, v2, v3, v4, v5, v6};
  cover_pairs_and_triple(out, hexad, leftover(ctx.system, named));
  add_hexad_clique(out, hexad);

  res.new_colours = {{v1, phi}, {v2, 1 - phi}, {v3, phi},
                     {v4, 1 - phi}, {v5, phi}, {v6, 1 - phi}};
  res.new_entries.push_back({PatternKind::w3b3, {v1, v2, v3, v4, v5, v6}, phi});
  return res;
}

StepResult apply_w2b4(const ExtensionContext& ctx, const PatternEntry& entry) {
  const int n = ctx.system.order();
  const int phi = entry.w_class;
  const auto& r = entry.roles;  // a1,a2,b1,b2,b3,b4
  const Vertex a1 = r[0], a2 = r[1], b1 = r[2], b2 = r[3], b3 = r[4], b4 = r[5];

  std::unordered_set<Vertex> named(r.begin(), r.end());
  auto ws = pick_class_vertices(ctx.colouring, phi, 4, named);
  auto bs = pick_class_vertices(ctx.colouring, 1 - phi, 2, named);
  const Vertex a3 = ws[0], a4 = ws[1], a5 = ws[2], a6 = ws[3];
  const Vertex b5 = bs[0], b6 = bs[1];
  for (Vertex v : ws) named.insert(v);
  for (Vertex v : bs) named.insert(v);

  const Vertex v1 = n + 1, v2 = n + 2, v3 = n + 3, v4 = n + 4, v5 = n + 5, v6 = n + 6;

  StepResult res;
  res.removed = entry.blocks();

  Blocks& out = res.added;
  add(out, {a1, a2, v1, a3});
  add(out, {v1, b3, v2, b4});
  add(out, {v1, b5, v6, b6});
  add(out, {b3, b2, v4, b1});
  add(out, {v4, a1, v5, a4});
  add(out, {v4, a5, v3, a6});

  add(out, {b4, a2, v2, a3});
  add(out, {b3, a2, v6, a3});
  add(out, {a2, v4, a3, v3});
  add(out, {v3, a2, v5, a3});

  add(out, {v1, a1, v2, a4});
  add(out, {v1, a4, v6, a1});
  add(out, {v4, a4, v3, a1});

  add(out, {v1, a5, v2, a6});
  add(out, {v1, a6, v6, a5});
  add(out, {v4, a6, v5, a5});

  add(out, {a2, b1, b2, v1});
  add(out, {b2, v2, b1, v1});
  add(out, {v6, b2, v5, b1});
  add(out, {v6, b1, v3, b2});

  add(out, {v1, b4, v6, b3});
  add(out, {b4, v3, b3, v4});
  add(out, {v4, b4, v5, b3});

  add(out, {v1, b6, v2, b5});
  add(out, {b6, v3, b5, v4});
  add(out, {b5, v5, b6, v4});

  const std::array<Vertex, 6> hexad{v1, v2, v3, v4, v5, v6};
  cover_pairs_and_triple(out, hexad, leftover(ctx.system, named));
  add_hexad_clique(out, hexad);

  res.new_colours = {{v1, 1 - phi}, {v2, phi}, {v3, 1 - phi},
                     {v4, phi}, {v5, 1 - phi}, {v6, phi}};
  res.new_entries.push_back({PatternKind::w3b3, {v1, v2, v3, v4, v5, v6}, 1 - phi});
  return res;
}

StepResult apply_plus5(const ExtensionContext& ctx, const PatternEntry& entry) {
  const int n = ctx.system.order();
  const int phi = entry.w_class;
  const auto& r = entry.roles;
  const Vertex a1 = r[0], a2 = r[1], b1 = r[2], b2 = r[3], b3 = r[4], b4 = r[5];

  std::unordered_set<Vertex> named(r.begin(), r.end());
  auto ws = pick_class_vertices(ctx.colouring, phi, 8, named);
  auto bs = pick_class_vertices(ctx.colouring, 1 - phi, 2, named);
  const Vertex a3 = ws[0], a4 = ws[1], a5 = ws[2], a6 = ws[3], a7 = ws[4], a8 = ws[5],
               a9 = ws[6], a10 = ws[7];
  const Vertex b5 = bs[0], b6 = bs[1];
  for (Vertex v : ws) named.insert(v);
  for (Vertex v : bs) named.insert(v);

  const Vertex v1 = n + 1, v2 = n + 2, v3 = n + 3, v4 = n + 4, v5 = n + 5;
  const Vertex v6 = a10;  // the tenth w-point joins the fresh hexad

  StepResult res;
  res.removed = entry.blocks();

  Blocks& out = res.added;
  add(out, {a2, a1, v1, a3});
  add(out, {b3, b2, v4, b1});
  add(out, {v4, a4, v5, a5});
  add(out, {v2, b3, v1, b4});
  add(out, {a2, v4, a6, v3});

  add(out, {v1, a5, v4, a1});
  add(out, {v2, a5, v3, a1});
  add(out, {a1, v2, a3, v3});
  add(out, {a1, v5, a3, v4});

  add(out, {b3, a2, v1, a4});
  add(out, {b4, a2, v2, a6});
  add(out, {v1, a6, v5, a2});
  add(out, {v2, a4, v3, a2});

  add(out, {a2, b1, b2, v1});
  add(out, {v2, b1, v3, a7});
  add(out, {a7, v1, b1, v5});
  add(out, {v3, b2, v5, a7});
  add(out, {b2, v2, a7, v4});

  add(out, {v1, a8, v5, b4});
  add(out, {b3, v3, a8, v4});
  add(out, {b4, v4, b3, v5});
  add(out, {a8, v2, b4, v3});

  add(out, {v1, a9, v5, b6});
  add(out, {b5, v3, a9, v4});
  add(out, {v5, b5, v4, b6});
  add(out, {a9, v2, b6, v3});
  add(out, {b6, v1, b5, v2});

  // Triples over the remaining points, each with a phi-coloured middle.
  std::vector<Vertex> rest = leftover(ctx.system, named);
  std::vector<Vertex> mids, pool;
  const std::size_t m = rest.size() / 3;
  for (Vertex v : rest) {
    if (ctx.colouring.at(v) == phi && mids.size() < m) mids.push_back(v);
    else pool.push_back(v);
  }
  if (mids.size() != m || rest.size() % 3 != 0) {
    throw Error(Errc::guard_failed, "cannot split the leftover points into w-centred triples");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex t1 = pool[2 * i], t2 = mids[i], t3 = pool[2 * i + 1];
    add(out, {t1, v1, t2, v2});
    add(out, {t1, v2, t3, v5});
    add(out, {v3, t1, v4, t3});
    add(out, {v1, t3, v3, t2});
    add(out, {t1, v5, t2, v4});
  }

  add_hexad_clique(out, {v1, v2, v3, v4, v5, v6});

  res.new_colours = {{v1, 1 - phi}, {v2, phi}, {v3, 1 - phi}, {v4, phi}, {v5, 1 - phi}};
  res.new_entries.push_back({PatternKind::w3b3, {v1, v2, v3, v4, v5, v6}, 1 - phi});
  return res;
}

StepResult apply_plus2(const ExtensionContext& ctx, const PatternEntry& entry) {
  const int n = ctx.system.order();
  const int phi = entry.w_class;
  const auto& r = entry.roles;  // b1,b2,a1,b3
  const Vertex b1 = r[0], b2 = r[1], a1 = r[2], b3 = r[3];

  std::unordered_set<Vertex> named(r.begin(), r.end());
  auto ws = pick_class_vertices(ctx.colouring, phi, 2, named);
  auto bs = pick_class_vertices(ctx.colouring, 1 - phi, 1, named);
  const Vertex a2 = ws[0], a3 = ws[1], b4 = bs[0];
  for (Vertex v : ws) named.insert(v);
  named.insert(b4);

  const Vertex v1 = n + 1, v2 = n + 2;

  StepResult res;
  res.removed = entry.blocks();

  Blocks& out = res.added;
  add(out, {b2, b1, v1, b3});
  add(out, {v1, a1, v2, a2});
  add(out, {a1, b2, v1, v2});
  add(out, {a1, b3, v2, b2});
  add(out, {a2, v1, a3, v2});
  add(out, {b1, v2, b4, v1});

  std::vector<Vertex> rest = leftover(ctx.system, named);
  if (rest.size() % 3 != 0) {
    throw Error(Errc::guard_failed, "leftover points do not split into triples");
  }
  for (std::size_t i = 0; i < rest.size(); i += 3) {
    add(out, {rest[i], v1, rest[i + 1], v2});
    add(out, {rest[i], v2, rest[i + 2], v1});
  }

  res.new_colours = {{v1, phi}, {v2, 1 - phi}};
  return res;
}

StepResult apply_plus3(const ExtensionContext& ctx, const PatternEntry& entry) {
  const int n = ctx.system.order();
  const int phi = entry.w_class;
  const auto& r = entry.roles;
  const Vertex b1 = r[0], b2 = r[1], a1 = r[2], b3 = r[3];

  std::unordered_set<Vertex> named(r.begin(), r.end());
  auto ws = pick_class_vertices(ctx.colouring, phi, 2, named);
  const Vertex a2 = ws[0], a3 = ws[1];
  for (Vertex v : ws) named.insert(v);

  const Vertex v1 = n + 1, v2 = n + 2, v3 = n + 3;

  StepResult res;
  res.removed = entry.blocks();

  Blocks& out = res.added;
  add(out, {b2, b1, v1, b3});
  add(out, {v1, a1, v2, a2});
  add(out, {v2, b2, v3, b3});
  add(out, {a1, b3, v2, v1});
  add(out, {b2, a1, v3, v2});
  add(out, {b1, v3, a2, v1});
  add(out, {b1, v2, a3, v1});
  add(out, {a3, v3, v1, b2});

  // Pairs plus one trailing triple whose middle takes the b colour.
  std::vector<Vertex> rest = leftover(ctx.system, named);
  if (rest.size() % 2 != 1) {
    throw Error(Errc::guard_failed, "leftover points do not split into pairs and one triple");
  }
  Vertex mid = 0;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    if (ctx.colouring.at(*it) == 1 - phi) {
      mid = *it;
      break;
    }
  }
  if (mid == 0) {
    throw Error(Errc::guard_failed, "no b-coloured point available for the trailing triple");
  }
  rest.erase(std::find(rest.begin(), rest.end(), mid));
  const Vertex t3 = rest.back();
  rest.pop_back();
  const Vertex t1 = rest.back();
  rest.pop_back();
  for (std::size_t i = 0; i < rest.size(); i += 2) {
    add(out, {rest[i], v3, rest[i + 1], v2});
    add(out, {v2, rest[i], v1, rest[i + 1]});
  }
  add(out, {v1, t1, v2, mid});
  add(out, {t3, v1, mid, v3});
  add(out, {t1, v3, t3, v2});

  res.new_colours = {{v1, phi}, {v2, 1 - phi}, {v3, phi}};
  return res;
}

}  // namespace

ExtensionContext extend_unique(const ExtensionContext& ctx, UniqueStep step,
                               const ExtendOptions& options) {
  if (ctx.colouring.k() != 2) {
    throw Error(Errc::invalid_colouring, "growth steps need a 2-colouring");
  }
  const int n = ctx.system.order();
  const int residue = n % 6;

  switch (step) {
    case UniqueStep::plus2:
    case UniqueStep::plus3:
    case UniqueStep::plus5:
      if (residue != 1) {
        throw Error(Errc::guard_failed, "step needs order = 1 (mod 6), got " + std::to_string(n));
      }
      break;
    case UniqueStep::plus6_w2b4:
      if (residue != 1 && residue != 3 && residue != 4) {
        throw Error(Errc::guard_failed,
                    "step needs order = 1,3,4 (mod 6), got " + std::to_string(n));
      }
      break;
    case UniqueStep::plus6_w3b3:
      if (residue != 0 && residue != 1 && residue != 3 && residue != 4) {
        throw Error(Errc::guard_failed, "order " + std::to_string(n) + " is not admissible");
      }
      break;
  }

  const PatternKind want = pattern_for(step);
  const PatternEntry* entry = nullptr;
  for (const PatternEntry& e : ctx.noncritical) {
    if (e.kind == want) {
      entry = &e;
      break;
    }
  }
  if (!entry) {
    throw Error(Errc::pattern_unavailable, "no registered pattern of the required shape");
  }
  check_entry(ctx, *entry);

  auto sizes = ctx.colouring.class_sizes();
  const int w_size = sizes[entry->w_class];
  const int b_size = sizes[1 - entry->w_class];
  switch (step) {
    case UniqueStep::plus2:
    case UniqueStep::plus3:
      if (w_size < 3 || b_size < 4) {
        throw Error(Errc::guard_failed, "GUARD |C_w| >= 3 and |C_b| >= 4 failed");
      }
      break;
    case UniqueStep::plus5:
      if (w_size < 10 || b_size < 6) {
        throw Error(Errc::guard_failed, "GUARD |C_w| >= 10 and |C_b| >= 6 failed");
      }
      if (3 * w_size <= n + 15) {
        throw Error(Errc::guard_failed, "GUARD |C_w| > |P|/3 + 5 failed");
      }
      break;
    case UniqueStep::plus6_w2b4:
    case UniqueStep::plus6_w3b3:
      if (w_size < 6 || b_size < 6) {
        throw Error(Errc::guard_failed, "GUARD |C_w| >= 6 and |C_b| >= 6 failed");
      }
      break;
  }

  StepResult res;
  switch (step) {
    case UniqueStep::plus2: res = apply_plus2(ctx, *entry); break;
    case UniqueStep::plus3: res = apply_plus3(ctx, *entry); break;
    case UniqueStep::plus5: res = apply_plus5(ctx, *entry); break;
    case UniqueStep::plus6_w2b4: res = apply_w2b4(ctx, *entry); break;
    case UniqueStep::plus6_w3b3: res = apply_w3b3(ctx, *entry); break;
  }

  Blocks blocks = ctx.system.blocks();
  {
    std::unordered_set<PathBlock, PathBlockHash> removed(res.removed.begin(), res.removed.end());
    std::erase_if(blocks, [&](const PathBlock& b) { return removed.contains(b); });
  }

  if (options.check_noncritical && n <= options.noncritical_max_order) {
    // The growth step redistributes the consumed blocks' edges, so the
    // system without them must still have a single colouring to extend.
    PathSystem carved(4, ctx.system.vertices(), blocks);
    Answer still_unique = is_uniquely_2chromatic(carved, options.budget);
    if (still_unique == Answer::no) {
      throw Error(Errc::guard_failed, "registered pattern turned out to be critical");
    }
    if (still_unique == Answer::unknown) {
      throw Error(Errc::guard_failed, "budget exhausted while checking non-criticality");
    }
  }

  blocks.insert(blocks.end(), res.added.begin(), res.added.end());
  const int grown_order = n + step_delta(step);
  PathSystem grown(4, range(1, grown_order), std::move(blocks));

  std::unordered_map<Vertex, int> assignment = ctx.colouring.assignment();
  for (auto [v, c] : res.new_colours) assignment.emplace(v, c);
  Colouring colouring(2, std::move(assignment));

  ExtensionContext out{std::move(grown), std::move(colouring), {}};
  {
    std::unordered_set<PathBlock, PathBlockHash> removed(res.removed.begin(), res.removed.end());
    for (const PatternEntry& e : ctx.noncritical) {
      if (&e == entry) continue;
      bool intact = true;
      for (const PathBlock& b : e.blocks()) {
        if (removed.contains(b)) {
          intact = false;
          break;
        }
      }
      if (intact) out.noncritical.push_back(e);
    }
  }
  for (PatternEntry& e : res.new_entries) out.noncritical.push_back(std::move(e));
  return out;
}

ExtensionContext unique_pipeline(int n, const ExtendOptions& options) {
  if (n < 109 || n % 3 == 2) {
    throw Error(Errc::not_supported,
                "uniquely 2-colourable systems are built for n = 0,1 (mod 3), n >= 109");
  }
  ExtensionContext ctx = build_unique_109();
  switch (n % 6) {
    case 1:
      if (n == 109) return ctx;
      ctx = extend_unique(ctx, UniqueStep::plus6_w2b4, options);  // 115
      break;
    case 0:
      ctx = extend_unique(ctx, UniqueStep::plus5, options);  // 114
      break;
    case 3:
      ctx = extend_unique(ctx, UniqueStep::plus2, options);  // 111
      if (n == 111) return ctx;
      ctx = extend_unique(ctx, UniqueStep::plus6_w2b4, options);  // 117
      break;
    case 4:
      ctx = extend_unique(ctx, UniqueStep::plus3, options);  // 112
      if (n == 112) return ctx;
      ctx = extend_unique(ctx, UniqueStep::plus6_w2b4, options);  // 118
      break;
    default:
      throw Error(Errc::not_supported, "unexpected residue");
  }
  while (ctx.system.order() < n) {
    ctx = extend_unique(ctx, UniqueStep::plus6_w3b3, options);
  }
  return ctx;
}

std::vector<PatternEntry> find_noncritical_candidates(const PathSystem& system,
                                                      const Colouring& colouring,
                                                      PatternKind kind) {
  // Blocks by contained vertex, for locating the second block of a pair.
  std::unordered_map<Vertex, std::vector<const PathBlock*>> by_vertex;
  for (const PathBlock& b : system.blocks()) {
    for (Vertex v : b.vertices()) by_vertex[v].push_back(&b);
  }

  auto colour = [&](Vertex v) { return colouring.at(v); };
  auto orientations = [](const PathBlock& b) {
    std::array<std::array<Vertex, 4>, 2> out{};
    const auto& vs = b.vertices();
    for (int i = 0; i < 4; ++i) {
      out[0][i] = vs[i];
      out[1][i] = vs[3 - i];
    }
    return out;
  };

  std::vector<PatternEntry> found;
  auto push_unique = [&](PatternEntry entry) {
    for (const PatternEntry& e : found) {
      if (e.roles == entry.roles && e.kind == entry.kind) return;
    }
    found.push_back(std::move(entry));
  };

  for (const PathBlock& x : system.blocks()) {
    for (const auto& o : orientations(x)) {
      if (kind == PatternKind::w1b3) {
        // (b1,b2,a1,b3): one w vertex, sitting at the third position.
        int p = colour(o[2]);
        if (colour(o[0]) == p || colour(o[1]) == p || colour(o[3]) == p) continue;
        push_unique({PatternKind::w1b3, {o[0], o[1], o[2], o[3]}, p});
      } else if (kind == PatternKind::w2b4) {
        // X = (a1,a2,b1,b2), Y = (b2,b3,a2,b4).
        int p = colour(o[0]);
        if (colour(o[1]) != p || colour(o[2]) == p || colour(o[3]) == p) continue;
        const Vertex a1 = o[0], a2 = o[1], bb1 = o[2], bb2 = o[3];
        for (const PathBlock* y : by_vertex[a2]) {
          if (*y == x) continue;
          for (const auto& q : orientations(*y)) {
            if (q[0] != bb2 || q[2] != a2) continue;
            if (colour(q[1]) == p || colour(q[3]) == p) continue;
            if (q[1] == a1 || q[3] == a1 || q[1] == bb1 || q[3] == bb1 || q[1] == q[3]) continue;
            push_unique({PatternKind::w2b4, {a1, a2, bb1, bb2, q[1], q[3]}, p});
          }
        }
      } else {
        // X = (a6,a2,a3,a5), Y = (a2,a4,a1,a3).
        int p = colour(o[2]);
        if (colour(o[3]) != p || colour(o[0]) == p || colour(o[1]) == p) continue;
        const Vertex a6 = o[0], a2 = o[1], a3 = o[2], a5 = o[3];
        for (const PathBlock* y : by_vertex[a2]) {
          if (*y == x) continue;
          for (const auto& q : orientations(*y)) {
            if (q[0] != a2 || q[3] != a3) continue;
            if (colour(q[1]) == p || colour(q[2]) != p) continue;
            if (q[1] == a6 || q[2] == a5) continue;
            push_unique({PatternKind::w3b3, {q[2], a2, a3, q[1], a5, a6}, p});
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const PatternEntry& lhs, const PatternEntry& rhs) { return lhs.roles < rhs.roles; });
  return found;
}

}  // namespace pathsys
