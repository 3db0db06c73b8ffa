#include "pathsys/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace pathsys {

namespace {

/// Content lines: comments and blank lines stripped.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
  std::istringstream fields(line);
  std::vector<long long> out;
  long long x;
  while (fields >> x) out.push_back(x);
  std::string rest;
  if (fields.clear(), fields >> rest) {
    throw Error(Errc::parse_error, std::string("unexpected token in ") + what + ": " + rest);
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path.string());
  return out;
}

}  // namespace

SystemFileData read_system_file(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::parse_error, "empty system file");

  std::istringstream header(lines[0]);
  std::string magic, version;
  SystemFileData data;
  long long b = 0;
  if (!(header >> magic >> version >> data.n >> data.m >> b) || magic != "PATHSYS" ||
      version != "1") {
    throw Error(Errc::parse_error, "expected header 'PATHSYS 1 <n> <m> <blocks>'");
  }
  if (data.n < 1 || data.m < 2 || b < 0) {
    throw Error(Errc::parse_error, "nonsensical header counts");
  }
  if (static_cast<long long>(lines.size()) - 1 != b) {
    throw Error(Errc::parse_error, "header promises " + std::to_string(b) + " blocks, file has " +
                                       std::to_string(lines.size() - 1));
  }
  data.blocks.reserve(static_cast<std::size_t>(b));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto ints = parse_ints(lines[i], "block line");
    if (static_cast<int>(ints.size()) != data.m) {
      throw Error(Errc::parse_error, "block line " + std::to_string(i) + " has " +
                                         std::to_string(ints.size()) + " labels, expected " +
                                         std::to_string(data.m));
    }
    std::vector<Vertex> vs;
    vs.reserve(ints.size());
    for (long long x : ints) {
      if (x < 1 || x > data.n) {
        throw Error(Errc::parse_error,
                    "vertex " + std::to_string(x) + " outside 1.." + std::to_string(data.n));
      }
      vs.push_back(static_cast<Vertex>(x));
    }
    try {
      data.blocks.emplace_back(std::move(vs));
    } catch (const Error& e) {
      throw Error(Errc::parse_error, "block line " + std::to_string(i) + ": " + e.what());
    }
  }
  return data;
}

SystemFileData read_system_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_system_file(in);
}

void write_system_file(std::ostream& out, const PathSystem& system) {
  out << "PATHSYS 1 " << system.order() << ' ' << system.path_order() << ' ' << system.size()
      << '\n';
  for (const PathBlock& block : system.blocks()) {
    const auto& vs = block.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out << ' ';
      out << vs[i];
    }
    out << '\n';
  }
}

void write_system_file(const std::filesystem::path& path, const PathSystem& system) {
  auto out = open_out(path);
  write_system_file(out, system);
}

PathSystem to_system(const SystemFileData& data) {
  std::vector<Vertex> vertices;
  vertices.reserve(data.n);
  for (Vertex v = 1; v <= data.n; ++v) vertices.push_back(v);
  return PathSystem(data.m, std::move(vertices), data.blocks);
}

ColouringFileData read_colouring_file(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw Error(Errc::parse_error, "empty colouring file");

  std::istringstream header(lines[0]);
  std::string magic;
  ColouringFileData data;
  if (!(header >> magic >> data.n >> data.k) || magic != "COLOURING") {
    throw Error(Errc::parse_error, "expected header 'COLOURING <n> <k>'");
  }
  if (data.n < 1 || data.k < 1) throw Error(Errc::parse_error, "nonsensical header counts");
  if (static_cast<long long>(lines.size()) - 1 != data.n) {
    throw Error(Errc::parse_error, "expected one line per vertex 1.." + std::to_string(data.n));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto ints = parse_ints(lines[i], "colouring line");
    if (ints.size() != 2) {
      throw Error(Errc::parse_error, "colouring line " + std::to_string(i) +
                                         " needs '<vertex> <class>'");
    }
    auto [v, c] = std::pair(ints[0], ints[1]);
    if (v < 1 || v > data.n) {
      throw Error(Errc::parse_error, "vertex " + std::to_string(v) + " outside 1.." +
                                         std::to_string(data.n));
    }
    if (c < 0 || c >= data.k) {
      throw Error(Errc::parse_error, "class " + std::to_string(c) + " outside 0.." +
                                         std::to_string(data.k - 1));
    }
    if (!data.assignment.emplace(static_cast<Vertex>(v), static_cast<int>(c)).second) {
      throw Error(Errc::parse_error, "vertex " + std::to_string(v) + " coloured twice");
    }
  }
  return data;
}

ColouringFileData read_colouring_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_colouring_file(in);
}

void write_colouring_file(std::ostream& out, const Colouring& colouring) {
  std::vector<Vertex> vertices;
  vertices.reserve(colouring.size());
  for (const auto& [v, c] : colouring.assignment()) vertices.push_back(v);
  std::sort(vertices.begin(), vertices.end());
  out << "COLOURING " << vertices.size() << ' ' << colouring.k() << '\n';
  for (Vertex v : vertices) out << v << ' ' << colouring.at(v) << '\n';
}

void write_colouring_file(const std::filesystem::path& path, const Colouring& colouring) {
  auto out = open_out(path);
  write_colouring_file(out, colouring);
}

Colouring to_colouring(const ColouringFileData& data) { return Colouring(data.k, data.assignment); }

}  // namespace pathsys
