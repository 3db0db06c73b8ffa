#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* env = std::getenv("PATHSYS_CLI");
  REQUIRE_MESSAGE(env != nullptr, "PATHSYS_CLI must point at the pathsys binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  std::array<char, 512> chunk{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(chunk.data(), chunk.size(), pipe)) output += chunk.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "pathsys-cli-test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("construct, verify, and analyze a two-chromatic system") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "s10.pathsys").string();
  std::string col = (dir / "c10.colouring").string();

  auto built = run("construct --order 10 --mode two-chromatic --out-system " + sys +
                   " --out-colouring " + col);
  CHECK(built.exit_code == 0);

  auto verified = run("verify --system " + sys + " --colouring " + col);
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.empty());

  auto chromatic = run("analyze --system " + sys + " --chromatic");
  CHECK(chromatic.exit_code == 0);
  CHECK(chromatic.output == "CHROMATIC 2\n");

  auto unique = run("analyze --system " + sys + " --unique");
  CHECK(unique.exit_code == 0);
  CHECK(unique.output == "UNIQUE false\n");

  auto starved = run("analyze --system " + sys + " --unique --max-nodes 1");
  CHECK(starved.exit_code == 4);
  CHECK(starved.output == "UNKNOWN budget\n");
}

TEST_CASE("inadmissible orders exit with a usage error") {
  fs::path dir = scratch_dir();
  auto result = run("construct --order 5 --mode two-chromatic --out-system " +
                    (dir / "x.pathsys").string() + " --out-colouring " +
                    (dir / "x.colouring").string());
  CHECK(result.exit_code == 2);
}

TEST_CASE("verify reports missing edges one per line") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "broken.pathsys").string();
  {
    // The order-4 system with one block dropped: 3 missing edges.
    std::ofstream out(sys);
    out << "PATHSYS 1 4 4 1\n3 1 2 4\n";
  }
  auto result = run("verify --system " + sys);
  CHECK(result.exit_code == 1);
  int missing_lines = 0;
  std::istringstream lines(result.output);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("MISSING_EDGE ", 0) == 0) ++missing_lines;
  }
  CHECK(missing_lines == 3);
}

TEST_CASE("truncated files exit with a parse error") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "truncated.pathsys").string();
  {
    std::ofstream out(sys);
    out << "PATHSYS 1 10 4 15\n1 2 3 4\n";
  }
  auto result = run("verify --system " + sys);
  CHECK(result.exit_code == 2);
}

TEST_CASE("bipartite targets verify gadget files") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "k33.pathsys").string();
  {
    std::ofstream out(sys);
    out << "PATHSYS 1 6 4 3\n2 4 1 6\n1 5 3 4\n3 6 2 5\n";
  }
  CHECK(run("verify --system " + sys + " --target bipartite --left 3").exit_code == 0);
  CHECK(run("verify --system " + sys).exit_code == 1);  // not a complete decomposition
}

TEST_CASE("forced pair query without a forced pair") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "s4.pathsys").string();
  {
    std::ofstream out(sys);
    out << "PATHSYS 1 4 4 2\n3 1 2 4\n1 4 3 2\n";
  }
  auto result = run("analyze --system " + sys + " --forced-pair --u 1 --v 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "FORCED_DISTINCT false\n");
}

TEST_CASE("ingredient gadgets are addressable by tag") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "k66.pathsys").string();
  std::string col = (dir / "k66.colouring").string();
  auto made = run("ingredient --kind k66 --out-system " + sys + " --out-colouring " + col);
  CHECK(made.exit_code == 0);
  CHECK(made.output == "INGREDIENT k66 bipartite 6 6 12\n");
  CHECK(run("verify --system " + sys + " --colouring " + col + " --target bipartite --left 6")
            .exit_code == 0);
  CHECK(run("ingredient --kind k99 --out-system " + sys + " --out-colouring " + col).exit_code ==
        2);
}

TEST_CASE("unique construction writes the 1962-block system") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "s109.pathsys").string();
  std::string col = (dir / "c109.colouring").string();
  auto made = run("construct --order 109 --mode unique --out-system " + sys + " --out-colouring " +
                  col);
  CHECK(made.exit_code == 0);
  std::ifstream in(sys);
  std::string header;
  std::getline(in, header);
  CHECK(header == "PATHSYS 1 109 4 1962");
  auto unique = run("analyze --system " + sys + " --unique --max-nodes 100000000");
  CHECK(unique.exit_code == 0);
  CHECK(unique.output == "UNIQUE true\n");
}

TEST_CASE("the +5 growth step takes the 109 files to order 114") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "g109.pathsys").string();
  std::string col = (dir / "g109.colouring").string();
  REQUIRE(run("construct --order 109 --mode unique --out-system " + sys + " --out-colouring " +
              col)
              .exit_code == 0);
  std::string sys2 = (dir / "g114.pathsys").string();
  std::string col2 = (dir / "g114.colouring").string();
  auto grown = run("extend --system " + sys + " --colouring " + col +
                   " --lemma plus5 --out-system " + sys2 + " --out-colouring " + col2);
  CHECK(grown.exit_code == 0);
  std::ifstream in(sys2);
  std::string header;
  std::getline(in, header);
  CHECK(header == "PATHSYS 1 114 4 2147");
}

TEST_CASE("extend steps grow verified files") {
  fs::path dir = scratch_dir();
  std::string sys = (dir / "s13.pathsys").string();
  std::string col = (dir / "c13.colouring").string();
  auto built = run("construct --order 13 --mode two-chromatic --out-system " + sys +
                   " --out-colouring " + col);
  REQUIRE(built.exit_code == 0);

  // Lift the 2-colouring to 3 classes so the k-extension applies.
  std::string col3 = (dir / "c13k3.colouring").string();
  {
    std::ifstream in(col);
    std::ofstream out(col3);
    std::string header;
    std::getline(in, header);
    out << "COLOURING 13 3\n";
    int v, c;
    while (in >> v >> c) {
      if (v == 13) c = 2;
      out << v << ' ' << c << '\n';
    }
  }
  std::string sys2 = (dir / "s15.pathsys").string();
  std::string col2 = (dir / "c15.colouring").string();
  auto grown = run("extend --system " + sys + " --colouring " + col3 +
                   " --lemma kplus2 --out-system " + sys2 + " --out-colouring " + col2);
  CHECK(grown.exit_code == 0);
  CHECK(run("verify --system " + sys2 + " --colouring " + col2).exit_code == 0);

  // Guard failure: +5 needs order 1 (mod 6), 10 is 4 (mod 6).
  std::string sys10 = (dir / "s10b.pathsys").string();
  std::string col10 = (dir / "c10b.colouring").string();
  REQUIRE(run("construct --order 10 --mode two-chromatic --out-system " + sys10 +
              " --out-colouring " + col10)
              .exit_code == 0);
  auto blocked = run("extend --system " + sys10 + " --colouring " + col10 +
                     " --lemma plus5 --out-system " + (dir / "no.pathsys").string() +
                     " --out-colouring " + (dir / "no.colouring").string());
  CHECK(blocked.exit_code == 2);
}
