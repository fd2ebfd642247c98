#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "monideal/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run mi_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("mi_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("normalize is canonical and idempotent") {
  Scratch s;
  const auto f = s.write("a.json", R"({"gens": [[1,1],[2,0],[2,1]], "ring": {"vars": ["x","y"]}})");
  const auto r = mi_run({"normalize", f});
  CHECK(r.code == 0);
  CHECK(r.out == mi::to_json(ideal({"x", "y"}, {{2, 0}, {1, 1}})));
  const auto g = s.write("b.json", r.out);
  CHECK(mi_run({"normalize", g}).out == r.out);
}

TEST_CASE("errors map to exit codes") {
  Scratch s;
  CHECK(mi_run({"frobnicate"}).code == 3);
  CHECK(mi_run({}).code == 3);
  CHECK(mi_run({"--help"}).code == 0);
  const auto bad = s.write("bad.json", R"({"ring": {"vars": ["x"]}, "gens": [[1,]]})");
  const auto r = mi_run({"normalize", bad});
  CHECK(r.code == 3);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(mi_run({"normalize", (s.dir / "missing.json").string()}).code == 3);
  CHECK(mi_run({"--char", "4", "depth", bad}).code == 3);
}

TEST_CASE("symbolic power on the command line") {
  Scratch s;
  const auto J = mi::to_json(ideal({"y", "z", "t"}, {{4, 0, 0}, {3, 1, 0}, {1, 3, 0}, {0, 4, 0}, {2, 2, 1}}));
  const auto f = s.write("J.json", J);
  const auto r = mi_run({"symbolic", "2", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("(y^8, y^7*z, y^6*z^2, y^5*z^3, y^4*z^4, y^3*z^5, y^2*z^6, y*z^7, z^8)") != std::string::npos);
}

TEST_CASE("verify reports and determinism") {
  Scratch s;
  const auto I = s.write("I.json", mi::to_json(ideal({"x", "y"}, {{2, 0}, {1, 1}})));
  const auto J = s.write("J.json", mi::to_json(ideal({"u", "v"}, {{1, 1}})));
  const auto a = mi_run({"verify", "binomial", "--I", I, "--J", J, "-n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("\"identity\"") != std::string::npos);
  const auto b = mi_run({"verify", "binomial", "--I", I, "--J", J, "-n", "3"});
  CHECK(a.out == b.out);
  const auto rnd1 = mi_run({"--seed", "5", "verify", "tor-vanishing", "--random", "3", "-n", "2"});
  const auto rnd2 = mi_run({"--seed", "5", "verify", "tor-vanishing", "--random", "3", "-n", "2"});
  CHECK(rnd1.code == 0);
  CHECK(rnd1.out == rnd2.out);
}

TEST_CASE("torzero exit status") {
  Scratch s;
  const auto V = s.write("V.json", mi::to_json(ideal({"x", "y"}, {{2, 0}})));
  const auto U = s.write("U.json", mi::to_json(ideal({"x", "y"}, {{1, 0}})));
  CHECK(mi_run({"torzero", V, U}).code == 0);
  CHECK(mi_run({"torzero", U, U}).code == 2);
  CHECK(mi_run({"torzero", U, V}).code == 3);
}

TEST_CASE("synthesis commands") {
  Scratch s;
  const auto out = (s.dir / "q.json").string();
  const auto r = mi_run({"--json", "synth-depth", "--seq", "1,1", "--tail", "1", "-o", out});
  CHECK(r.code == 0);
  CHECK(fs::exists(out));
  CHECK(mi_run({"synth-depth", "--seq", "0,2,1", "--tail", "1", "--max-vars", "3"}).code == 3);
  CHECK(mi_run({"ratliff", "--set", "1", "--verify"}).code == 0);
  CHECK(mi_run({"ratliff", "--set", "0"}).code == 3);
}

}
