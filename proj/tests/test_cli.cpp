#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using lagrangia::report::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string bin() {
  const char* b = std::getenv("LAGRANGIA_BIN");
  REQUIRE_MESSAGE(b != nullptr, "LAGRANGIA_BIN not set");
  return b;
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / ("lagrangia_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("report serialisation") {
  Json j;
  j["b"] = 0.1;
  j["a"] = "1/3";
  const auto s = lagrangia::report::dump(j, 0);
  CHECK(s == "{\"b\":0.10000000000000001,\"a\":\"1/3\"}");
  CHECK(lagrangia::report::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(lagrangia::report::fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(lagrangia::report::rational(lagrangia::parse_rational("6/4")) == "3/2");
}

TEST_CASE("constants report") {
  const auto r = run("verify-paper --case constants --r 4");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"L_r\": \"27/64\"") != std::string::npos);
  const auto j = Json::parse(r.out);
  CHECK(j["tool"] == "lagrangia");
  CHECK(j["config"]["case"] == "constants");
  CHECK(j["result"]["constants"][0]["c_r"] == "1/32000");
}

TEST_CASE("every check passes in the default ranges") {
  const auto r = run("verify-paper");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["result"]["passed"] == true);
  CHECK(run("verify-paper --case 2 --r 3").status == 1);
}

TEST_CASE("constructions") {
  auto first_line = [](const std::string& s) { return s.substr(0, s.find('\n')); };
  CHECK(first_line(run("construct --what k_rr --r 3").out) == "3 15 11");
  CHECK(first_line(run("construct --what star --a 2 --b 6 --r 4").out) == "4 8 40");
  CHECK(first_line(run("construct --what t5 --n 10").out) == "3 10 80");
  CHECK(first_line(run("construct --what m2 --r 4").out) == "4 8 2");
  CHECK(run("construct --what nothing").status == 2);
}

TEST_CASE("lambda on K_5") {
  const auto file = scratch() / "k5.txt";
  REQUIRE(run("construct --what complete --t 5 --r 3 -o " + file.string()).status == 0);
  const auto r = run("lambda " + file.string() + " --seed 1");
  REQUIRE(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(std::abs(j["result"]["value"].get<double>() - 0.08) < 1e-9);
  CHECK(j["result"]["method"] == "ascent");
  CHECK(j["config"]["restarts"] == "200");
  const auto o = Json::parse(run("lambda " + file.string() + " --orbits 5").out);
  CHECK(o["result"]["exact_value"] == "2/25");
  CHECK(o["result"]["method"] == "orbit-exact");
}

TEST_CASE("identical arguments give identical bytes") {
  const auto file = scratch() / "k5b.txt";
  REQUIRE(run("construct --what complete --t 5 --r 3 -o " + file.string()).status == 0);
  const auto a = run("lambda " + file.string() + " --restarts 20 --seed 4");
  const auto b = run("lambda " + file.string() + " --restarts 20 --seed 4");
  CHECK(a.out == b.out);
  const auto w = write("w.txt", "3 2 2\n1/2 1/4\n1\n1 2\n");
  CHECK(run("wiss-opt " + w.string() + " --restarts 30").out == run("wiss-opt " + w.string() + " --restarts 30").out);
}

TEST_CASE("weights and compression") {
  const auto w = write("w1.txt", "3 1 1\n0.3\n1\n");
  const auto j = Json::parse(run("wiss-weight " + w.string()).out);
  CHECK(j["result"]["exact_total"] == "441/1000");
  const auto c = write("c.txt", "3 3 1\n1/3 1/3 1/6\n2 3\n");
  const auto r = run("wiss-compress " + c.string() + " --i 1 --j 2");
  CHECK(r.status == 0);
  const auto k = Json::parse(r.out);
  CHECK(k["result"]["edges"] == Json::parse("[[1,3]]"));
  CHECK(k["result"]["weight_nondecreasing"] == true);
  const auto o = Json::parse(run("wiss-opt " + write("o.txt", "4 1 1\n1/4\n1\n").string() + " --restarts 20").out);
  CHECK(std::abs(o["result"]["value"].get<double>() - 27.0 / 64) < 1e-9);
}

TEST_CASE("malformed input reports the line") {
  const auto bad = write("bad.txt", "3 2 2\n1/2 1/4\n1\n1 7\n");
  const std::string cmd = bin() + " wiss-weight " + bad.string() + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string err;
  std::array<char, 512> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) err.append(buf.data(), n);
  const int st = pclose(p);
  CHECK(WEXITSTATUS(st) == 2);
  CHECK(err.find("line 4") != std::string::npos);
  CHECK(run("lambda /nonexistent/file").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("lambda").status == 2);
}

TEST_CASE("config file with flag precedence") {
  const auto file = scratch() / "k5c.txt";
  REQUIRE(run("construct --what complete --t 5 --r 3 -o " + file.string()).status == 0);
  const auto cfg = write("run.cfg", "# defaults\nrestarts = 7\nseed=3\nunrelated=1\n");
  const auto j = Json::parse(run("--config " + cfg.string() + " lambda " + file.string() + " --seed 5").out);
  CHECK(j["config"]["restarts"] == "7");
  CHECK(j["config"]["seed"] == "5");
  const auto bad = write("bad.cfg", "restarts 7\n");
  CHECK(run("--config " + bad.string() + " lambda " + file.string()).status == 2);
}

TEST_CASE("enumeration, sweep and budgets") {
  const auto e = run("enumerate --r 2 --max-ground 3 --maximal --uniform");
  CHECK(e.status == 0);
  int lines = 0;
  for (char ch : e.out) lines += ch == '\n';
  CHECK(lines == 3);  // header plus two classes
  CHECK(run("enumerate --r 3 --budget 5").status == 3);
  const auto s = run("sweep --r 3 --max-ground 5");
  CHECK(s.status == 0);
  CHECK(s.out.find("canonical_key,s,principal,value,gap") != std::string::npos);
  const auto sj = Json::parse(run("sweep --r 3 --max-ground 5 --format json").out);
  CHECK(std::abs(sj["result"]["best_overall"]["value"].get<double>() - 0.48) < 1e-9);
  CHECK(run("sweep --r 4 --max-ground 3 --budget 2").status == 3);
  const auto c = Json::parse(run("conjecture --r 3 --t 1 --restarts 40").out);
  CHECK(c["result"]["best_i"] == 2);
}

TEST_CASE("homomorphism check") {
  const auto krr = scratch() / "krr.txt";
  const auto k5 = scratch() / "k5h.txt";
  REQUIRE(run("construct --what k_rr --r 3 -o " + krr.string()).status == 0);
  REQUIRE(run("construct --what complete --t 5 --r 3 -o " + k5.string()).status == 0);
  const auto j = Json::parse(run("hom-check " + krr.string() + " " + k5.string()).out);
  CHECK(j["result"]["outcome"] == "not_found");
  const auto t = run("hom-check " + k5.string() + " " + krr.string() + " --injective --budget 1");
  CHECK((t.status == 3 || t.status == 0));
  fs::remove_all(scratch());
}
