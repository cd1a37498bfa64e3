#include "fixtures.hpp"
#include "pinned.hpp"

#include "incidence/cli.hpp"
#include "incidence/matrix_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using incidence::cli::run;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("incidence-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check exit statuses") {
  CHECK(call({"check", "--plane", "pg2", "--statement", "D", "--mode", "exhaustive"}).status == 0);
  CHECK(call({"check", "--plane", "pg3", "--statement", "LP"}).status == 0);
  CHECK(call({"check", "--plane", "hall9", "--statement", "P", "--mode", "exhaustive", "--first"}).status == 1);
  const auto sampled = call({"check", "--plane", "pg3", "--statement", "D", "--mode", "sampled", "--budget", "500"});
  CHECK(sampled.status == 0);
  CHECK(sampled.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("counterexample on Moulton") {
  const auto r = call({"counterexample", "--plane", "moulton", "--statement", "sPP", "--seed", "1", "--budget", "1000000",
                       "--format", "kv"});
  CHECK(r.status == 1);
  CHECK(r.out == "found=true\n" + pinned::kMoultonSPP);
  const auto none = call({"counterexample", "--plane", "pg3", "--statement", "D", "--budget", "2000"});
  CHECK(none.status == 0);
}

TEST_CASE("infinite planes refuse exhaustive mode") {
  const auto r = call({"check", "--plane", "moulton", "--statement", "D", "--mode", "exhaustive"});
  CHECK(r.status == 2);
  CHECK(r.err.find("exhaustive mode requires a finite plane") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"check", "--plane", "pg3"}).status == 2);
  CHECK(call({"check", "--plane", "pg3", "--statement", "XYZ"}).status == 2);
  CHECK(call({"check", "--plane", "pg6", "--statement", "D"}).status == 2);
  CHECK(call({"check", "--plane", "pg3", "--statement", "D", "--mode", "fast"}).status == 2);
  CHECK(call({"--jobs", "0", "scan", "--plane", "pg2"}).status == 2);
  CHECK(call({"chain", "--triangle", "0,0;1,1;2,2", "--target", "1,0"}).status == 2);
  CHECK(call({"check", "--plane", "moulton", "--statement", "D", "--budget", "0"}).status == 2);
}

TEST_CASE("kv output does not depend on the job count") {
  const std::vector<std::vector<std::string>> runs = {
      {"check", "--plane", "moulton", "--statement", "D", "--seed", "3", "--budget", "20000"},
      {"check", "--plane", "pg4", "--statement", "HD", "--mode", "exhaustive"},
      {"scan", "--plane", "hall9", "--budget", "5000"},
  };
  for (const auto& base : runs) {
    auto one = base, eight = base;
    for (auto* v : {&one, &eight}) v->insert(v->end(), {"--format", "kv"});
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    const auto a = call(one), b = call(eight);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("export, dualize and validate") {
  TempDir dir;
  const auto pg3 = dir.file("pg3.txt");
  REQUIRE(call({"export", "--plane", "pg3", "--out", pg3}).status == 0);
  CHECK(call({"plane", "validate", "--in", pg3}).status == 0);

  const auto dual = dir.file("dual.txt");
  REQUIRE(call({"dualize", "--in", pg3, "--out", dual}).status == 0);
  CHECK(call({"plane", "validate", "--in", dual}).status == 0);
  const auto back = dir.file("back.txt");
  REQUIRE(call({"dualize", "--in", dual, "--out", back}).status == 0);
  CHECK(slurp(back) == slurp(pg3));

  const auto bad = dir.file("bad.txt");
  {
    std::ofstream(bad) << fixtures::kFanoText.substr(0, fixtures::kFanoText.size() / 2);
  }
  CHECK(call({"plane", "validate", "--in", bad}).status == 2);

  const auto doubled = dir.file("doubled.txt");
  incidence::write_incidence_file(doubled, fixtures::doubled_line());
  const auto v = call({"plane", "validate", "--in", doubled, "--format", "kv"});
  CHECK(v.status == 1);
  CHECK(v.out.find("pi1_ok=false") != std::string::npos);

  REQUIRE(call({"plane", "build", "hall9", "--out", dir.file("hall9.txt")}).status == 0);
  CHECK(call({"plane", "validate", "--in", dir.file("hall9.txt")}).status == 0);
  CHECK(call({"check", "--plane", "file:" + dir.file("hall9.txt"), "--statement", "D", "--budget", "2000"}).status == 1);

  CHECK(call({"plane", "validate", "--in", dir.file("missing.txt")}).status == 2);
}

TEST_CASE("chain command") {
  const auto r = call({"chain", "--triangle", "0,0;2,0;0,2", "--target", "-5,-5", "--format", "kv"});
  CHECK(r.status == 0);
  CHECK(r.out.find("length=5\n") != std::string::npos);
  CHECK(r.out.find("bound=12\n") != std::string::npos);
}

TEST_CASE("implications command") {
  const auto r = call({"implications", "--planes", "pg2,pg3", "--format", "kv"});
  CHECK(r.status == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
}
