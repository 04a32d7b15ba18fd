#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kplab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = kplab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(KPLAB_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("schur table") {
  auto r = invoke({"schur", "--max-size", "4", "--family", "a"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 13);
  CHECK(r.out.rfind("partition,size,value", 0) == 0);
  CHECK(r.out.find("\"(2,1)\",3,1/3,1/3") != std::string::npos);
}

TEST_CASE("tau table") {
  auto r = invoke({"tau", "--family", "a", "--x", "2", "--Q", "3", "--D", "2", "--K", "2", "--n-cut", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tau,t1,3") != std::string::npos);
  CHECK(r.out.find("w1,") != std::string::npos);
}

TEST_CASE("verify emits a passing JSON report") {
  auto r = invoke({"verify", "case", "--case", "c", "--f", "1", "--q", "1/16"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"id\": \"case/c/tau=1\"") != std::string::npos);
  CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(r.out.find("\"q\": \"1/16\"") != std::string::npos);
}

TEST_CASE("identical config and seed give identical bytes") {
  std::vector<std::string> args{"verify", "case", "--case", "b", "--seed", "9", "--D", "4", "--K", "4"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
  CHECK(invoke({"verify", "bogus"}).code == 2);
  CHECK(invoke({"verify", "case", "--x", "abc"}).code == 2);
  CHECK(invoke({"verify", "case", "--f", "1/2"}).code == 2);
  CHECK(invoke({"verify", "case", "--case", "c", "--q", "2/9"}).code == 2);
  CHECK(invoke({"verify", "scaling"}).code == 2);
  auto r = invoke({"verify", "case", "--nope"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("inconclusive warns and --strict turns it into a failure") {
  auto loose = invoke({"verify", "lax", "--D", "0", "--K", "1", "--k", "1"});
  CHECK(loose.code == 0);
  CHECK(loose.err.find("inconclusive") != std::string::npos);
  CHECK(invoke({"verify", "lax", "--D", "0", "--K", "1", "--k", "1", "--strict"}).code == 1);
}

TEST_CASE("config file with the same keys") {
  auto good = temp_file("good.toml", "case = \"c\"\nq = \"1/16\"\nf = \"2\"\nN_cut = 6\n");
  auto r = invoke({"verify", "case", "--config", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("case/c/tau=2") != std::string::npos);
  // the command line wins over the file
  auto over = invoke({"verify", "case", "--config", good, "--f", "1"});
  CHECK(over.out.find("case/c/tau=1") != std::string::npos);
  auto bad = temp_file("bad.toml", "case = \"c\"\nspeed = 3\n");
  auto rb = invoke({"verify", "case", "--config", bad});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("speed") != std::string::npos);
}

TEST_CASE("report merges files") {
  auto a = invoke({"verify", "case", "--case", "a", "--D", "4", "--K", "4"});
  auto b = invoke({"verify", "init", "--case", "a", "--D", "4", "--K", "4"});
  auto fa = temp_file("a.json", a.out);
  auto fb = temp_file("b.json", b.out);
  auto r = invoke({"report", fb, fa});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(r.out.find("case/a") < r.out.find("init/a"));
  auto junk = temp_file("junk.json", "{");
  CHECK(invoke({"report", junk}).code == 2);
}

TEST_CASE("--out writes the report to a file") {
  std::string path = std::string(KPLAB_TEST_TMP) + "/out.json";
  std::remove(path.c_str());
  auto r = invoke({"verify", "case", "--case", "a", "--D", "4", "--K", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(f.good());
}
