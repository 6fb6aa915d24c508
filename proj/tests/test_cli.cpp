#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "macdonald/cli.hpp"
#include "macdonald/macdonald.hpp"
#include "macdonald/report.hpp"

using namespace mac;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int s = run_cli(args, out, err);
  return {s, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  auto norm = run({"norm", "--n", "2", "--lambda", "0,2", "--max-q", "4"});
  CHECK(norm.status == 0);
  CHECK(norm.out == "1 + q + 2*q^2 + 2*q^3 + 3*q^4\n");

  auto e = run({"macdonald", "--n", "2", "--lambda", "0,0", "--spec", "t0"});
  CHECK(e.status == 0);
  CHECK(e.out == "1\n");

  auto e01 = run({"macdonald", "--n", "2", "--lambda", "0,1", "--spec", "t0"});
  CHECK(e01.out == "x1 + x2\n");

  auto v = run({"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "4", "--max-q", "6"});
  CHECK(v.status == 0);
  CHECK(v.out.find("outcome: pass") != std::string::npos);

  auto a = run({"appendix", "--min", "-2", "--max", "2", "--max-q", "4"});
  CHECK(a.status == 0);

  auto c = run({"char", "--kind", "T", "--n", "2", "--lambda", "0,0", "--max-deg", "2", "--max-q", "2"});
  CHECK(c.status == 0);
  CHECK(c.out == "1: 1\n");
}

TEST_CASE("norm variants agree") {
  auto q = run({"norm", "--n", "3", "--lambda", "2,0,1", "--max-q", "6"});
  auto alt = run({"norm", "--n", "3", "--lambda", "2,0,1", "--max-q", "6", "--alt"});
  CHECK(q.status == 0);
  CHECK(q.out == alt.out);
  auto qt = run({"norm", "--n", "2", "--lambda", "1,0", "--qt"});
  CHECK(qt.status == 0);
  CHECK(qt.out.find("t") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"norm", "--n", "2", "--lambda", "0,2", "--max-q", "4", "--bogus"},
      {"norm", "--n", "2", "--lambda", "0,x", "--max-q", "4"},
      {"norm", "--n", "2", "--lambda", "0,1,2", "--max-q", "4"},
      {"norm", "--n", "2", "--lambda", "0,-1", "--max-q", "4"},
      {"norm", "--n", "2", "--lambda", "0,2", "--qt", "--max-q", "4"},
      {"norm", "--n", "2", "--lambda", "0,2"},
      {"norm", "--n", "0", "--lambda", "", "--max-q", "2"},
      {"macdonald", "--n", "2", "--lambda", "1,0", "--spec", "qt", "--max-q", "3"},
      {"macdonald", "--n", "2", "--lambda", "1,0", "--spec", "nope"},
      {"verify", "--identity", "gl-qt", "--n", "2", "--max-deg", "2", "--max-q", "3"},
      {"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "2"},
      {"verify", "--identity", "sl", "--n", "1", "--max-deg", "2", "--max-q", "2"},
      {"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "-1", "--max-q", "2"},
      {"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "2", "--max-q", "2", "--jobs", "0"},
      {"char", "--kind", "Q", "--n", "2", "--lambda", "0,0", "--max-deg", "1", "--max-q", "1"},
      {"char", "--kind", "D", "--n", "2", "--lambda", "-1,0", "--max-deg", "1", "--max-q", "1"},
      {"appendix", "--min", "2", "--max", "1", "--max-q", "3"},
  };
  for (const auto& args : bad) {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    CAPTURE(joined);
    auto r = run(args);
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("output does not depend on jobs") {
  std::vector<std::string> base = {"verify", "--identity", "gl-t0", "--n", "2", "--max-deg", "4", "--max-q", "6"};
  auto one = base, many = base;
  one.insert(one.end(), {"--jobs", "1"});
  many.insert(many.end(), {"--jobs", "8"});
  for (std::string fmt : {"text", "json"}) {
    auto a = one, b = many;
    a.insert(a.end(), {"--format", fmt});
    b.insert(b.end(), {"--format", fmt});
    auto ra = run(a), rb = run(b);
    CHECK(ra.status == 0);
    CHECK(ra.out == rb.out);
  }
}

TEST_CASE("json output round-trips") {
  std::vector<std::vector<std::string>> cmds = {
      {"macdonald", "--n", "3", "--lambda", "0,2,1", "--format", "json"},
      {"macdonald", "--n", "2", "--lambda", "0,3", "--spec", "qinv-tinf", "--max-q", "5", "--format", "json"},
      {"norm", "--n", "2", "--lambda", "1,2", "--qt", "--format", "json"},
      {"char", "--kind", "Uo", "--n", "3", "--lambda", "1,0,1", "--max-deg", "2", "--max-q", "3", "--sl",
       "--format", "json"},
      {"verify", "--identity", "iwahori-char", "--n", "2", "--max-deg", "3", "--max-q", "3", "--format", "json"},
      {"verify", "--identity", "sl2-appendix", "--n", "2", "--max-deg", "3", "--max-q", "5", "--format", "json"},
  };
  for (const auto& c : cmds) {
    auto r = run(c);
    CAPTURE(r.out);
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j.contains("variant"));
    CHECK(j.contains("policy"));
  }
  auto v = run(cmds[4]);
  auto rep = VerificationReport::from_json(nlohmann::json::parse(v.out));
  CHECK(rep.to_json(false).dump(2) + "\n" == v.out);
}

TEST_CASE("memo cache persists and detects corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "macdonald_cli_cache_test";
  fs::remove_all(dir);
  std::string dirs = dir.string();

  clear_memo();
  auto fresh = macdonald_E({2, 0, 1});
  REQUIRE(attach_cache(dirs));
  clear_memo();
  CHECK(macdonald_E({2, 0, 1}) == fresh);
  CHECK(macdonald_E({1, 1, 2}) == macdonald_E_fillings({1, 1, 2}));
  CHECK_FALSE(fs::is_empty(dir));

  CHECK(attach_cache(dirs));
  CHECK(macdonald_E({2, 0, 1}) == fresh);

  // tamper with every entry of maximal size: the startup probe is one of them
  int best = -1;
  std::vector<std::pair<int, fs::path>> entries;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    auto j = nlohmann::json::parse(in);
    int s = 0;
    for (int x : j["lambda"]) s += x;
    best = std::max(best, s);
    entries.emplace_back(s, entry.path());
  }
  for (const auto& [s, path] : entries) {
    if (s != best) continue;
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    in.close();
    j["den"] = nlohmann::json::array({nlohmann::json::array({"7"})});
    std::ofstream out(path);
    out << j.dump();
  }
  CHECK_FALSE(attach_cache(dirs));
  CHECK(macdonald_E({2, 0, 1}) == fresh);
  fs::remove_all(dir);
  clear_memo();
}
