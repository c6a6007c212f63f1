#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relaxedchar/cli.hpp"

using nlohmann::ordered_json;
namespace fs = std::filesystem;

#ifndef RLX_SOURCE_DIR
#define RLX_SOURCE_DIR "."
#endif

namespace {

// cli_run talks to std::cout / std::cerr; swap the buffers for the call.
int run_capture(const std::vector<std::string>& args, std::string* out = nullptr,
                std::string* err = nullptr) {
  std::ostringstream co, ce;
  std::streambuf* ob = std::cout.rdbuf(co.rdbuf());
  std::streambuf* eb = std::cerr.rdbuf(ce.rdbuf());
  int rc = -1;
  try {
    rc = rlx::cli_run(args);
  } catch (...) {
    std::cout.rdbuf(ob);
    std::cerr.rdbuf(eb);
    throw;
  }
  std::cout.rdbuf(ob);
  std::cerr.rdbuf(eb);
  if (out) *out = co.str();
  if (err) *err = ce.str();
  return rc;
}

fs::path temp_root() {
  fs::path p = fs::temp_directory_path() / "relaxedchar-cli-tests";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CwdGuard {
  fs::path old = fs::current_path();
  ~CwdGuard() { fs::current_path(old); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verma string worked example round trips through json") {
  fs::path f = temp_root() / "verma.json";
  int rc = run_capture({"char", "verma", "--rank", "1", "--level", "-1/2", "--weight", "[0]",
                        "--order", "3", "--format", "json", "--out", f.string()});
  CHECK(rc == 0);
  ordered_json o = ordered_json::parse(slurp(f));
  CHECK(o.at("command") == "char verma");
  CHECK(o.at("rank") == 1);
  CHECK(o.at("level") == "-1/2");
  CHECK(o.at("weight") == ordered_json::array({"0"}));
  CHECK(o.at("string") == "limit");
  CHECK(o.at("base") == "1/24");
  CHECK(o.at("coeffs") == ordered_json::array({1, 3, 9, 22}));
  fs::remove(f);
}

TEST_CASE("configuration errors exit with code 2") {
  std::string err;
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "-1/2"}, nullptr, &err) == 2);
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "0/0", "--weight", "[0]"},
                    nullptr, &err) == 2);
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "-1/2", "--weight", "[0,0]"},
                    nullptr, &err) == 2);
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "-1/2", "--weight", "[0]",
                     "--format", "yaml"},
                    nullptr, &err) == 2);
  CHECK(run_capture({"frobnicate"}, nullptr, &err) == 2);
  CHECK(run_capture({"char"}, nullptr, &err) == 2);
}

TEST_CASE("byte-identical output across repeated runs") {
  std::vector<std::string> base{"char",  "simple-relaxed", "--rank", "1",      "--level",
                                "-1/2",  "--weight",       "[-1/2]", "--order", "6",
                                "--format", "json"};
  fs::path f1 = temp_root() / "det1.json", f2 = temp_root() / "det2.json";
  auto a1 = base, a2 = base;
  a1.insert(a1.end(), {"--out", f1.string()});
  a2.insert(a2.end(), {"--out", f2.string()});
  CHECK(run_capture(a1) == 0);
  CHECK(run_capture(a2) == 0);
  CHECK(slurp(f1) == slurp(f2));
  ordered_json o = ordered_json::parse(slurp(f1));
  CHECK(o.at("base") == "-1/12");
  CHECK(o.at("coset") == ordered_json::array({"3/2"}));
  CHECK(o.at("coeffs") == ordered_json::array({1, 2, 5, 10, 20, 36, 65}));
  fs::remove(f1);
  fs::remove(f2);
}

TEST_CASE("csv and table renderings carry the same series") {
  std::string csv;
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "-1/2", "--weight", "[0]",
                     "--order", "3", "--format", "csv"},
                    &csv) == 0);
  CHECK(csv.substr(0, csv.find('\n')) == "n,exponent,coeff");
  CHECK(csv.find("0,1/24,1") != std::string::npos);
  CHECK(csv.find("3,73/24,22") != std::string::npos);

  std::string tab;
  CHECK(run_capture({"char", "verma", "--rank", "1", "--level", "-1/2", "--weight", "[0]",
                     "--order", "3"},
                    &tab) == 0);
  CHECK(tab.find("exponent") != std::string::npos);
  CHECK(tab.find("73/24") != std::string::npos);
  // right alignment: the single-digit coefficient column ends flush
  CHECK(tab.find("--") != std::string::npos);
}

TEST_CASE("gram rank report names both the space and its rank") {
  fs::path f = temp_root() / "rank.json";
  CHECK(run_capture({"oracle", "rank", "--rank", "1", "--level", "-1/2", "--weight", "[0]",
                     "--offset", "[0]", "--depth", "1", "--format", "json", "--out",
                     f.string()}) == 0);
  ordered_json o = ordered_json::parse(slurp(f));
  CHECK(o.at("dim") == 2);
  CHECK(o.at("gram_rank") == 1);
  CHECK(o.at("basis").size() == 2);
  fs::remove(f);
}

TEST_CASE("admissible listing for the rank-2 spectrum") {
  fs::path f = temp_root() / "adm.json";
  CHECK(run_capture({"list", "admissible", "--rank", "2", "--level", "-3/2", "--format",
                     "json", "--out", f.string()}) == 0);
  ordered_json o = ordered_json::parse(slurp(f));
  REQUIRE(o.at("entries").size() == 2);
  CHECK(o.at("entries")[0].at("kind") == "relaxed-simple");
  CHECK(o.at("entries")[0].at("weight") == ordered_json::array({"0", "-3/2"}));
  CHECK(o.at("entries")[1].at("kind") == "ordinary");
  fs::remove(f);
}

TEST_CASE("fixture checking: empty, passing, tampered, missing") {
  fs::path dir = temp_root() / "fx";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CHECK(run_capture({"check", "fixtures", "--dir", dir.string()}) == 0);

  ordered_json fx;
  fx["name"] = "a2 spectrum";
  fx["op"] = "spectrum";
  fx["params"] = ordered_json{{"rank", 2}, {"level", "-3/2"}};
  ordered_json exp;
  exp["count"] = 2;
  exp["entries"] = ordered_json::array(
      {ordered_json{{"kind", "relaxed-simple"}, {"weight", ordered_json::array({"0", "-3/2"})}},
       ordered_json{{"kind", "ordinary"}, {"weight", ordered_json::array({"0", "0"})}}});
  fx["expected"] = exp;
  {
    std::ofstream out(dir / "spectrum.json", std::ios::binary);
    out << fx.dump(2) << "\n";
  }
  std::string msg;
  CHECK(run_capture({"check", "fixtures", "--dir", dir.string()}, &msg) == 0);
  CHECK(msg.find("spectrum") != std::string::npos);

  fx["expected"]["count"] = 3;
  {
    std::ofstream out(dir / "spectrum.json", std::ios::binary);
    out << fx.dump(2) << "\n";
  }
  CHECK(run_capture({"check", "fixtures", "--dir", dir.string()}, &msg) == 1);
  CHECK(msg.find("count") != std::string::npos);  // the divergence is located

  CHECK(run_capture({"check", "fixtures", "--dir", (dir / "nope").string()}) == 2);
  fs::remove_all(dir);
}

TEST_CASE("thread cap variable is validated") {
  std::vector<std::string> cmd{"char", "verma", "--rank", "1", "--level", "-1/2",
                               "--weight", "[0]", "--order", "2", "--format", "json"};
  setenv("RELAXEDCHAR_THREADS", "abc", 1);
  std::string err;
  CHECK(run_capture(cmd, nullptr, &err) == 2);
  CHECK(err.find("RELAXEDCHAR_THREADS") != std::string::npos);
  setenv("RELAXEDCHAR_THREADS", "0", 1);
  CHECK(run_capture(cmd, nullptr, &err) == 2);
  setenv("RELAXEDCHAR_THREADS", "4", 1);
  CHECK(run_capture(cmd) == 0);
  unsetenv("RELAXEDCHAR_THREADS");
  CHECK(run_capture(cmd) == 0);
}

TEST_CASE("every help screen shows an example and every example runs") {
  std::vector<std::vector<std::string>> screens{
      {},
      {"char"},
      {"check"},
      {"kl"},
      {"oracle"},
      {"list"},
      {"char", "verma"},
      {"char", "parabolic-verma"},
      {"char", "relaxed"},
      {"char", "simple-relaxed"},
      {"char", "w-ord"},
      {"check", "identity"},
      {"check", "bgg"},
      {"check", "exponents"},
      {"check", "modular-span"},
      {"check", "oracle"},
      {"check", "fixtures"},
      {"kl", "table"},
      {"oracle", "rank"},
      {"oracle", "string-limit"},
      {"list", "admissible"},
  };
  std::set<std::string> examples;
  for (auto args : screens) {
    args.push_back("--help");
    std::string out;
    CHECK(run_capture(args, &out) == 0);
    const std::string tag = "example: relaxedchar ";
    size_t pos = out.find(tag);
    CHECK(pos != std::string::npos);
    if (pos == std::string::npos) continue;
    size_t end = out.find('\n', pos);
    examples.insert(out.substr(pos + tag.size(), end - pos - tag.size()));
  }
  // run each distinct example from the repository root so that relative
  // paths in the examples resolve
  CwdGuard guard;
  fs::current_path(fs::path(RLX_SOURCE_DIR));
  for (const std::string& ex : examples) {
    CAPTURE(ex);
    std::vector<std::string> args;
    std::istringstream ss(ex);
    std::string tok;
    while (ss >> tok) args.push_back(tok);
    std::string out;
    CHECK(run_capture(args, &out) == 0);
  }
}

}  // TEST_SUITE
