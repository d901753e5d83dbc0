#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "pstab/config.hpp"
#include "pstab/errors.hpp"
#include "pstab/spec_io.hpp"
#include "pstab_cli/app.hpp"
#include "pstab_cli/corpus.hpp"

using namespace pstab;
using cli::Json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PSTAB_TEST_DATA_DIR) + "/" + name; }

fs::path scratch_dir() {
  fs::path d = fs::temp_directory_path() / ("pstab_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("construct round trip") {
  const fs::path dir = scratch_dir();
  for (const std::string recipe : {"qdp:p=3", "tilde_qdp:p=3,q=13", "classical:family=PSL,n=3,q=3", "symmetric:n=5"}) {
    CAPTURE(recipe);
    const Run r = run({"construct", recipe});
    REQUIRE(r.code == cli::kOk);
    const GroupPtr a = load_group(parse_group_spec(r.out));

    const fs::path file = dir / "g.json";
    const Run w = run({"construct", recipe, "--out", file.string()});
    REQUIRE(w.code == cli::kOk);
    CHECK(w.json()["command"] == "construct");
    const GroupPtr b = load_group(parse_group_spec(read_text_file(file.string())));
    REQUIRE(a->order() == b->order());
    for (Idx i = 0; i < a->order(); ++i) CHECK(a->element(i) == b->element(i));

    // a permutation document of the built group reproduces it too
    const GroupPtr c = load_group(parse_group_spec(write_group_spec(perm_spec_of(*a, "copy"))));
    REQUIRE(c->order() == a->order());
    for (Idx i = 0; i < a->order(); ++i) CHECK(c->element(i) == a->element(i));
  }
  fs::remove_all(dir);
}

TEST_CASE("analyze") {
  const Run r = run({"analyze", "--recipe", "qdp:p=3", "--p", "3", "--check", "p-stable"});
  REQUIRE(r.code == cli::kOk);
  const Json j = r.json();
  CHECK(j["results"]["p-stable"]["stable"] == false);
  CHECK(j["results"]["p-stable"]["witness"]["verified"] == true);
  CHECK(j["input"]["order"] == 216);
  CHECK_FALSE(r.err.empty());

  const Run g = run({"analyze", "--group", data("e27.json"), "--p", "3", "--check", "section-p-stable"});
  REQUIRE(g.code == cli::kOk);
  CHECK(g.json()["results"]["section-p-stable"]["stable"] == true);
}

TEST_CASE("fusion") {
  const Run r = run({"fusion", "--recipe", "qdp:p=3", "--p", "3", "--report"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("\"soluble\"") != std::string::npos);
}

TEST_CASE("classify") {
  const Run r = run({"classify", "--family", "PSL", "--n", "3", "--q", "4", "--p", "3"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.json()["verdict"]["sylow_abelian"] == true);

  const Run he = run({"classify", "--family", "sporadic", "--name", "He", "--p", "3"});
  REQUIRE(he.code == cli::kOk);
  CHECK(he.json()["verdict"]["involves_qdp"] == true);

  const Run x = run({"classify", "--family", "PSL", "--n", "3", "--q", "4", "--p", "3", "--crosscheck"});
  REQUIRE(x.code == cli::kOk);
  CHECK(x.out.find("\"agree\": true") != std::string::npos);

  const Run s = run({"classify", "--selfcheck", "--fuzz", "200"});
  CHECK(s.code == cli::kOk);
}

TEST_CASE("exit codes") {
  CHECK(run({"classify", "--family", "sporadic", "--name", "J5", "--p", "3"}).code == cli::kBadParameters);
  CHECK(run({"classify", "--family", "PSL", "--n", "2", "--q", "3", "--p", "3"}).code == cli::kBadParameters);
  CHECK(run({"construct", "qdp:p=2"}).code == cli::kBadParameters);
  CHECK(run({"analyze", "--group", data("does_not_exist.json"), "--p", "3"}).code == cli::kBadParameters);
  CHECK(run({"nonsense"}).code == cli::kBadParameters);

  const Limits saved = limits();
  const Run cap = run({"--order-cap", "100", "analyze", "--recipe", "qdp:p=3", "--p", "3"});
  set_limits(saved);
  CHECK(cap.code == cli::kCapExceeded);
  CHECK(cap.json().contains("error"));

  const Run bad_json = run({"corpus", "--suite", data("e27.json")});
  CHECK(bad_json.code == cli::kBadParameters);
}

TEST_CASE("corpus suites") {
  const Run wrong = run({"corpus", "--suite", data("wrong_suite.json")});
  CHECK(wrong.code == cli::kMismatch);
  CHECK(wrong.json()["summary"]["failed"] == 1);

  const Run empty = run({"corpus", "--suite", data("empty_suite.json")});
  CHECK(empty.code == cli::kOk);
  CHECK(empty.json()["summary"]["total"] == 0);

  const Run small = run({"corpus", "--suite", data("small_suite.json")});
  CHECK(small.code == cli::kOk);
  CHECK(small.json()["summary"]["passed"] == 4);
}

TEST_CASE("suite parsing") {
  CHECK_THROWS_AS(cli::parse_suite(R"({"format":1,"name":"x","entries":[{"name":"a","recipe":{"kind":"qdp","p":3},
    "p":3,"expected":{"order":{"value":216,"basis":"guess"}}}]})",
                                   "."),
                  ParseError);
  CHECK_THROWS_AS(cli::parse_suite(R"({"format":1,"name":"x","entries":[{"name":"a","recipe":{"kind":"qdp","p":3},
    "p":3,"expected":{"colour":{"value":1,"basis":"trivial"}}}]})",
                                   "."),
                  ParseError);
  const cli::Suite s = cli::load_suite(cli::resolve_suite_path("default"));
  CHECK(s.entries.size() >= 15);
  for (const auto& e : s.entries)
    for (const auto& x : e.expected)
      CHECK((x.basis == "published" || x.basis == "derived" || x.basis == "trivial"));
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  const std::string suite = data("small_suite.json");
  const Run a = run({"corpus", "--suite", suite, "--threads", "1"});
  const Run b = run({"corpus", "--suite", suite, "--threads", "1"});
  const Run c = run({"corpus", "--suite", suite, "--threads", "3"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const Run x = run({"analyze", "--recipe", "tilde_qdp:p=3,q=13", "--p", "3"});
  const Run y = run({"analyze", "--recipe", "tilde_qdp:p=3,q=13", "--p", "3"});
  CHECK(x.out == y.out);
}

TEST_CASE("configuration precedence") {
  const Limits saved = limits();
  ::setenv("ORDER_CAP", "1234", 1);
  CHECK(Limits::from_env().order_cap == 1234);
  const Run env = run({"classify", "--family", "PSL", "--n", "3", "--q", "4", "--p", "3"});
  CHECK(env.json()["caps"]["order_cap"] == 1234);
  const Run flag = run({"--order-cap", "999", "classify", "--family", "PSL", "--n", "3", "--q", "4", "--p", "3"});
  CHECK(flag.json()["caps"]["order_cap"] == 999);
  ::unsetenv("ORDER_CAP");
  const Run dflt = run({"classify", "--family", "PSL", "--n", "3", "--q", "4", "--p", "3"});
  CHECK(dflt.json()["caps"]["order_cap"] == 200000);
  set_limits(saved);
}
