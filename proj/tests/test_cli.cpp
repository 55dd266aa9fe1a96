#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace hurwitz;
using namespace hurwitz::cli;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
};

std::string strip_runtime(std::string text) {
  auto j = json::parse(text);
  j.erase("runtime_ms");
  return j.dump();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse_partition") {
    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("1,3") == Partition{3, 1});
    for (const char* bad : {"3,0", "3,-1", "", "2,,1", "a", "2, 1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_partition(bad), UsageError);
    }
    try {
      parse_partition("3,0");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("'0'") != std::string::npos);
    }
  }

  TEST_CASE("partition strings round trip") {
    for (const auto& a : partitions_up_to(8)) {
      if (a.weight() == 0) continue;
      CHECK(parse_partition(a.str()) == a);
    }
  }

  TEST_CASE("worked command outputs") {
    auto r = call({"hw", "min", "--d", "3", "--alpha", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"k":1,"h":"1"})"));

    r = call({"hw", "count", "--n", "3", "--d", "3", "--k", "1", "--alpha", "2,1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out) == json::parse(R"({"count":"0"})"));

    r = call({"verify", "gj-pde", "--N", "3"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("id") == "gj_pde");
    CHECK(j.at("residual_terms").empty());
    CHECK(j.contains("runtime_ms"));
    CHECK(j.contains("budget"));
  }

  TEST_CASE("other commands") {
    auto r = call({"hw", "min", "--d", "3", "--alpha", "2,1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("k").is_null());

    r = call({"hw", "count", "--n", "3", "--d", "2", "--k", "2", "--alpha", "3", "--transitive"});
    CHECK(json::parse(r.out).at("count") == "3");

    r = call({"wop", "coeff", "--d", "2", "--B", "1,1", "--A", "2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("c") == "1/2");

    r = call({"wop", "apply", "--d", "3", "--alpha", "1,1,1"});
    CHECK(r.code == 0);
    const auto terms = json::parse(r.out).at("terms");
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].at("coeff") == "2");

    r = call({"wop", "apply", "--d", "3", "--alpha", "2,1", "--method", "explicit"});
    CHECK(r.code == 0);

    r = call({"verify", "thm55", "--N", "3", "--literal"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("literal").at("pass") == false);

    r = call({"verify", "conjecture", "--d", "4", "--N", "4"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("experimental") == true);
  }

  TEST_CASE("hw table as csv") {
    const auto r = call({"hw", "table", "--d", "3", "--nmax", "3", "--format", "csv"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,alpha,mu,h");
    std::string row;
    int rows = 0;
    while (std::getline(lines, row)) rows += !row.empty();
    CHECK(rows > 0);
  }

  TEST_CASE("wop table written to a file") {
    const auto path = std::filesystem::temp_directory_path() / "hurwitz_test_table.json";
    const auto r = call({"wop", "table", "--d", "2", "--max-weight", "3", "--out", path.string()});
    CHECK(r.code == 0);
    std::ifstream in(path);
    const auto j = json::parse(in);
    CHECK(j.at("terms").size() == 4);
    std::filesystem::remove(path);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(call({"hw", "min", "--d", "3"}).code == 2);
    CHECK(call({"hw", "min", "--d", "3", "--alpha", "3,0"}).code == 2);
    CHECK(call({"hw", "count", "--n", "4", "--d", "3", "--k", "1", "--alpha", "2,1"}).code == 2);
    CHECK(call({"nope"}).code == 2);
    CHECK(call({"wop", "apply", "--d", "3", "--alpha", "2", "--method", "magic"}).code == 2);
    CHECK(call({"--config", "/nonexistent/budget.json", "hw", "min", "--d", "3", "--alpha", "3"}).code == 2);
  }

  TEST_CASE("budget errors are machine readable") {
    const auto r = call({"hw", "count", "--n", "40", "--d", "3", "--k", "1", "--alpha", "40"});
    CHECK(r.code == 2);
    const auto j = json::parse(r.out);
    CHECK(j.at("error") == "budget");
    CHECK(j.at("cap") == "max_n");
    CHECK(j.at("value") == 40);
  }

  TEST_CASE("environment overrides") {
    {
      ScopedEnv env("HURWITZ_BUDGET", "max_N=2");
      const auto r = call({"verify", "gj-pde", "--N", "3"});
      CHECK(r.code == 2);
      CHECK(json::parse(r.out).at("cap") == "max_N");
    }
    CHECK(call({"verify", "gj-pde", "--N", "3"}).code == 0);
    Budget b;
    apply_overrides(b, "max_n=5,enumeration_limit=7");
    CHECK(b.max_n == 5);
    CHECK(b.enumeration_limit == 7);
    CHECK_THROWS_AS(apply_overrides(b, "bogus=1"), UsageError);
    CHECK_THROWS_AS(apply_overrides(b, "max_n"), UsageError);
  }

  TEST_CASE("config files") {
    const auto path = std::filesystem::temp_directory_path() / "hurwitz_test_budget.json";
    {
      std::ofstream f(path);
      f << R"({"max_n": 3})";
    }
    const auto b = load_budget_file(path.string());
    CHECK(b.max_n == 3);
    CHECK(b.max_k == Budget{}.max_k);
    const auto r = call({"--config", path.string(), "hw", "min", "--d", "3", "--alpha", "2,2"});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out).at("cap") == "max_n");
    std::filesystem::remove(path);
  }

  TEST_CASE("outputs are deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"hw", "table", "--d", "3", "--nmax", "5"},
        {"wop", "apply", "--d", "3", "--alpha", "3,2"},
        {"verify", "thm53", "--N", "4"},
    };
    for (const auto& cmd : commands) {
      const auto a = call(cmd);
      const auto b = call(cmd);
      CHECK(a.code == b.code);
      if (cmd[0] == "verify") {
        CHECK(strip_runtime(a.out) == strip_runtime(b.out));
      } else {
        CHECK(a.out == b.out);
      }
    }
  }
}
