#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <string>

#include "chainrr/json_io.hpp"
#include "chainrr/literals.hpp"
#include "chainrr/verify.hpp"
#include "helpers.hpp"

using namespace chainrr;
using chainrr::testing::ctx;
using chainrr::testing::map;

TEST_SUITE_BEGIN("interfaces");

TEST_CASE("context and image literals") {
  auto c = parse_chain_context("n=4 Y=2,3");
  CHECK(c.n() == 4);
  CHECK(c.y() == std::vector<int>{2, 3});
  CHECK(format_chain_context(c) == "n=4 Y=2,3");

  auto t = parse_transformation(c, "[3,2,2,3]");
  CHECK(t.images() == std::vector<int>{3, 2, 2, 3});
  CHECK(format_transformation(t) == "[3,2,2,3]");

  CHECK_THROWS_AS(parse_chain_context("m=4"), Error);
  CHECK_THROWS_AS(parse_transformation(c, "3,2,2,3"), Error);
  CHECK_THROWS_AS(parse_transformation(c, "[3,2,x,3]"), Error);
}

TEST_CASE("partition literals") {
  auto p = parse_partition(4, "1,4|2,3");
  CHECK(p == Partition::from_blocks(4, {{1, 4}, {2, 3}}));
  CHECK(format_partition(p) == "1,4|2,3");
  CHECK(format_partition(parse_partition(4, "2,3|1,4")) == "1,4|2,3");
  CHECK_THROWS_AS(parse_partition(4, "1,4|2"), Error);
  CHECK_THROWS_AS(parse_partition(4, "1,4|2,3,4"), Error);
}

TEST_CASE("json forms are schema-stable") {
  auto c = ctx(4, {2, 3});
  nlohmann::json jc = c;
  CHECK(jc == nlohmann::json({{"n", 4}, {"y", {2, 3}}}));

  nlohmann::json jt = map(c, {2, 3, 2, 2});
  CHECK(jt["images"] == nlohmann::json({2, 3, 2, 2}));
  CHECK(jt["n"] == 4);
  CHECK(jt["y"] == nlohmann::json({2, 3}));

  nlohmann::json jp = parse_partition(4, "1,4|2,3");
  CHECK(jp == nlohmann::json({{1, 4}, {2, 3}}));

  nlohmann::json jg = canonical_a(c);
  CHECK(jg["ctx"]["n"] == 4);
  REQUIRE(jg["elements"].size() == 3);
  CHECK(jg["elements"][0]["label"] == "eta");
  CHECK(jg["elements"][0]["images"] == nlohmann::json({2, 3, 2, 2}));

  auto report = check_min_relgen_op_mod_o(c, canonical_a(c));
  nlohmann::json jr = report;
  CHECK(jr["verdict"] == true);
  CHECK(jr["failed_condition"].is_null());
  CHECK(jr["witness"].is_null());

  auto word = factor_op_over_o(map(c, {3, 2, 2, 3}));
  nlohmann::json jw = word;
  REQUIRE(jw.size() == 2);
  CHECK(jw[0]["tag"] == "GeneratorA");
  CHECK(jw[0]["images"] == nlohmann::json({2, 3, 3, 2}));
  CHECK_FALSE(jw[0].contains("power"));
  CHECK(jw[1]["tag"] == "EtaPower");
  CHECK(jw[1]["power"] == 1);
}

TEST_CASE("json output is deterministic for fixed inputs") {
  auto c = ctx(4, {2, 3});
  nlohmann::json first = canonical_a(c);
  nlohmann::json second = canonical_a(c);
  CHECK(first.dump() == second.dump());
}

TEST_CASE("verification report rows and formats") {
  YFilter filter;
  filter.mode = YFilter::Mode::Exact;
  filter.values = {2, 3};
  auto report = run_verify(VerifyScope::Thm5, 4, filter);
  REQUIRE(!report.rows.empty());
  CHECK(report.all_pass());
  for (const auto& row : report.rows) {
    CHECK(!row.check.empty());
    CHECK(!row.method.empty());
    CHECK((row.status == "PASS" || row.status == "FAIL" || row.status == "SKIPPED"));
  }

  auto csv = report_to_csv(report);
  CHECK(csv.rfind("n,m,y,check,formula_value,brute_value,universe_size,millis,status\n", 0) == 0);
  auto lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(static_cast<std::size_t>(lines) == report.rows.size() + 1);

  nlohmann::json j = report;
  CHECK(j["scope"] == "thm5");
  CHECK(j["all_pass"] == true);
  CHECK(j["rows"].size() == report.rows.size());
}

TEST_CASE("erratum rows surface the nonempty family at m=2") {
  YFilter filter;
  auto report = run_verify(VerifyScope::Thm11, 4, filter);
  bool found = false;
  for (const auto& row : report.rows) {
    if (row.check == "thm11:erratum-R2" && row.n == 4) {
      found = true;
      CHECK(row.status == "PASS");
      CHECK(row.brute_value >= 1);
      CHECK(row.note.find("erratum") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("y filters") {
  YFilter contains;
  contains.mode = YFilter::Mode::Contains;
  contains.values = {1, 0};  // 1 and the chain maximum
  CHECK(contains.admits(4, {1, 4}));
  CHECK(contains.admits(4, {1, 2, 4}));
  CHECK_FALSE(contains.admits(4, {1, 3}));

  YFilter exact;
  exact.mode = YFilter::Mode::Exact;
  exact.values = {2, 4};
  CHECK(exact.admits(5, {2, 4}));
  CHECK_FALSE(exact.admits(5, {2, 3}));
}

TEST_CASE("cli executable honors the exit-code contract") {
  const char* cli = std::getenv("CHAINRR_CLI");
  if (cli == nullptr) {
    return;  // only run under ctest, where the path is exported
  }
  std::string base = "\"" + std::string(cli) + "\"";
  auto run = [&](const std::string& args) {
    int raw = std::system((base + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(run("enumerate r --n 4 --l 2 --format count") == 0);
  CHECK(run("formulas --n 5 --y 2,4") == 0);
  CHECK(run("factor over-o --ctx \"n=4 Y=2,3\" --map \"[3,2,2,3]\"") == 0);
  // over-o on a map outside the orientation-preserving semigroup: a failure
  CHECK(run("factor over-o --ctx \"n=4 Y=2,3\" --map \"[3,2,3,2]\"") == 1);
  // parse problems: usage error
  CHECK(run("factor over-o --ctx \"n=4 Y=2,3\" --map \"3,2,3,2\"") == 2);
  CHECK(run("enumerate p --n 4 --l 1 --format count") == 2);
  CHECK(run("verify thm5 --n-max 8 --y-all") == 2);
  CHECK(run("nonsense") == 2);
}

TEST_SUITE_END();
