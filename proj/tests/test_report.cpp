#include "sncode/error.hpp"
#include "sncode/report.hpp"

#include "doctest.h"

#include <cstdlib>

using namespace sncode;
using namespace sncode::report;

namespace {

RunConfig config() { return RunConfig{}; }

template <typename Record>
void check_json_round_trip(const Record& rec) {
  std::string text = render(rec, Format::json);
  CHECK(nlohmann::ordered_json::parse(text).dump(2) + "\n" == text);
  CHECK(nlohmann::ordered_json::parse(text)["schema"] == 1);
}

} // namespace

TEST_CASE("classify records") {
  auto code = run_classify(6, 2, "3+2+1", config());
  CHECK(code.theorem);
  CHECK(code.characters);
  CHECK(code.r == 8);
  CHECK(code.j == 1);
  CHECK_FALSE(code.failing_m);
  CHECK(code.consistent());

  auto fixed = run_classify(6, 2, "6", config());
  CHECK_FALSE(fixed.theorem);
  CHECK_FALSE(fixed.characters);
  CHECK(fixed.failing_m == 1);
  CHECK_FALSE(fixed.r);

  auto two_twos = run_classify(5, 2, "2+2+1", config());
  CHECK_FALSE(two_twos.theorem);
  CHECK_FALSE(two_twos.characters);
  CHECK(two_twos.failing_m == 2);

  CHECK_THROWS_AS(run_classify(4, 2, "2+2", config()), InvalidArgument);
  CHECK_THROWS_AS(run_classify(6, 2, "3+2", config()), InvalidArgument);
  CHECK_THROWS_AS(run_classify(6, 2, "three", config()), InvalidArgument);
}

TEST_CASE("classify renderings") {
  auto rec = run_classify(6, 2, "1+2+3", config());
  CHECK(render(rec, Format::text) ==
        "n=6 k=2 j=1 cycle_type=3+2+1\ntheorem: true\ncharacters: true\nr: 8\n");
  CHECK(render(rec, Format::csv) ==
        "n,k,cycle_type,j,theorem,characters,r,failing_m\n6,2,3+2+1,1,true,true,8,\n");
  CHECK(render(rec, Format::json) == R"({
  "schema": 1,
  "command": "classify",
  "n": 6,
  "k": 2,
  "cycle_type": "3+2+1",
  "j": 1,
  "theorem": true,
  "characters": true,
  "r": 8,
  "failing_m": null
}
)");
  check_json_round_trip(rec);
  check_json_round_trip(run_classify(6, 2, "6", config()));
}

TEST_CASE("verify records") {
  auto s3 = run_verify(3, 1, "2+1", config());
  CHECK(s3.is_code);
  CHECK(s3.r == 1u);
  CHECK(s3.products == 6);
  CHECK(s3.consistent());

  auto s6 = run_verify(6, 2, "3+2+1", config());
  CHECK(s6.is_code);
  CHECK(s6.r == 8u);
  CHECK(s6.predicted_r == 8);
  CHECK(s6.products == 5760);
  CHECK(s6.consistent());

  auto miss = run_verify(6, 2, "4+2", config());
  CHECK_FALSE(miss.is_code);
  CHECK(miss.witness);
  CHECK(miss.witness_count);
  CHECK_FALSE(miss.theorem);
  CHECK(miss.consistent());
  check_json_round_trip(miss);
  CHECK(render(miss, Format::csv).starts_with(
      "n,k,cycle_type,is_code,r,witness,witness_count,theorem,characters,histogram\n6,2,4+2,false,,"));

  RunConfig tight = config();
  tight.limits.max_products = 1000;
  CHECK_THROWS_AS(run_verify(6, 2, "3+2+1", tight), LimitExceeded);
}

TEST_CASE("a verify record flags disagreement") {
  VerifyRecord rec;
  rec.is_code = true;
  rec.r = 2;
  rec.theorem = true;
  rec.characters = true;
  rec.predicted_r = 3;
  CHECK_FALSE(rec.consistent());
  rec.predicted_r = 2;
  CHECK(rec.consistent());
  rec.theorem = false;
  CHECK_FALSE(rec.consistent());
}

TEST_CASE("search records") {
  auto six = run_search(6, 2, false, config());
  REQUIRE(six.rows.size() == 1);
  CHECK(six.rows[0].cycle_type == "3+2+1");
  CHECK(six.rows[0].r == 8);
  CHECK(render(six, Format::text) == "n=6 k=2\ncycle_type r\n3+2+1 8\n");
  CHECK(render(six, Format::csv) == "n,k,cycle_type,r,brute,brute_r\n6,2,3+2+1,8,,\n");

  auto five = run_search(5, 2, false, config());
  CHECK(five.rows.empty());
  CHECK(render(five, Format::text) == "n=5 k=2\nno codes\n");

  CHECK(run_search(9, 4, true, config()).rows.empty());

  auto brute = run_search(7, 3, true, config());
  REQUIRE(brute.rows.size() == 1);
  CHECK(brute.rows[0].cycle_type == "4+2+1");
  CHECK(brute.rows[0].brute == true);
  CHECK(brute.rows[0].brute_r == static_cast<std::uint64_t>(*brute.rows[0].r));
  CHECK(brute.consistent());
  check_json_round_trip(brute);
}

TEST_CASE("shape search") {
  auto rec = run_shape_search("4+2", true, config());
  CHECK(rec.shape == "4+2");
  REQUIRE(rec.rows.size() == 1);
  CHECK(rec.rows[0].cycle_type == "3+2+1");
  CHECK(rec.rows[0].r == 8);
  CHECK(rec.consistent());
  CHECK(render(rec, Format::text).starts_with("shape=4+2 (conjectural beyond two-row shapes)\n"));

  auto three_rows = run_shape_search("3+2+1", true, config());
  CHECK(three_rows.consistent());
  for (const auto& row : three_rows.rows)
    CHECK(row.brute == row.criterion);
  check_json_round_trip(three_rows);
}

TEST_CASE("char records") {
  CHECK(run_char(3, "2+1", "2+1", "both", config()).value == 0);
  CHECK(run_char(6, "4+2", "3+2+1", "both", config()).value == 0);
  CHECK(run_char(4, "4", "2+2", "frobenius", config()).value == 1);
  CHECK(run_char(3, "2+1", "3", "mn", config()).value == -1);
  CHECK(run_char(5, "3+1+1", "5", "both", config()).value == 1);
  CHECK_THROWS_AS(run_char(5, "3+1+1", "5", "frobenius", config()), InvalidArgument);
  CHECK_THROWS_AS(run_char(5, "3+2", "4", "mn", config()), InvalidArgument);
  CHECK_THROWS_AS(run_char(5, "3+2", "5", "guess", config()), InvalidArgument);

  auto rec = run_char(6, "4+2", "3+2+1", "both", config());
  CHECK(render(rec, Format::text) == "0\n");
  CHECK(render(rec, Format::csv) == "n,shape,cycle_type,method,value\n6,4+2,3+2+1,both,0\n");
  check_json_round_trip(rec);
}

TEST_CASE("output is deterministic") {
  for (auto format : {Format::json, Format::csv, Format::text}) {
    CHECK(render(run_verify(5, 1, "2+2+1", config()), format) ==
          render(run_verify(5, 1, "2+2+1", config()), format));
    CHECK(render(run_search(8, 2, false, config()), format) ==
          render(run_search(8, 2, false, config()), format));
  }
}

TEST_CASE("configuration") {
  CHECK(parse_format("json") == Format::json);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("text") == Format::text);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);

  ::setenv("SNCODE_MAX_DEGREE", "6", 1);
  RunConfig env = RunConfig::from_environment();
  CHECK(env.limits.max_enum_degree == 6);
  CHECK_THROWS_AS(run_verify(7, 1, "6+1", env), LimitExceeded);
  ::setenv("SNCODE_MAX_DEGREE", "zero", 1);
  CHECK_THROWS_AS(RunConfig::from_environment(), InvalidArgument);
  ::unsetenv("SNCODE_MAX_DEGREE");
  CHECK(RunConfig::from_environment().limits.max_enum_degree == 10);
}
