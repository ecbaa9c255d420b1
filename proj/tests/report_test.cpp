#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <string>

#include "doctest.h"
#include "rwkit/report.hpp"
#include "schema_check.hpp"

using namespace rwkit;
using nlohmann::json;

namespace {

const testsupport::schema_validator& schema() {
  static const testsupport::schema_validator v = [] {
    std::ifstream in(RWKIT_SCHEMA_PATH);
    REQUIRE(in.good());
    return testsupport::schema_validator(json::parse(in));
  }();
  return v;
}

void check_report(const command_output& out) {
  auto problem = schema().validate(out.report);
  if (problem) FAIL_CHECK("schema violation: " << *problem);
  CHECK(out.report.at("timing_ms").get<double>() >= 0.0);
}

trs cl() {
  return parse_trs(
      "(VAR x y z)"
      "(RULES ap(ap(ap(S, x), y), z) -> ap(ap(x, z), ap(y, z))"
      "  ap(ap(K, x), y) -> x)");
}

trs ab_ac() { return parse_trs("(VAR )(RULES a -> b  a -> c)"); }
trs ff() { return parse_trs("(VAR x)(RULES f(f(x)) -> x)"); }
trs fxx() { return parse_trs("(VAR x)(RULES f(x, x) -> x  a -> b)"); }
trs looping_cp() { return parse_trs("(VAR x)(RULES f(x) -> g(f(x))  f(a) -> b)"); }

}  // namespace

TEST_CASE("check reports an orthogonality verdict") {
  command_output out = run_check(cl(), "cl.trs", {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("verdict") == "confluent");
  CHECK(r.at("criterion") == "orthogonality");
  CHECK(!r.contains("critical_pairs"));
  CHECK(out.text.find("command: check") != std::string::npos);
  CHECK(out.text.find("input: cl.trs") != std::string::npos);
  CHECK(out.text.find("verdict: confluent") != std::string::npos);
  CHECK(out.text.find("criterion: orthogonality") != std::string::npos);

  CHECK(out.report.at("command") == "check");
  CHECK(out.report.at("input") == "cl.trs");
  CHECK(out.report.at("trs").at("rules").size() == 2);
  CHECK(out.report.at("config").at("fuel") == 10000);
}

TEST_CASE("check reports a non-joinable critical pair") {
  command_output out = run_check(ab_ac(), "ab_ac.trs", {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("verdict") == "not-confluent");
  CHECK(r.at("criterion") == "non-joinable-critical-pair");
  CHECK(r.at("local_confluence") == "not-locally-confluent");
  REQUIRE(r.at("critical_pairs").size() == 2);
  CHECK(r.at("critical_pairs")[0].at("left") == "b");
  CHECK(r.at("critical_pairs")[0].at("right") == "c");
  CHECK(r.at("critical_pairs")[0].at("joinability").at("status") == "no");
  CHECK(out.text.find("verdict: not-confluent") != std::string::npos);
  CHECK(out.text.find("critical pairs: 2") != std::string::npos);
}

TEST_CASE("check distinguishes unknown from assumed termination") {
  command_output undecided = run_check(ff(), "ff.trs", {});
  check_report(undecided);
  CHECK(undecided.exit_code == 2);
  CHECK(undecided.report.at("result").at("verdict") == "unknown");
  CHECK(undecided.report.at("result").at("criterion") == "undecided");
  CHECK(undecided.report.at("result").at("local_confluence") == "locally-confluent");
  CHECK(undecided.text.find("verdict: unknown") != std::string::npos);

  analysis_config assume;
  assume.assume_terminating = true;
  command_output newman = run_check(ff(), "ff.trs", assume);
  check_report(newman);
  CHECK(newman.exit_code == 0);
  CHECK(newman.report.at("result").at("verdict") == "confluent");
  CHECK(newman.report.at("result").at("criterion") == "newman+critical-pairs");
  CHECK(newman.report.at("config").at("assume_terminating") == true);
}

TEST_CASE("cps lists every pair with its joinability") {
  command_output out = run_cps(ab_ac(), "ab_ac.trs", {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("count") == 2);
  CHECK(r.at("total") == 2);
  CHECK(r.at("deduped") == false);
  REQUIRE(r.at("pairs").size() == 2);
  CHECK(r.at("pairs")[0].at("outer_rule") == 0);
  CHECK(r.at("pairs")[0].at("inner_rule") == 1);
  CHECK(r.at("pairs")[0].at("position") == "epsilon");
  CHECK(r.at("pairs")[1].at("left") == "c");
  CHECK(out.text.find("critical pairs: 2") != std::string::npos);
  CHECK(out.text.find("joinable: no") != std::string::npos);
}

TEST_CASE("cps deduplicates mirrored root pairs on request") {
  analysis_config cfg;
  cfg.dedupe_symmetric_cps = true;
  command_output out = run_cps(ab_ac(), "ab_ac.trs", cfg);
  check_report(out);
  const json& r = out.report.at("result");
  CHECK(r.at("count") == 1);
  CHECK(r.at("total") == 2);
  CHECK(r.at("deduped") == true);
  REQUIRE(r.at("pairs").size() == 1);
  CHECK(out.text.find("critical pairs: 1 (of 2 before deduplication)") != std::string::npos);
}

TEST_CASE("cps exits 2 when some pair resists the search") {
  command_output out = run_cps(looping_cp(), "loop_cp.trs", {});
  check_report(out);
  CHECK(out.exit_code == 2);
  const json& r = out.report.at("result");
  REQUIRE(r.at("pairs").size() == 2);
  CHECK(r.at("pairs")[0].at("joinability").at("status") == "unknown");
  CHECK(out.text.find("joinable: unknown") != std::string::npos);
}

TEST_CASE("orthogonal reports both ingredients") {
  command_output yes = run_orthogonal(cl(), "cl.trs", {});
  check_report(yes);
  CHECK(yes.exit_code == 0);
  CHECK(yes.report.at("result").at("orthogonal") == true);
  CHECK(yes.report.at("result").at("left_linear") == true);
  CHECK(yes.report.at("result").at("overlap_count") == 0);
  CHECK(yes.text.find("orthogonal: yes") != std::string::npos);

  command_output no = run_orthogonal(fxx(), "fxx.trs", {});
  check_report(no);
  CHECK(no.exit_code == 0);
  CHECK(no.report.at("result").at("orthogonal") == false);
  CHECK(no.report.at("result").at("left_linear") == false);
  CHECK(no.text.find("left linear: no") != std::string::npos);

  command_output overlapping = run_orthogonal(ab_ac(), "ab_ac.trs", {});
  check_report(overlapping);
  CHECK(overlapping.report.at("result").at("left_linear") == true);
  CHECK(overlapping.report.at("result").at("overlap_count") == 2);
  REQUIRE(overlapping.report.at("result").at("overlaps").size() == 2);
  CHECK(overlapping.report.at("result").at("overlaps")[0].at("position") == "epsilon");
}

TEST_CASE("normalize reports the reduction trace") {
  command_output out = run_normalize(ff(), "ff.trs", "f(f(f(f(a))))", true, {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("term") == "f(f(f(f(a))))");
  CHECK(r.at("status") == "normal-form");
  CHECK(r.at("result") == "a");
  CHECK(r.at("steps") == 2);
  REQUIRE(r.at("trace").size() == 2);
  CHECK(r.at("trace")[0].at("position") == "epsilon");
  CHECK(r.at("trace")[0].at("rule_index") == 0);
  CHECK(out.report.at("config").at("fuel") == 1000);
  CHECK(out.text.find("status: normal-form") != std::string::npos);
  CHECK(out.text.find("result: a") != std::string::npos);
  CHECK(out.text.find("step 1: rule 0 at epsilon") != std::string::npos);
}

TEST_CASE("normalize exits 2 when the fuel runs out") {
  trs loop = parse_trs("(VAR )(RULES c -> g(c))");
  analysis_config cfg;
  cfg.fuel = 3;
  command_output out = run_normalize(loop, "loop.trs", "c", false, cfg);
  check_report(out);
  CHECK(out.exit_code == 2);
  const json& r = out.report.at("result");
  CHECK(r.at("status") == "out-of-fuel");
  CHECK(r.at("result") == "g(g(g(c)))");
  CHECK(r.at("steps") == 3);
  CHECK(out.report.at("config").at("fuel") == 3);
  CHECK(out.text.find("status: out-of-fuel") != std::string::npos);
}

TEST_CASE("joinable reports all three outcomes") {
  command_output no = run_joinable(ab_ac(), "ab_ac.trs", "b", "c", false, {});
  check_report(no);
  CHECK(no.exit_code == 0);
  CHECK(no.report.at("result").at("status") == "no");
  CHECK(!no.report.at("result").contains("witness"));
  CHECK(no.text.find("status: no") != std::string::npos);

  command_output yes = run_joinable(ab_ac(), "ab_ac.trs", "a", "b", false, {});
  check_report(yes);
  CHECK(yes.exit_code == 0);
  CHECK(yes.report.at("result").at("status") == "yes");
  CHECK(yes.report.at("result").at("witness") == "b");
  CHECK(yes.text.find("witness: b") != std::string::npos);

  trs loopy = parse_trs("(VAR )(RULES c -> g(c)  d -> e)");
  analysis_config small;
  small.fuel = 10;
  command_output unknown = run_joinable(loopy, "loopy.trs", "c", "d", false, small);
  check_report(unknown);
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.report.at("result").at("status") == "unknown");
}

TEST_CASE("parallel lists reducts with their steps") {
  command_output out = run_parallel(ab_ac(), "ab_ac.trs", "a", false, {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("term") == "a");
  CHECK(r.at("count") == 3);
  REQUIRE(r.at("reducts").size() == 3);
  CHECK(r.at("reducts")[0].at("term") == "a");
  CHECK(r.at("reducts")[0].at("step").at("positions").empty());
  CHECK(r.at("reducts")[1].at("term") == "b");
  CHECK(r.at("reducts")[1].at("step").at("positions")[0] == "epsilon");
  CHECK(r.at("reducts")[1].at("step").at("rules")[0] == 0);
  CHECK(r.at("reducts")[2].at("term") == "c");
  CHECK(r.at("reducts")[2].at("step").at("rules")[0] == 1);
  CHECK(out.text.find("parallel reducts: 3") != std::string::npos);
  CHECK(out.text.find("(empty step)") != std::string::npos);
}

TEST_CASE("ars summarizes the finite relation") {
  finite_ars newman = parse_ars(
      "b -> a\n"
      "b -> c\n"
      "c -> b\n"
      "c -> d\n");
  command_output out = run_ars(newman, "newman4.ars", {});
  check_report(out);
  CHECK(out.exit_code == 0);
  const json& r = out.report.at("result");
  CHECK(r.at("elements") == 4);
  CHECK(r.at("steps") == 4);
  CHECK(r.at("locally_confluent") == true);
  CHECK(r.at("confluent") == false);
  CHECK(r.at("noetherian") == false);
  CHECK(out.report.contains("ars"));
  CHECK(!out.report.contains("trs"));
  CHECK(out.report.at("ars").at("carrier").size() == 4);
  CHECK(out.report.at("ars").at("steps").size() == 4);
  CHECK(out.text.find("locally confluent: yes") != std::string::npos);
  CHECK(out.text.find("confluent: no") != std::string::npos);
}

TEST_CASE("configuration problems are rejected up front") {
  analysis_config zero_fuel;
  zero_fuel.fuel = 0;
  CHECK_THROWS_WITH_AS(run_check(ab_ac(), "x", zero_fuel),
                       doctest::Contains("fuel must be at least 1"), input_error);

  analysis_config bad_format;
  bad_format.output_format = "yaml";
  CHECK_THROWS_WITH_AS(run_cps(ab_ac(), "x", bad_format),
                       doctest::Contains("output format must be 'text' or 'json'"), input_error);

  analysis_config no_room;
  no_room.max_term_size = 0;
  CHECK_THROWS_WITH_AS(run_ars(parse_ars("a -> b"), "x", no_room),
                       doctest::Contains("max term size"), input_error);
}

TEST_CASE("reports echo the configuration") {
  analysis_config cfg;
  cfg.fuel = 77;
  cfg.max_term_size = 4096;
  cfg.assume_terminating = true;
  cfg.output_format = "json";
  cfg.dedupe_symmetric_cps = true;
  command_output out = run_cps(ff(), "ff.trs", cfg);
  check_report(out);
  const json& c = out.report.at("config");
  CHECK(c.at("fuel") == 77);
  CHECK(c.at("max_term_size") == 4096);
  CHECK(c.at("assume_terminating") == true);
  CHECK(c.at("output_format") == "json");
  CHECK(c.at("dedupe_symmetric_cps") == true);
  CHECK(out.text.find("config: fuel=77 max-term-size=4096 assume-terminating=yes dedupe-cps=yes") !=
        std::string::npos);
}
