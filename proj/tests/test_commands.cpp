#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "orbitkit/commands.hpp"

using namespace orbitkit;

namespace {

RunConfig config(std::string command, std::string poset, int ell,
                 std::string restriction = {}) {
  RunConfig c;
  c.command = std::move(command);
  c.poset = std::move(poset);
  c.ell = ell;
  c.restriction = std::move(restriction);
  return c;
}

json stable(json report) {
  report.erase("generated_at");
  report["config"].erase("workers");
  return report;
}

}  // namespace

TEST_CASE("enumerate and order") {
  auto e = run(config("enumerate", "chain:1", 3, "q:2"));
  CHECK(e.exit_code == kExitVerified);
  CHECK(e.report["count"] == 4);

  auto listed = config("enumerate", "chain:1", 1, "q:3");
  listed.list = true;
  CHECK(run(listed).report["states"] == json::parse("[[1],[2],[3]]"));

  auto o = config("order", "prod:2x3", 1, "q:5");
  o.action = "pro";
  const auto out = run(o);
  CHECK(out.text == "5\n");
  CHECK(out.report["order"] == 5);
}

TEST_CASE("rowmotion orbits and cardinality homomesy") {
  auto c = config("homomesy", "prod:2x2", 1);
  c.family = "partitions";
  c.action = "row";
  c.stats = {"total"};
  const auto r = run(c);
  CHECK(r.exit_code == kExitVerified);
  CHECK(r.report["homomesies"][0]["c"] == "2");
  CHECK(r.report["order"] == 4);
}

TEST_CASE("equivariance subcommand") {
  for (std::string action : {"togpro", "bk:2"}) {
    auto c = config("equivariance", "V", 2, "q:4");
    c.action = action;
    const auto r = run(c);
    CHECK(r.exit_code == kExitVerified);
    CHECK(r.report["equivariance"]["equivariant"] == true);
    CHECK(r.report["equivariance"]["certificate"].is_null());
  }
  auto flipped = config("equivariance", "chain:2", 2, "q:4");
  flipped.conventions.flip_ideal_orientation = true;
  CHECK(run(flipped).exit_code == kExitFalsified);
}

TEST_CASE("usage errors map to exit code 2") {
  CHECK_THROWS_AS(run(config("nonsense", "V", 1)), UsageError);
  CHECK(run_guarded(config("nonsense", "V", 1)).exit_code == kExitUsage);
  CHECK(run_guarded(config("enumerate", "prod:2xq", 1)).exit_code == kExitUsage);
  auto one_stat = config("distribution", "prod:2x2", 1);
  one_stat.family = "partitions";
  one_stat.action = "row";
  one_stat.stats = {"total"};
  one_stat.constant = 4;
  CHECK(run_guarded(one_stat).exit_code == kExitUsage);
  auto capped = config("enumerate", "prod:3x3", 3);
  capped.family = "partitions";
  capped.cap = 10;
  CHECK(run_guarded(capped).exit_code == kExitUsage);
}

TEST_CASE("reports do not depend on the worker count") {
  auto c = config("orbits", "prod:2x2", 2, "q:5");
  c.action = "pro";
  c.workers = 1;
  const auto one = run(c);
  c.workers = 4;
  const auto four = run(c);
  CHECK(stable(one.report) == stable(four.report));
  CHECK(one.text == four.text);
}

TEST_CASE("--out writes the report") {
  const std::string path = "orbitkit_test_report.json";
  auto c = config("enumerate", "V", 1, "q:4");
  c.out = path;
  const auto r = run(c);
  std::ifstream in(path);
  REQUIRE(in);
  const json j = json::parse(in);
  CHECK(j == r.report);
  CHECK(j["command"] == "enumerate");
  std::remove(path.c_str());
}
