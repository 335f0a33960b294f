#include "doctest.h"

#include <algorithm>
#include <string>

#include "etanu/errors.hpp"
#include "etanu/suites.hpp"

using namespace etanu;

namespace {

SuiteConfig tiny_config() {
  SuiteConfig cfg;
  cfg.random_cases = 3;
  cfg.nmax = 5;
  cfg.pmax = 1;
  cfg.qmax = 1;
  cfg.bundle_dir = "";  // unit runs never write bundles
  return cfg;
}

Json stripped(const VerificationReport& report) {
  Json j = report.to_json();
  j.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("the published suite list is stable") {
  const auto& names = suite_names();
  CHECK(names.size() == 16);
  CHECK(std::find(names.begin(), names.end(), "duality") != names.end());
  CHECK(std::find(names.begin(), names.end(), "tightness") != names.end());
  CHECK(std::find(names.begin(), names.end(), "chi-sum") != names.end());
  for (const auto& name : names) CHECK_FALSE(name.empty());
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("no-such-suite", tiny_config()), DomainError);
}

TEST_CASE("a small run passes and reports its configuration") {
  SuiteConfig cfg = tiny_config();
  VerificationReport rep = run_suite("tightness", cfg);
  CHECK(rep.passed());
  CHECK(rep.suite == "tightness");
  CHECK(rep.cases.size() == 1);
  CHECK(rep.tight_count() == 1);
  CHECK(rep.failures == 0);
  CHECK_FALSE(rep.aborted);
  CHECK(rep.config["seed"] == 1);
  CHECK(rep.config["nmax"] == 5);
  CHECK(rep.to_json()["suite"] == "tightness");
  CHECK_FALSE(rep.summary().empty());
}

TEST_CASE("same seed, same report") {
  SuiteConfig cfg = tiny_config();
  VerificationReport a = run_suite("duality", cfg);
  VerificationReport b = run_suite("duality", cfg);
  CHECK(stripped(a) == stripped(b));
  cfg.seed = 99;
  VerificationReport c = run_suite("game-soundness", cfg);
  VerificationReport d = run_suite("game-soundness", cfg);
  CHECK(stripped(c) == stripped(d));
}

TEST_CASE("every suite passes a smoke-sized run") {
  SuiteConfig cfg = tiny_config();
  for (const auto& name : suite_names()) {
    VerificationReport rep = run_suite(name, cfg);
    CHECK_MESSAGE(rep.passed(), name, ": ", rep.summary());
    CHECK_FALSE(rep.cases.empty());
  }
}

TEST_CASE("replay accepts a hand-built bundle") {
  Json bundle = {
      {"suite", "homology-basics"},
      {"id", "hand-two-points"},
      {"kind", "homology-frozen"},
      {"payload",
       {{"complex", {{"n", 2}, {"facets", Json::parse("[[0],[1]]")}}},
        {"expect_q", 1},
        {"expect_gf2", 1}}},
  };
  VerificationReport rep = replay_bundle(bundle, tiny_config());
  CHECK(rep.passed());
  CHECK(rep.cases.size() == 1);
  CHECK(rep.cases[0].id == "hand-two-points");

  Json bad = bundle;
  bad["kind"] = "no-such-kind";
  VerificationReport bad_rep = replay_bundle(bad, tiny_config());
  CHECK_FALSE(bad_rep.passed());
  CHECK(bad_rep.cases[0].message.find("unknown case kind") != std::string::npos);
}

TEST_CASE("replay detects a genuine violation") {
  // Claim the wrong frozen value: two points have connectivity 1, not 2.
  Json bundle = {
      {"suite", "homology-basics"},
      {"id", "hand-wrong"},
      {"kind", "homology-frozen"},
      {"payload",
       {{"complex", {{"n", 2}, {"facets", Json::parse("[[0],[1]]")}}},
        {"expect_q", 2},
        {"expect_gf2", 1}}},
  };
  VerificationReport rep = replay_bundle(bundle, tiny_config());
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures == 1);
  CHECK_FALSE(rep.cases[0].ok);
  CHECK_FALSE(rep.cases[0].message.empty());
}
