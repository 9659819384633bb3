#include <doctest.h>

#include "gn/presets.hpp"

using namespace gn;

TEST_CASE("fast reports are byte-identical across runs") {
  PresetSpec spec;
  spec.name = "deg20";
  spec.r = 7;
  spec.mode = RunMode::Fast;
  RunResult a = runPreset(spec);
  RunResult b = runPreset(spec);
  CHECK(a.json == b.json);
  CHECK(a.exitCode == 0);
}

TEST_CASE("fast report carries the shape-level data") {
  PresetSpec spec;
  spec.name = "deg17";
  spec.r = 6;
  spec.mode = RunMode::Fast;
  RunResult res = runPreset(spec);
  const InvariantReport& rep = res.report;
  CHECK(rep.dimension == 2);
  REQUIRE(rep.degree.has_value());
  CHECK(*rep.degree == 17);
  REQUIRE(rep.sectionalGenusValue.has_value());
  CHECK(*rep.sectionalGenusValue == 18);
  REQUIRE(rep.pg.has_value());
  CHECK(*rep.pg == 7);
  CHECK(*rep.q == 0);
  CHECK(*rep.Ksquared == 17);
  REQUIRE(rep.hasDiamond);
  CHECK(*rep.diamond.at("h11").value == 63);
  CHECK(!rep.groebnerRan);
  CHECK(res.exitCode == 0);
}

TEST_CASE("threefold reports mark the unverified entries") {
  PresetSpec spec;
  spec.name = "deg20";
  spec.r = 7;
  spec.mode = RunMode::Fast;
  RunResult res = runPreset(spec);
  const InvariantReport& rep = res.report;
  CHECK(rep.hZero == std::vector<long long>{1, 0, 0, 1});
  REQUIRE(rep.hasDiamond);
  CHECK(!rep.diamond.at("h11").value.has_value());
  CHECK(rep.diamond.at("h11").source == "unknown");
  CHECK(rep.diamond.at("h21").source == "paper-annotation");
  CHECK(*rep.diamond.at("h21").value == 34);
  // the JSON spells the annotation out
  CHECK(res.json.find("paper-annotation") != std::string::npos);
}

TEST_CASE("full mode on the del pezzo preset cross-checks the ideal") {
  PresetSpec spec;
  spec.name = "delpezzo";
  spec.r = 5;
  spec.mode = RunMode::Full;
  RunResult res = runPreset(spec);
  CHECK(res.exitCode == 0);
  const InvariantReport& rep = res.report;
  CHECK(rep.groebnerRan);
  REQUIRE(rep.degree.has_value());
  CHECK(*rep.degree == 6);
  CHECK(rep.canonicalTwistValue == 0);
  bool sawCodim = false, sawHp = false;
  for (const auto& c : rep.checks) {
    if (c.name == "codimension-4") {
      sawCodim = true;
      CHECK(c.pass);
    }
    if (c.name == "hp-shape-vs-ideal") {
      sawHp = true;
      CHECK(c.pass);
    }
  }
  CHECK(sawCodim);
  CHECK(sawHp);
  REQUIRE(rep.betti.has_value());
  CHECK(rep.betti->at(0, 2) == 9);
  CHECK(rep.betti->at(1, 3) == 16);
  CHECK(rep.betti->at(2, 4) == 9);
  CHECK(rep.betti->at(3, 6) == 1);
}

TEST_CASE("unknown preset and bad r are rejected") {
  PresetSpec spec;
  spec.name = "nope";
  CHECK_THROWS(runPreset(spec));
  spec.name = "deg20";
  spec.r = 4;
  CHECK_THROWS(runPreset(spec));
}
