#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gn/chern.hpp"
#include "gn/gn_complex.hpp"
#include "gn/hilbert.hpp"
#include "gn/invariants.hpp"
#include "gn/resolution.hpp"

namespace gn {

enum class RunMode { Fast, Full };

// The named constructions over P^r, 5 <= r <= 8. The tangent presets tie
// rank(E) to r through the Euler presentation.
struct PresetSpec {
  std::string name;  // delpezzo | deg20 | deg17 | ci-cubics | deg20-tangent | deg17-tangent
  int r = 6;
  uint32_t prime = 101;
  uint64_t seed = 7;
  RunMode mode = RunMode::Full;
  bool extended = false;  // full Betti towers for the heavy presets
};

struct PresetBundles {
  BundleRef E, F;
  bool tangent = false;
  bool ci = false;  // the complete-intersection-of-cubics construction
};

bool presetKnown(const std::string& name);
int defaultR(const std::string& name);
RunMode defaultMode(int r);
PresetBundles presetBundles(const std::string& name, int r);

// expected resolution shape; for the tangent presets this is the shape of the
// corresponding split construction. Throws for ci-cubics.
ComplexShape presetShape(const std::string& name, int r);

struct Check {
  std::string name;
  bool pass;
};

struct InvariantReport {
  PresetSpec spec;
  int dimension = 0;
  std::optional<long long> degree;
  RatPoly hilbert;
  bool hasHilbert = false;
  std::optional<long long> sectionalGenusValue;
  std::optional<long long> chiO;
  std::vector<long long> hZero;  // h^0..h^n of O_X (empty if not derived)
  std::optional<long long> pg, q, Ksquared;
  int canonicalTwistValue = 0;
  std::map<std::string, DiamondEntry> diamond;
  bool hasDiamond = false;
  std::optional<BettiTable> betti;
  std::vector<int> generatorDegrees;  // saturated ideal, euler presets
  bool groebnerRan = false;
  bool smoothnessAssumed = true;
  std::vector<Check> checks;
  bool degenerate = false;
  std::string note;
};

struct RunResult {
  InvariantReport report;
  int exitCode = 0;  // 0 ok, 2 degenerate sample (re-seed), 3 cross-check failure
  std::string json;
  std::string text;
};

RunResult runPreset(const PresetSpec& spec);

std::string reportToJson(const InvariantReport& rep);
std::string reportToText(const InvariantReport& rep);

}  // namespace gn
