// Command-line front end: run the named constructions end to end or expose
// the individual computations (Porteous degrees, complex shapes, minors
// ideals, Betti tables, saturation, cohomology).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gn/presets.hpp"
#include "gn/random_forms.hpp"
#include "gn/saturation.hpp"

using namespace gn;

namespace {

struct CommonOpts {
  int r = -1;
  uint32_t prime = 101;
  uint64_t seed = 7;
  std::string E, F;
  std::string out;
};

void addCommon(CLI::App* cmd, CommonOpts& o, bool bundles) {
  cmd->add_option("--r", o.r, "ambient projective dimension (5..8 for presets)");
  cmd->add_option("--prime", o.prime, "field characteristic (prime, default 101)");
  cmd->add_option("--seed", o.seed, "seed for the random morphism");
  if (bundles) {
    cmd->add_option("--E", o.E, "source bundle twists, comma separated");
    cmd->add_option("--F", o.F, "target bundle twists, comma separated");
  }
  cmd->add_option("--out", o.out, "write the JSON report to this path");
}

void writeOut(const std::string& path, const std::string& data) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  f << data;
}

BundleRef parseF(const std::string& s, int r) {
  if (s == "T" || s == "tangent") return TangentBundle{r};
  return parseTwistList(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gulliksen-Negard determinantal subschemes of P^r over F_p"};
  app.require_subcommand(1);

  // ---- run ----
  std::string presetName;
  CommonOpts runOpts;
  std::string modeStr;
  bool extended = false;
  CLI::App* run = app.add_subcommand("run", "run a named preset end to end");
  run->add_option("preset", presetName, "preset name")->required();
  addCommon(run, runOpts, false);
  run->add_option("--mode", modeStr, "fast | full (default: full for r<=6, fast for r>=7)");
  run->add_flag("--extended", extended, "also compute the full Betti tower (slow)");

  // ---- porteous ----
  CommonOpts poOpts;
  CLI::App* po = app.add_subcommand("porteous", "Porteous degree c2^2 - c1*c3 of c(F)/c(E)");
  addCommon(po, poOpts, true);

  // ---- shape ----
  CommonOpts shOpts;
  CLI::App* sh = app.add_subcommand("shape", "graded shape of the Gulliksen-Negard complex");
  addCommon(sh, shOpts, true);

  // ---- ideal ----
  CommonOpts idOpts;
  CLI::App* id = app.add_subcommand("ideal", "submaximal-minors ideal of a random morphism");
  addCommon(id, idOpts, true);

  // ---- betti ----
  CommonOpts beOpts;
  std::string bePreset;
  CLI::App* be = app.add_subcommand("betti", "Betti table of a preset ideal (full resolution)");
  be->add_option("preset", bePreset, "preset name")->required();
  addCommon(be, beOpts, false);

  // ---- saturate ----
  CommonOpts saOpts;
  CLI::App* sa = app.add_subcommand(
      "saturate", "Euler construction for F = T: saturate the augmented-minors ideal");
  addCommon(sa, saOpts, true);

  // ---- cohomology ----
  CommonOpts coOpts;
  CLI::App* co = app.add_subcommand("cohomology", "structure sheaf cohomology from the shape");
  addCommon(co, coOpts, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      PresetSpec spec;
      spec.name = presetName;
      if (!presetKnown(spec.name)) {
        std::cerr << "unknown preset " << spec.name << "\n";
        return 1;
      }
      spec.r = runOpts.r > 0 ? runOpts.r : defaultR(spec.name);
      spec.prime = runOpts.prime;
      spec.seed = runOpts.seed;
      spec.extended = extended;
      if (modeStr.empty())
        spec.mode = defaultMode(spec.r);
      else if (modeStr == "fast")
        spec.mode = RunMode::Fast;
      else if (modeStr == "full")
        spec.mode = RunMode::Full;
      else {
        std::cerr << "mode must be fast or full\n";
        return 1;
      }
      RunResult res = runPreset(spec);
      std::cout << res.text;
      writeOut(runOpts.out, res.json);
      return res.exitCode;
    }

    if (po->parsed()) {
      int r = poOpts.r > 0 ? poOpts.r : 6;
      SplitBundle E = parseTwistList(poOpts.E);
      BundleRef F = parseF(poOpts.F, r);
      ChernSeries q = quotientSeries(chernOf(F, r), chernOf(BundleRef(E), r));
      std::cout << porteousDegree(q) << "\n";
      return 0;
    }

    if (sh->parsed()) {
      SplitBundle E = parseTwistList(shOpts.E);
      SplitBundle F = parseTwistList(shOpts.F);
      ComplexShape s = gnShape(E, F);
      std::cout << shapeToString(s) << "\n";
      return 0;
    }

    if (id->parsed()) {
      int r = idOpts.r > 0 ? idOpts.r : 6;
      SplitBundle E = parseTwistList(idOpts.E);
      SplitBundle F = parseTwistList(idOpts.F);
      Ring R(r + 1, PrimeField(idOpts.prime));
      GradedMatrix M = morphismMatrix(E, F, idOpts.seed, r, R);
      Ideal I = gnIdeal(M, R);
      std::cout << "generators (" << I.gens.size() << "):\n";
      for (const Poly& g : I.gens) std::cout << "  " << polyToString(g, R) << "\n";
      return 0;
    }

    if (be->parsed()) {
      if (!presetKnown(bePreset)) {
        std::cerr << "unknown preset " << bePreset << "\n";
        return 1;
      }
      int r = beOpts.r > 0 ? beOpts.r : defaultR(bePreset);
      Ring R(r + 1, PrimeField(beOpts.prime));
      PresetBundles pb = presetBundles(bePreset, r);
      Ideal I;
      if (pb.tangent) {
        I = eulerConstruction(std::get<SplitBundle>(pb.E), r, beOpts.seed, R);
      } else {
        GradedMatrix M = morphismMatrix(std::get<SplitBundle>(pb.E), std::get<SplitBundle>(pb.F),
                                        beOpts.seed, r, R);
        I = gnIdeal(M, R);
      }
      BettiTable b = minimalFreeResolution(I, r + 1, R);
      std::cout << formatBetti(b);
      return 0;
    }

    if (sa->parsed()) {
      int r = saOpts.r > 0 ? saOpts.r : 6;
      SplitBundle E = parseTwistList(saOpts.E);
      Ring R(r + 1, PrimeField(saOpts.prime));
      Ideal raw = eulerMinorsIdeal(E, r, saOpts.seed, R);
      std::vector<int> before = minimalGeneratorDegrees(raw, R);
      Ideal sat = eulerConstruction(E, r, saOpts.seed, R);
      std::vector<int> after = minimalGeneratorDegrees(sat, R);
      std::cout << "generator degrees before saturation:";
      for (int d : before) std::cout << " " << d;
      std::cout << "\nafter saturation:";
      for (int d : after) std::cout << " " << d;
      SchemeInvariants inv = schemeInvariants(sat, R);
      std::cout << "\ncodimension " << inv.codim << ", degree " << inv.degree
                << ", Hilbert polynomial " << ratPolyToString(inv.hilbertPolynomial) << "\n";
      return 0;
    }

    if (co->parsed()) {
      int r = coOpts.r > 0 ? coOpts.r : 6;
      SplitBundle E = parseTwistList(coOpts.E);
      SplitBundle F = parseTwistList(coOpts.F);
      ComplexShape s = gnShape(E, F);
      std::vector<long long> h = structureSheafCohomology(s, r);
      std::cout << "h^i(O_X):";
      for (long long v : h) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
