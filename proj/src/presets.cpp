#include "gn/presets.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "gn/random_forms.hpp"
#include "gn/saturation.hpp"

namespace gn {

namespace {

const char* kPresetNames[] = {"delpezzo", "deg20", "deg17", "ci-cubics", "deg20-tangent",
                              "deg17-tangent"};

}  // namespace

bool presetKnown(const std::string& name) {
  for (const char* p : kPresetNames)
    if (name == p) return true;
  return false;
}

int defaultR(const std::string& name) { return name == "delpezzo" ? 5 : 6; }

RunMode defaultMode(int r) { return r >= 7 ? RunMode::Fast : RunMode::Full; }

PresetBundles presetBundles(const std::string& name, int r) {
  int n = r - 4;
  if (name == "delpezzo")
    return {SplitBundle::trivial(3), SplitBundle::trivial(3, 1), false, false};
  if (name == "deg20") return {SplitBundle::trivial(4), SplitBundle::trivial(4, 1), false, false};
  if (name == "deg17") {
    return {SplitBundle::trivial(3), SplitBundle(std::vector<int>{1, 1, 2}), false, false};
  }
  if (name == "deg20-tangent") {
    std::vector<int> tw(n + 1, 1);
    tw.insert(tw.end(), 3, 0);
    return {SplitBundle(std::move(tw)), TangentBundle{r}, true, false};
  }
  if (name == "deg17-tangent") {
    std::vector<int> tw(n + 2, 1);
    tw.push_back(0);
    tw.push_back(-1);
    return {SplitBundle(std::move(tw)), TangentBundle{r}, true, false};
  }
  if (name == "ci-cubics") {
    std::vector<int> tw(n + 3, 1);
    tw.push_back(-2);
    return {SplitBundle(std::move(tw)), TangentBundle{r}, true, true};
  }
  throw std::invalid_argument("unknown preset: " + name);
}

ComplexShape presetShape(const std::string& name, int r) {
  (void)r;
  if (name == "delpezzo") return gnShape(SplitBundle::trivial(3), SplitBundle::trivial(3, 1));
  if (name == "deg20" || name == "deg20-tangent")
    return gnShape(SplitBundle::trivial(4), SplitBundle::trivial(4, 1));
  if (name == "deg17" || name == "deg17-tangent")
    return gnShape(SplitBundle::trivial(3), SplitBundle(std::vector<int>{1, 1, 2}));
  throw std::invalid_argument("preset has no Gulliksen-Negard shape: " + name);
}

namespace {

void addCheck(InvariantReport& rep, const std::string& name, bool pass) {
  rep.checks.push_back({name, pass});
}

Rat evalAt(const RatPoly& p, long long x) { return rpEval(p, Rat(x)); }

bool ratPolyEq(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  rpTrim(x);
  rpTrim(y);
  return x == y;
}

// expected minimal generator degrees from the d1 term of a shape
std::vector<int> shapeGeneratorDegrees(const ComplexShape& s) {
  std::vector<int> d;
  d.reserve(s.terms[1].size());
  for (int t : s.terms[1]) d.push_back(-t);
  std::sort(d.begin(), d.end());
  return d;
}

void fillSurfaceData(InvariantReport& rep, long long chi, long long deg) {
  long long pg = rep.hZero[2], q = rep.hZero[1];
  rep.pg = pg;
  rep.q = q;
  long long k = rep.canonicalTwistValue;
  rep.Ksquared = k * k * deg;
  SurfaceDiamond d = surfaceDiamond(chi, *rep.Ksquared, pg, q);
  rep.hasDiamond = true;
  rep.diamond["h00"] = {1, "computed"};
  rep.diamond["h01"] = {q, "computed"};
  rep.diamond["h02"] = {pg, "computed"};
  rep.diamond["h11"] = {d.h11, "computed"};
}

void fillThreefoldData(InvariantReport& rep, const std::string& name) {
  rep.hasDiamond = true;
  rep.diamond["h00"] = {1, "computed"};
  rep.diamond["h01"] = {rep.hZero[1], "computed"};
  rep.diamond["h02"] = {rep.hZero[2], "computed"};
  rep.diamond["h03"] = {rep.hZero[3], "computed"};
  rep.diamond["h11"] = {std::nullopt, "unknown"};
  if (name == "deg20" || name == "deg20-tangent")
    rep.diamond["h21"] = {34, "paper-annotation"};
  else if (name == "deg17" || name == "deg17-tangent")
    rep.diamond["h21"] = {58, "paper-annotation"};
  else
    rep.diamond["h21"] = {std::nullopt, "unknown"};
}

}  // namespace

RunResult runPreset(const PresetSpec& spec) {
  RunResult result;
  InvariantReport& rep = result.report;
  rep.spec = spec;

  if (!presetKnown(spec.name)) throw std::invalid_argument("unknown preset: " + spec.name);
  if (spec.r < 5 || spec.r > 8) throw std::invalid_argument("preset r must be in 5..8");
  if (!isPrime(spec.prime)) throw std::invalid_argument("prime must be prime");

  const int r = spec.r;
  const int n = r - 4;
  rep.dimension = n;
  PresetBundles pb = presetBundles(spec.name, r);

  // Chern-level invariants
  ChernSeries q = quotientSeries(chernOf(pb.F, r), chernOf(pb.E, r));
  long long dPorteous = porteousDegree(q);
  rep.degree = dPorteous;
  rep.canonicalTwistValue = canonicalTwist(pb.E, pb.F, r).value;

  bool haveShape = !pb.ci;
  ComplexShape shape;
  if (haveShape) {
    shape = presetShape(spec.name, r);
    long long c1L = shape.terms[4][0] / 2;
    addCheck(rep, "self-duality-shape", shapeSelfDual(shape, c1L));

    RatPoly hp = hpFromShape(shape, r);
    rep.hilbert = hp;
    rep.hasHilbert = true;
    Rat chi = evalAt(hp, 0);
    rep.chiO = chi.num;

    // leading coefficient x dim! against Porteous
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    Rat lead = hp.back() * Rat(fact);
    addCheck(rep, "porteous-vs-shape-degree", lead.isInteger() && lead.num == dPorteous);

    if (rpDegree(hp) >= 1) rep.sectionalGenusValue = sectionalGenus(hp);

    try {
      rep.hZero = structureSheafCohomology(shape, r);
      long long alt = 0;
      for (size_t p = 0; p < rep.hZero.size(); ++p)
        alt += (p % 2 == 0 ? 1 : -1) * rep.hZero[p];
      addCheck(rep, "chiO-consistency", alt == chi.num);
      if (n == 2) fillSurfaceData(rep, chi.num, dPorteous);
      if (n == 3) fillThreefoldData(rep, spec.name);
      if (n == 2) {
        addCheck(rep, "k2-equals-degree",
                 rep.canonicalTwistValue != 1 || *rep.Ksquared == dPorteous);
      }
    } catch (const std::logic_error& e) {
      rep.note = std::string("cohomology strands not shape-determined here: ") + e.what();
    }
  }

  if (spec.mode == RunMode::Full) {
    Ring R(r + 1, PrimeField(spec.prime));
    rep.groebnerRan = true;

    if (!pb.tangent) {
      const SplitBundle& E = std::get<SplitBundle>(pb.E);
      const SplitBundle& F = std::get<SplitBundle>(pb.F);
      GradedMatrix M = morphismMatrix(E, F, spec.seed, r, R);

      // explicit differentials: compositions vanish, d1 cuts the minors ideal
      GNDifferentials D = gnDifferentials(M, R);
      bool compZero = isZeroMatrix(matMul(D.d1, D.d2, R)) &&
                      isZeroMatrix(matMul(D.d2, D.d3, R)) && isZeroMatrix(matMul(D.d3, D.d4, R));
      addCheck(rep, "composition-zero", compZero);

      Ideal I = gnIdeal(M, R);
      {
        Ideal fromD1(std::vector<Poly>(D.d1.a.begin(), D.d1.a.end()));
        addCheck(rep, "d1-minors-ideal",
                 idealContainsAll(I, fromD1.gens, R) && idealContainsAll(fromD1, I.gens, R));
      }

      SchemeInvariants inv = schemeInvariants(I, R);
      bool codimOk = !inv.emptyScheme && inv.codim == 4;
      addCheck(rep, "codimension-4", codimOk);
      if (!codimOk) {
        rep.degenerate = true;
        rep.note = "degenerate sample: codimension != 4; re-run with --seed " +
                   std::to_string(spec.seed + 1);
      } else {
        addCheck(rep, "porteous-vs-groebner-degree", inv.degree == dPorteous);
        addCheck(rep, "hp-shape-vs-ideal", ratPolyEq(inv.hilbertPolynomial, rep.hilbert));
        if (spec.name == "delpezzo" || spec.extended) {
          rep.betti = minimalFreeResolution(I, r + 1, R);
        }
      }
    } else {
      const SplitBundle& E = std::get<SplitBundle>(pb.E);
      Ideal sat = eulerConstruction(E, r, spec.seed, R);
      SchemeInvariants inv = schemeInvariants(sat, R);
      bool codimOk = !inv.emptyScheme && inv.codim == 4;
      addCheck(rep, "codimension-4", codimOk);
      if (!codimOk) {
        rep.degenerate = true;
        rep.note = "degenerate sample: codimension != 4; re-run with --seed " +
                   std::to_string(spec.seed + 1);
      } else {
        addCheck(rep, "porteous-vs-groebner-degree", inv.degree == dPorteous);
        rep.generatorDegrees = minimalGeneratorDegrees(sat, R);
        if (haveShape) {
          addCheck(rep, "hp-matches-shape", ratPolyEq(inv.hilbertPolynomial, rep.hilbert));
          addCheck(rep, "generator-degrees-match-shape",
                   rep.generatorDegrees == shapeGeneratorDegrees(shape));
        } else {
          // two hyperplane sections of a complete intersection of two cubics
          rep.hilbert = inv.hilbertPolynomial;
          rep.hasHilbert = true;
          rep.chiO = evalAt(inv.hilbertPolynomial, 0).num;
          if (rpDegree(inv.hilbertPolynomial) >= 1)
            rep.sectionalGenusValue = sectionalGenus(inv.hilbertPolynomial);
          addCheck(rep, "generator-degrees-two-linear-two-cubic",
                   rep.generatorDegrees == std::vector<int>{1, 1, 3, 3});
          addCheck(rep, "degree-9", inv.degree == 9);
        }
        if (spec.extended) rep.betti = minimalFreeResolution(sat, r + 1, R);
      }
    }
  } else if (pb.tangent || pb.ci) {
    rep.note = rep.note.empty() ? "fast mode: saturation and Groebner checks skipped"
                                : rep.note + "; fast mode: saturation skipped";
  }

  bool allPass = true;
  for (const auto& c : rep.checks) allPass = allPass && c.pass;
  if (rep.degenerate)
    result.exitCode = 2;
  else if (!allPass)
    result.exitCode = 3;

  result.json = reportToJson(rep);
  result.text = reportToText(rep);
  return result;
}

namespace {

nlohmann::ordered_json numberField(long long v) {
  return {{"value", v}, {"source", "computed"}};
}

nlohmann::ordered_json diamondEntryJson(const DiamondEntry& e) {
  nlohmann::ordered_json j;
  if (e.value)
    j["value"] = *e.value;
  else
    j["value"] = nullptr;
  j["source"] = e.source;
  return j;
}

}  // namespace

std::string reportToJson(const InvariantReport& rep) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = 1;
  j["preset"] = rep.spec.name;
  j["r"] = rep.spec.r;
  j["prime"] = rep.spec.prime;
  j["seed"] = rep.spec.seed;
  j["mode"] = rep.spec.mode == RunMode::Full ? "full" : "fast";
  if (rep.degree)
    j["degree"] = numberField(*rep.degree);
  else
    j["degree"] = nullptr;
  j["dimension"] = numberField(rep.dimension);
  if (rep.hasHilbert) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rat& c : rep.hilbert) coeffs.push_back({c.num, c.den});
    j["hilbertPolynomial"] = {{"value", coeffs}, {"source", "computed"}};
  } else {
    j["hilbertPolynomial"] = nullptr;
  }
  j["sectionalGenus"] =
      rep.sectionalGenusValue ? numberField(*rep.sectionalGenusValue) : nlohmann::ordered_json();
  j["chiO"] = rep.chiO ? numberField(*rep.chiO) : nlohmann::ordered_json();
  j["pg"] = rep.pg ? numberField(*rep.pg) : nlohmann::ordered_json();
  j["q"] = rep.q ? numberField(*rep.q) : nlohmann::ordered_json();
  j["Ksquared"] = rep.Ksquared ? numberField(*rep.Ksquared) : nlohmann::ordered_json();
  j["canonicalTwist"] = numberField(rep.canonicalTwistValue);
  if (!rep.hZero.empty()) {
    nlohmann::ordered_json h = nlohmann::ordered_json::array();
    for (long long v : rep.hZero) h.push_back(v);
    j["hStructureSheaf"] = {{"value", h}, {"source", "computed"}};
  } else {
    j["hStructureSheaf"] = nullptr;
  }
  if (rep.hasDiamond) {
    nlohmann::ordered_json d;
    for (const auto& [k, e] : rep.diamond) d[k] = diamondEntryJson(e);
    j["diamond"] = d;
  } else {
    j["diamond"] = nullptr;
  }
  if (rep.betti) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [ij, v] : rep.betti->beta)
      rows.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", v}});
    j["bettiTable"] = {{"entries", rows}, {"complete", rep.betti->complete}};
  } else {
    j["bettiTable"] = nullptr;
  }
  if (!rep.generatorDegrees.empty()) {
    j["generatorDegrees"] = rep.generatorDegrees;
  }
  j["groebnerRan"] = rep.groebnerRan;
  j["smoothnessAssumed"] = rep.smoothnessAssumed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}});
  j["checks"] = checks;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j.dump(2) + "\n";
}

std::string reportToText(const InvariantReport& rep) {
  std::ostringstream os;
  os << "preset " << rep.spec.name << "  P^" << rep.spec.r << "  F_" << rep.spec.prime
     << "  seed " << rep.spec.seed << "  mode "
     << (rep.spec.mode == RunMode::Full ? "full" : "fast") << "\n";
  os << "  dimension     " << rep.dimension << "\n";
  if (rep.degree) os << "  degree        " << *rep.degree << "\n";
  if (rep.hasHilbert) os << "  Hilbert poly  " << ratPolyToString(rep.hilbert) << "\n";
  if (rep.sectionalGenusValue) os << "  sect. genus   " << *rep.sectionalGenusValue << "\n";
  if (rep.chiO) os << "  chi(O)        " << *rep.chiO << "\n";
  if (!rep.hZero.empty()) {
    os << "  h^i(O_X)      ";
    for (size_t i = 0; i < rep.hZero.size(); ++i) os << (i ? " " : "") << rep.hZero[i];
    os << "\n";
  }
  os << "  omega_X       O_X(" << rep.canonicalTwistValue << ")\n";
  if (rep.pg) os << "  p_g           " << *rep.pg << "\n";
  if (rep.q) os << "  q             " << *rep.q << "\n";
  if (rep.Ksquared) os << "  K^2           " << *rep.Ksquared << "\n";
  if (rep.hasDiamond) {
    os << "  diamond      ";
    for (const auto& [k, e] : rep.diamond) {
      os << " " << k << "=";
      if (e.value)
        os << *e.value;
      else
        os << "?";
      if (e.source != "computed") os << "(" << e.source << ")";
    }
    os << "\n";
  }
  if (!rep.generatorDegrees.empty()) {
    os << "  sat. gens deg ";
    for (int d : rep.generatorDegrees) os << " " << d;
    os << "\n";
  }
  if (rep.betti) os << "betti table:\n" << formatBetti(*rep.betti);
  for (const auto& c : rep.checks)
    os << "  check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  if (!rep.note.empty()) os << "  note: " << rep.note << "\n";
  return os.str();
}

}  // namespace gn
