#include "gn/saturation.hpp"

#include <stdexcept>

namespace gn {

namespace {

// lift into the extension ring with the auxiliary t appended as last variable
Poly liftPoly(const Poly& f, const Ring& ext) { return polyReorder(f, ext); }

// keep only polynomials free of the last variable, mapped back to R
std::vector<Poly> eliminateLast(const std::vector<Poly>& gb, const Ring& ext, const Ring& R) {
  int t = ext.nvars - 1;
  std::vector<Poly> out;
  for (const Poly& g : gb) {
    bool usesT = false;
    for (const auto& tm : g.t)
      if (tm.m.e[t]) {
        usesT = true;
        break;
      }
    if (!usesT) out.push_back(polyReorder(g, R));
  }
  return out;
}

}  // namespace

Ideal colonVariableInfinity(const Ideal& I, int var, const Ring& R) {
  if (var < 0 || var >= R.nvars) throw std::invalid_argument("colon: variable out of range");
  if (R.nvars + 1 > kMaxVars) throw std::invalid_argument("colon: no room for auxiliary variable");
  Ring ext(R.nvars + 1, R.field, MonOrder::ElimLast);
  int t = ext.nvars - 1;

  std::vector<Poly> gens;
  gens.reserve(I.gens.size() + 1);
  for (const Poly& f : I.gens) gens.push_back(liftPoly(f, ext));
  // t * x_var - 1
  Monomial tx = monMul(Monomial::variable(t), Monomial::variable(var));
  Poly rel = polyFromTerms({{tx, 1}, {Monomial::one(), R.field.neg(1)}}, ext);
  gens.push_back(rel);

  GBResult res = buchberger(gens, ext, {});
  std::vector<Poly> kept = eliminateLast(res.basis, ext, R);
  // homogeneous input stays homogeneous after saturating
  for (const Poly& g : kept)
    if (!polyIsHomogeneous(g))
      throw std::logic_error("colonVariableInfinity: inhomogeneous result from homogeneous input");
  Ideal out;
  out.gens = kept;
  out.gb = interreduce(std::move(kept), R);
  out.gens = *out.gb;
  return out;
}

Ideal intersectIdeals(const Ideal& A, const Ideal& B, const Ring& R) {
  if (R.nvars + 1 > kMaxVars)
    throw std::invalid_argument("intersect: no room for auxiliary variable");
  Ring ext(R.nvars + 1, R.field, MonOrder::ElimLast);
  int t = ext.nvars - 1;
  Poly tp = polyVariable(t, ext);
  Poly oneMinusT =
      polyFromTerms({{Monomial::one(), 1}, {Monomial::variable(t), R.field.neg(1)}}, ext);

  std::vector<Poly> gens;
  for (const Poly& f : A.gens) gens.push_back(polyMul(tp, liftPoly(f, ext), ext));
  for (const Poly& g : B.gens) gens.push_back(polyMul(oneMinusT, liftPoly(g, ext), ext));

  GBResult res = buchberger(gens, ext, {});
  std::vector<Poly> kept = eliminateLast(res.basis, ext, R);
  Ideal out;
  out.gb = interreduce(std::move(kept), R);
  out.gens = *out.gb;
  return out;
}

Ideal saturate(const Ideal& I, const Ring& R) {
  Ideal acc = colonVariableInfinity(I, 0, R);
  for (int v = 1; v < R.nvars; ++v) {
    Ideal cv = colonVariableInfinity(I, v, R);
    // acc subset of cv means the intersection is acc itself
    if (idealContainsAll(cv, acc.gens, R)) continue;
    if (idealContainsAll(acc, cv.gens, R)) {
      acc = std::move(cv);
      continue;
    }
    acc = intersectIdeals(acc, cv, R);
  }
  if (!acc.gb) acc.gb = interreduce(acc.gens, R);
  return acc;
}

}  // namespace gn
