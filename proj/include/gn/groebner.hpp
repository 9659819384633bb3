#pragma once

#include <optional>
#include <vector>

#include "gn/polynomial.hpp"

namespace gn {

// Homogeneous ideal with a cached reduced Groebner basis. The cache, when
// present, is the unique reduced basis for the ring order: monic, pairwise
// lead-irreducible, tails fully reduced, sorted ascending by lead monomial.
struct Ideal {
  std::vector<Poly> gens;
  std::optional<std::vector<Poly>> gb;

  Ideal() = default;
  explicit Ideal(std::vector<Poly> g) : gens(std::move(g)) {}
};

struct GBOptions {
  int sugarBound = -1;       // probe mode: stop past this sugar degree
  bool forSyzygies = false;  // keep coprime-lead pairs (their reductions carry syzygies)
};

struct GBResult {
  std::vector<Poly> basis;
  bool truncated = false;
};

// Buchberger with Gebauer-Moller pair elimination and sugar selection.
// Pairs of equal sugar are reduced against a frozen basis snapshot (the
// OpenMP kernel), then merged sequentially, so serial and parallel runs
// produce identical output.
GBResult buchberger(const std::vector<Poly>& gens, const Ring& R, const GBOptions& opt = {});

const std::vector<Poly>& groebnerBasis(Ideal& I, const Ring& R);

// full normal form (head and tail) against an arbitrary finite basis
Poly normalForm(const Poly& f, const std::vector<Poly>& G, const Ring& R);

bool inIdeal(const Poly& f, Ideal& I, const Ring& R);

// reduced basis from any basis of the same ideal: minimal leads, monic,
// tails reduced, sorted ascending
std::vector<Poly> interreduce(std::vector<Poly> G, const Ring& R);

bool idealEquals(Ideal& A, Ideal& B, const Ring& R);

// A contains f for every f in gens
bool idealContainsAll(Ideal& A, const std::vector<Poly>& gens, const Ring& R);

}  // namespace gn
