#pragma once

#include <vector>

#include "gn/graded_matrix.hpp"
#include "gn/polynomial.hpp"

namespace gn {

// Element of a free module R^rank, dense by component.
struct VecPoly {
  std::vector<Poly> c;

  explicit VecPoly(int rank = 0) : c(rank) {}
  bool isZero() const {
    for (const auto& f : c)
      if (!f.isZero()) return false;
    return true;
  }
  int rank() const { return static_cast<int>(c.size()); }
};

struct ModMono {
  int comp;
  Monomial m;
};

// Schreyer-type order on a free module: each basis element carries an
// accumulated ring-monomial tag and a tiebreak chain; module monomials
// compare by tag-weighted ring order, then chain, then component index.
struct ModuleOrder {
  std::vector<Monomial> tag;
  std::vector<std::vector<int>> tie;

  static ModuleOrder trivial(int rank) {
    ModuleOrder o;
    o.tag.assign(rank, Monomial::one());
    o.tie.assign(rank, {});
    return o;
  }

  int rank() const { return static_cast<int>(tag.size()); }

  // >0 if a > b
  int cmp(const ModMono& a, const ModMono& b, const Ring& R) const {
    int c = monCmp(monMul(a.m, tag[a.comp]), monMul(b.m, tag[b.comp]), R);
    if (c != 0) return c;
    const auto& ta = tie[a.comp];
    const auto& tb = tie[b.comp];
    for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i)
      if (ta[i] != tb[i]) return ta[i] < tb[i] ? 1 : -1;
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? 1 : -1;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
};

ModMono leadModMono(const VecPoly& v, const ModuleOrder& ord, const Ring& R);
uint32_t leadCoeff(const VecPoly& v, const ModMono& lead);

VecPoly vecAddScaled(const VecPoly& f, const VecPoly& g, const Monomial& m, uint32_t c,
                     const Ring& R);
VecPoly vecMonic(const VecPoly& v, const ModuleOrder& ord, const Ring& R);
bool vecEqual(const VecPoly& a, const VecPoly& b);

// homogeneous degree of v given component generator degrees; -1 for zero,
// throws if inhomogeneous
int vecDegree(const VecPoly& v, const std::vector<int>& compDeg);

// full normal form against a finite set of module elements
VecPoly moduleNormalForm(const VecPoly& f, const std::vector<VecPoly>& G, const ModuleOrder& ord,
                         const Ring& R);

std::vector<VecPoly> moduleBuchberger(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                      const Ring& R);

// Schreyer order on the syzygy module of a set of columns (their S-pair
// syzygies lead at lcm/lt_min positions).
ModuleOrder schreyerOrder(const std::vector<VecPoly>& cols, const ModuleOrder& parent,
                          const Ring& R);

// Columns assumed a Groebner basis: every S-vector reduces to zero and the
// recorded quotients are a Groebner basis of the syzygy module under the
// induced Schreyer order (chain-criterion pruned pairs are redundant).
std::vector<VecPoly> syzygiesOfGB(const std::vector<VecPoly>& cols, const ModuleOrder& ord,
                                  const Ring& R);

// reduced module Groebner basis from a module Groebner basis: monic columns,
// dominated leads dropped, tails reduced
std::vector<VecPoly> moduleInterreduce(std::vector<VecPoly> cols, const ModuleOrder& ord,
                                       const Ring& R);

// First syzygies of arbitrary generators (tracked Buchberger plus division
// corrections), trimmed to a minimal generating set. compDeg grades the
// ambient module the generators live in.
std::vector<VecPoly> syzygyGenerators(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                      const std::vector<int>& compDeg, const Ring& R);

// greedy minimal generating set (ascending degree) of the submodule the
// generators span; returns indices kept
std::vector<int> trimGenerators(const std::vector<VecPoly>& gens, const ModuleOrder& ord,
                                const std::vector<int>& compDeg, const Ring& R);

// convenience wrappers for ideals / graded matrices
GradedMatrix syzygyMatrix(const GradedMatrix& M, const Ring& R);
GradedMatrix syzygyMatrixOfIdeal(const std::vector<Poly>& gens, const Ring& R);

}  // namespace gn
