#pragma once

#include <array>

#include "gn/bundles.hpp"
#include "gn/graded_matrix.hpp"
#include "gn/groebner.hpp"

namespace gn {

// multiset of sheaf twists of a graded free module, sorted ascending
using GradedFreeModule = std::vector<int>;

// The five terms of the Gulliksen-Negard complex, index 0 the structure
// sheaf end:
//   G4 = L^2, G3 = E x F* x L, G2 = detE x S(F*) + detF* x S(E),
//   G1 = wedge^{e-1}E x wedge^{e-1}F*, G0 = O,
// with L = det E x (det F)^{-1} and S the Schur functor for (2, 1^{e-2}).
struct ComplexShape {
  std::array<GradedFreeModule, 5> terms;

  bool operator==(const ComplexShape& o) const { return terms == o.terms; }
};

// graded pieces of the Schur functor S_{(2,1^{e-2})} applied to a split
// bundle of rank e, via semistandard tableau enumeration
GradedFreeModule schurTerm(const SplitBundle& B, int e);

ComplexShape gnShape(const SplitBundle& E, const SplitBundle& F);

// G^* twisted by L^2 reproduces G
bool shapeSelfDual(const ComplexShape& s, long long c1L);

std::string shapeToString(const ComplexShape& s);

// Explicit differentials for the complex of a square graded matrix M
// (rows the target bundle, columns the source):
//   d4(1) = adj(M)
//   d3(X) = (X*M, M*X) in coordinates on W = trace-matched pairs mod (Id,Id)
//   d2(A,B) = M*A - B*M
//   d1(Y) = trace(adj(M)*Y)
// All compositions vanish and the entries of d1 are the signed submaximal
// minors.
struct GNDifferentials {
  GradedMatrix d1, d2, d3, d4;
};

GNDifferentials gnDifferentials(const GradedMatrix& M, const Ring& R);

// ideal of (e-1) x (e-1) minors of M
Ideal gnIdeal(const GradedMatrix& M, const Ring& R);

// Lift of a morphism E -> T through the Euler sequence: the (r+1) x (r+1)
// matrix [Phi | x] whose minors of size r cut the degeneracy locus.
GradedMatrix eulerAugmentedMatrix(const SplitBundle& E, int r, uint64_t seed, const Ring& R);

// ideal of r x r minors of the augmented matrix (not yet saturated)
Ideal eulerMinorsIdeal(const SplitBundle& E, int r, uint64_t seed, const Ring& R);

// the saturated construction: rank phi <= e-2 locus for phi: E -> T
Ideal eulerConstruction(const SplitBundle& E, int r, uint64_t seed, const Ring& R);

}  // namespace gn
