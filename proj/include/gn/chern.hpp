#pragma once

#include "gn/bundles.hpp"
#include "gn/rational.hpp"

namespace gn {

// Chern series truncated at h^r: coefficients of 1, h, ..., h^r in exact
// rationals. Bundle series have constant term 1.
struct ChernSeries {
  std::vector<Rat> c;  // size r+1

  int r() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const ChernSeries& o) const { return c == o.c; }
};

ChernSeries chernOfSplit(const SplitBundle& B, int r);
ChernSeries chernOfTangent(int r);  // (1+h)^(r+1) truncated
ChernSeries chernOf(const BundleRef& B, int r);

// truncated power series quotient; den must have constant term 1
ChernSeries quotientSeries(const ChernSeries& num, const ChernSeries& den);

// degree of a codimension-4 degeneracy locus: c2^2 - c1*c3 of the virtual
// quotient series; throws if the value is not an integer
long long porteousDegree(const ChernSeries& q);

// the integer k with omega_X = O_X(k): -2(c1(E) - c1(F)) - r - 1
struct CanonicalTwist {
  int value;
};
CanonicalTwist canonicalTwist(const BundleRef& E, const BundleRef& F, int r);

}  // namespace gn
