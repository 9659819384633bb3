#include "gn/chern.hpp"

#include <stdexcept>

namespace gn {

namespace {

ChernSeries truncate(RatPoly p, int r) {
  p.resize(r + 1, Rat(0));
  ChernSeries s;
  s.c = std::move(p);
  return s;
}

}  // namespace

ChernSeries chernOfSplit(const SplitBundle& B, int r) {
  RatPoly p{Rat(1)};
  for (int a : B.twists) {
    RatPoly lin{Rat(1), Rat(a)};
    p = rpMul(p, lin);
    if (static_cast<int>(p.size()) > r + 1) p.resize(r + 1);
  }
  return truncate(std::move(p), r);
}

ChernSeries chernOfTangent(int r) {
  RatPoly p{Rat(1)};
  RatPoly lin{Rat(1), Rat(1)};
  for (int i = 0; i < r + 1; ++i) {
    p = rpMul(p, lin);
    if (static_cast<int>(p.size()) > r + 1) p.resize(r + 1);
  }
  return truncate(std::move(p), r);
}

ChernSeries chernOf(const BundleRef& B, int r) {
  if (std::holds_alternative<SplitBundle>(B)) return chernOfSplit(std::get<SplitBundle>(B), r);
  if (std::get<TangentBundle>(B).r != r)
    throw std::invalid_argument("chernOf: tangent bundle for a different ambient");
  return chernOfTangent(r);
}

ChernSeries quotientSeries(const ChernSeries& num, const ChernSeries& den) {
  if (num.r() != den.r()) throw std::invalid_argument("quotientSeries: truncation mismatch");
  if (!(den.c[0] == Rat(1))) throw std::invalid_argument("quotientSeries: denominator c0 != 1");
  int r = num.r();
  ChernSeries q;
  q.c.assign(r + 1, Rat(0));
  for (int k = 0; k <= r; ++k) {
    Rat v = num.c[k];
    for (int i = 0; i < k; ++i) v = v - q.c[i] * den.c[k - i];
    q.c[k] = v;
  }
  return q;
}

long long porteousDegree(const ChernSeries& q) {
  if (q.r() < 3) throw std::invalid_argument("porteousDegree: need terms through h^3");
  Rat d = q.c[2] * q.c[2] - q.c[1] * q.c[3];
  if (!d.isInteger()) throw std::domain_error("porteousDegree: non-integer value");
  return d.num;
}

CanonicalTwist canonicalTwist(const BundleRef& E, const BundleRef& F, int r) {
  long long k = -2 * (firstChern(E, r) - firstChern(F, r)) - r - 1;
  return {static_cast<int>(k)};
}

}  // namespace gn
