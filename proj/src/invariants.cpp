#include "gn/invariants.hpp"

#include <stdexcept>

namespace gn {

RatPoly hpFromShape(const ComplexShape& s, int r) {
  RatPoly p;
  for (int i = 0; i <= 4; ++i) {
    Rat sign(i % 2 == 0 ? 1 : -1);
    for (int t : s.terms[i]) p = rpAdd(p, rpScale(binomialPoly(t + r, r), sign));
  }
  return p;
}

long long sectionalGenus(const RatPoly& p) {
  int n = rpDegree(p);
  if (n < 1) throw std::invalid_argument("sectionalGenus: polynomial must have degree >= 1");
  RatPoly cur = p;
  for (int step = 0; step < n - 1; ++step) {
    // cur(x) - cur(x-1)
    RatPoly shifted;  // cur(x-1)
    {
      // expand via binomial: compose with x -> x-1
      RatPoly acc;
      RatPoly xm1{Rat(-1), Rat(1)};
      RatPoly powv{Rat(1)};
      for (size_t k = 0; k < cur.size(); ++k) {
        acc = rpAdd(acc, rpScale(powv, cur[k]));
        powv = rpMul(powv, xm1);
      }
      shifted = acc;
    }
    cur = rpAdd(cur, rpScale(shifted, Rat(-1)));
  }
  if (rpDegree(cur) != 1)
    throw std::logic_error("sectionalGenus: differencing did not reach a linear polynomial");
  Rat c = cur.empty() ? Rat(0) : cur[0];
  Rat genus = Rat(1) - c;
  if (!genus.isInteger()) throw std::logic_error("sectionalGenus: non-integer genus");
  return genus.num;
}

std::vector<long long> lineBundleCohomology(long long a, int r) {
  std::vector<long long> h(r + 1, 0);
  if (a >= 0) h[0] = binomial(a + r, r);
  if (a <= -r - 1) h[r] = binomial(-a - 1, r);
  return h;
}

std::vector<long long> structureSheafCohomology(const ComplexShape& s, int r) {
  int n = r - 4;
  if (n < 0) throw std::invalid_argument("structureSheafCohomology: r < 4");
  // twists in (-r-1, 0) have no cohomology at all; positive twists other than
  // the structure-sheaf term would feed the section strand
  for (int i = 1; i <= 4; ++i)
    for (int t : s.terms[i])
      if (t >= 0) throw std::logic_error("structureSheafCohomology: positive twist off term 0");

  std::vector<long long> topCount(5, 0);
  for (int i = 0; i <= 4; ++i)
    for (int t : s.terms[i]) topCount[i] += lineBundleCohomology(t, r)[r];
  for (int i = 1; i <= 4; ++i)
    if (topCount[i] && topCount[i - 1])
      throw std::logic_error(
          "structureSheafCohomology: adjacent terms both carry top cohomology; "
          "the shape does not determine the connecting map");

  std::vector<long long> h(n + 1, 0);
  h[0] = 1;  // the section strand of a resolution with term 0 = O
  for (int i = 0; i <= 4; ++i) {
    if (!topCount[i]) continue;
    int p = r - i;
    if (p < 1 || p > n)
      throw std::logic_error("structureSheafCohomology: top strand lands outside [1, dim]");
    h[p] += topCount[i];
  }
  return h;
}

SurfaceDiamond surfaceDiamond(long long chiO, long long Ksq, long long pg, long long q) {
  SurfaceDiamond d;
  d.eulerNumber = 12 * chiO - Ksq;  // Noether
  d.b1 = 2 * q;
  d.b2 = d.eulerNumber - 2 + 4 * q;
  d.h11 = d.b2 - 2 * pg;
  if (d.b2 < 0 || d.h11 < 0)
    throw std::domain_error("surfaceDiamond: inconsistent invariants");
  if (d.eulerNumber != 2 - 2 * d.b1 + d.b2)
    throw std::logic_error("surfaceDiamond: Betti consistency failed");
  return d;
}

}  // namespace gn
