#include <doctest.h>

#include "gn/hilbert.hpp"
#include "gn/random_forms.hpp"

using namespace gn;

namespace {
Ring ring(int nvars) { return Ring(nvars, PrimeField(101)); }

RatPoly ratPoly(std::initializer_list<Rat> cs) {
  RatPoly p(cs);
  rpTrim(p);
  return p;
}
}  // namespace

TEST_CASE("numerator base cases") {
  // zero ideal
  CHECK(hilbertNumeratorMonomial({}, 3) == std::vector<long long>{1});
  // (x0) in P^2
  CHECK(hilbertNumeratorMonomial({Monomial::variable(0)}, 3) ==
        std::vector<long long>{1, -1});
  // unit ideal
  CHECK(hilbertNumeratorMonomial({Monomial::one()}, 3) == std::vector<long long>{0});
  // pure powers multiply: (x0^2, x1^3)
  CHECK(hilbertNumeratorMonomial({Monomial::variable(0, 2), Monomial::variable(1, 3)}, 3) ==
        std::vector<long long>{1, 0, -1, -1, 0, 1});
}

TEST_CASE("zero ideal in P^6 and principal ideals") {
  Ring R = ring(7);
  SUBCASE("zero ideal") {
    Ideal I{};
    SchemeInvariants inv = schemeInvariants(I, R);
    CHECK(inv.codim == 0);
    CHECK(inv.hilbertPolynomial == binomialPoly(6, 6));
  }
  SUBCASE("one variable") {
    Ideal I(std::vector<Poly>{polyVariable(0, R)});
    CHECK(codimension(I, R) == 1);
  }
  SUBCASE("unit ideal") {
    Ideal I(std::vector<Poly>{polyConstant(5, R)});
    CHECK_THROWS(codimension(I, R));
  }
}

TEST_CASE("complete intersection of two cubics in P^4") {
  Ring R = ring(5);
  SplitMix64 rng(31);
  Poly f = randomFormStream(3, rng, R);
  Poly g = randomFormStream(3, rng, R);
  Ideal I(std::vector<Poly>{f, g});
  SchemeInvariants inv = schemeInvariants(I, R);
  CHECK(inv.codim == 2);
  CHECK(inv.degree == 9);
  // chi(O_X(x)) of the CI(3,3) surface: C(x+4,4) - 2 C(x+1,4) + C(x-2,4)
  RatPoly want = rpAdd(binomialPoly(4, 4), rpScale(binomialPoly(1, 4), Rat(-2)));
  want = rpAdd(want, binomialPoly(-2, 4));
  CHECK(inv.hilbertPolynomial == want);
}

TEST_CASE("hilbert polynomial evaluates to the hilbert function past the window") {
  Ring R = ring(3);
  GradedMatrix M =
      morphismMatrix(SplitBundle::trivial(3), SplitBundle::trivial(2, 1), 41, 2, R);
  Ideal I(minors(M, 2, R));
  HilbertSeries hs = hilbertSeriesOfLeadingTerms(I, R);
  SchemeInvariants inv = schemeInvariants(hs);
  for (int m = 8; m <= 14; ++m) {
    Rat v = rpEval(inv.hilbertPolynomial, Rat(m));
    CHECK(v.isInteger());
    CHECK(v.num == hilbertFunction(hs, m));
  }
}

TEST_CASE("hilbert polynomial integrality on a window") {
  // the spec invariant: HP takes integer values at integers
  RatPoly p = ratPoly({Rat(8), Rat(-10), Rat(10)});
  for (int m = -5; m <= 10; ++m) CHECK(rpEval(p, Rat(m)).isInteger());
  RatPoly cy = ratPoly({Rat(0), Rat(14, 3), Rat(0), Rat(10, 3)});
  for (int m = -5; m <= 10; ++m) CHECK(rpEval(cy, Rat(m)).isInteger());
}
