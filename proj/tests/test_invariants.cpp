#include <doctest.h>

#include "gn/invariants.hpp"

using namespace gn;

namespace {

RatPoly ratPoly(std::initializer_list<Rat> cs) {
  RatPoly p(cs);
  rpTrim(p);
  return p;
}

ComplexShape shape20() {
  return gnShape(SplitBundle::trivial(4), SplitBundle::trivial(4, 1));
}
ComplexShape shape17() {
  return gnShape(SplitBundle::trivial(3), SplitBundle(std::vector<int>{1, 1, 2}));
}
ComplexShape shapeDP() {
  return gnShape(SplitBundle::trivial(3), SplitBundle::trivial(3, 1));
}

}  // namespace

TEST_CASE("hilbert polynomials from the shapes") {
  CHECK(hpFromShape(shape20(), 6) == ratPoly({Rat(8), Rat(-10), Rat(10)}));
  CHECK(hpFromShape(shape20(), 7) == ratPoly({Rat(0), Rat(14, 3), Rat(0), Rat(10, 3)}));
  CHECK(hpFromShape(shape17(), 6) == ratPoly({Rat(8), Rat(-17, 2), Rat(17, 2)}));
  CHECK(hpFromShape(shape17(), 7) == ratPoly({Rat(0), Rat(31, 6), Rat(0), Rat(17, 6)}));
  CHECK(hpFromShape(shapeDP(), 5) == ratPoly({Rat(0), Rat(6)}));

  // zero-length shape: just the structure sheaf
  ComplexShape triv;
  triv.terms[0] = {0};
  for (int i = 1; i <= 4; ++i) triv.terms[i] = {};
  CHECK(hpFromShape(triv, 6) == binomialPoly(6, 6));
}

TEST_CASE("sectional genus") {
  CHECK(sectionalGenus(ratPoly({Rat(8), Rat(-10), Rat(10)})) == 21);
  CHECK(sectionalGenus(ratPoly({Rat(8), Rat(-17, 2), Rat(17, 2)})) == 18);
  // plane conic: 2x + 1 has genus 0
  CHECK(sectionalGenus(ratPoly({Rat(1), Rat(2)})) == 0);
  // CY threefold polynomial differences down to the surface then the curve
  CHECK(sectionalGenus(ratPoly({Rat(0), Rat(14, 3), Rat(0), Rat(10, 3)})) == 21);
  CHECK_THROWS(sectionalGenus(ratPoly({Rat(5)})));
}

TEST_CASE("line bundle cohomology on P^r") {
  auto h0 = lineBundleCohomology(0, 6);
  CHECK(h0[0] == 1);
  for (int i = 1; i <= 6; ++i) CHECK(h0[i] == 0);

  auto hm8 = lineBundleCohomology(-8, 6);
  CHECK(hm8[6] == 7);
  for (int i = 0; i < 6; ++i) CHECK(hm8[i] == 0);

  auto hm8b = lineBundleCohomology(-8, 7);
  CHECK(hm8b[7] == 1);

  // Serre duality oracle: h^r(O(a)) = h^0(O(-a-r-1))
  for (int r : {5, 6, 7}) {
    for (long long a = -12; a <= 3; ++a) {
      auto h = lineBundleCohomology(a, r);
      auto dual = lineBundleCohomology(-a - r - 1, r);
      CHECK(h[r] == dual[0]);
    }
  }
}

TEST_CASE("structure sheaf cohomology of the presets") {
  auto h20s = structureSheafCohomology(shape20(), 6);
  CHECK(h20s == std::vector<long long>{1, 0, 7});
  auto h20cy = structureSheafCohomology(shape20(), 7);
  CHECK(h20cy == std::vector<long long>{1, 0, 0, 1});
  auto h17s = structureSheafCohomology(shape17(), 6);
  CHECK(h17s == std::vector<long long>{1, 0, 7});
  auto h17cy = structureSheafCohomology(shape17(), 7);
  CHECK(h17cy == std::vector<long long>{1, 0, 0, 1});
  auto hdp = structureSheafCohomology(shapeDP(), 5);
  CHECK(hdp == std::vector<long long>{1, 1});  // elliptic curve
  auto hFano = structureSheafCohomology(shape20(), 8);
  CHECK(hFano == std::vector<long long>{1, 0, 0, 0, 0});

  // alternating sum equals chi(O) from the shape polynomial
  for (int r : {6, 7, 8}) {
    auto h = structureSheafCohomology(shape20(), r);
    long long alt = 0;
    for (size_t p = 0; p < h.size(); ++p) alt += (p % 2 ? -1 : 1) * h[p];
    Rat chi = rpEval(hpFromShape(shape20(), r), Rat(0));
    CHECK(chi.isInteger());
    CHECK(alt == chi.num);
  }
}

TEST_CASE("adjacent top-cohomology terms are refused") {
  // the mixed shape at r=5 has top cohomology in two consecutive terms;
  // the connecting map is not shape data, so this must throw
  CHECK_THROWS(structureSheafCohomology(shape17(), 5));
}

TEST_CASE("surface diamonds by Noether") {
  SurfaceDiamond d20 = surfaceDiamond(8, 20, 7, 0);
  CHECK(d20.eulerNumber == 76);
  CHECK(d20.h11 == 60);
  SurfaceDiamond d17 = surfaceDiamond(8, 17, 7, 0);
  CHECK(d17.eulerNumber == 79);
  CHECK(d17.h11 == 63);
  SurfaceDiamond k3 = surfaceDiamond(2, 0, 1, 0);
  CHECK(k3.eulerNumber == 24);
  CHECK(k3.h11 == 20);
  // b2 = 2 pg + h11 by construction
  CHECK(d20.b2 == 2 * 7 + d20.h11);
  CHECK(d17.b2 == 2 * 7 + d17.h11);
}
