#include <doctest.h>

#include "gn/gn_complex.hpp"
#include "gn/groebner.hpp"
#include "gn/parallel.hpp"
#include "gn/random_forms.hpp"

using namespace gn;

namespace {
struct ParallelGuard {
  bool saved;
  ParallelGuard() : saved(parallel::enabled()) {}
  ~ParallelGuard() { parallel::setEnabled(saved); }
};
}  // namespace

TEST_CASE("minors kernel matches its serial twin bit for bit") {
  ParallelGuard guard;
  Ring R(7, PrimeField(101));
  GradedMatrix M =
      morphismMatrix(SplitBundle::trivial(5), SplitBundle::trivial(5, 1), 31, 6, R);
  std::vector<Poly> serial = minorsSerial(M, 4, R);
  parallel::setEnabled(true);
  std::vector<Poly> par = minors(M, 4, R);
  parallel::setEnabled(false);
  std::vector<Poly> off = minors(M, 4, R);
  REQUIRE(serial.size() == par.size());
  REQUIRE(serial.size() == off.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(polyEqual(serial[i], par[i]));
    CHECK(polyEqual(serial[i], off[i]));
  }
}

TEST_CASE("matMul kernel matches its serial twin bit for bit") {
  ParallelGuard guard;
  Ring R(7, PrimeField(101));
  GradedMatrix M =
      morphismMatrix(SplitBundle::trivial(4), SplitBundle::trivial(4, 1), 5, 6, R);
  GNDifferentials D = gnDifferentials(M, R);
  GradedMatrix serial = matMulSerial(D.d2, D.d3, R);
  parallel::setEnabled(true);
  GradedMatrix par = matMul(D.d2, D.d3, R);
  REQUIRE(serial.rows == par.rows);
  REQUIRE(serial.cols == par.cols);
  for (size_t i = 0; i < serial.a.size(); ++i) CHECK(polyEqual(serial.a[i], par.a[i]));
}

TEST_CASE("buchberger strata produce identical bases either way") {
  ParallelGuard guard;
  Ring R(6, PrimeField(101));
  GradedMatrix M =
      morphismMatrix(SplitBundle::trivial(3), SplitBundle(std::vector<int>{1, 1, 2}), 23, 5, R);
  std::vector<Poly> gens = minors(M, 2, R);
  parallel::setEnabled(false);
  std::vector<Poly> serial = buchberger(gens, R, {}).basis;
  parallel::setEnabled(true);
  std::vector<Poly> par = buchberger(gens, R, {}).basis;
  REQUIRE(serial.size() == par.size());
  for (size_t i = 0; i < serial.size(); ++i) CHECK(polyEqual(serial[i], par[i]));
}
