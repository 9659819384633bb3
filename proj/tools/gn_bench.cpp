// Benchmark comparing the OpenMP kernels against their serial twins:
// minors enumeration, graded matrix products, and the Buchberger pair
// strata. Verifies the outputs agree bit for bit while timing both paths.

#include <chrono>
#include <cstdio>
#include <functional>

#include "gn/gn_complex.hpp"
#include "gn/groebner.hpp"
#include "gn/parallel.hpp"
#include "gn/random_forms.hpp"

using namespace gn;

namespace {

double timeIt(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

void report(const char* name, double serial, double par, bool equal) {
  std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   equal %s\n", name, serial,
              par, par > 0 ? serial / par : 0.0, equal ? "yes" : "NO");
}

}  // namespace

int main() {
  const int r = 6;
  Ring R(r + 1, PrimeField(101));

  // minors of a generic 6x6 linear matrix
  {
    SplitBundle E = SplitBundle::trivial(6);
    SplitBundle F = SplitBundle::trivial(6, 1);
    GradedMatrix M = morphismMatrix(E, F, 11, r, R);
    std::vector<Poly> a, b;
    double ts = timeIt([&] { a = minorsSerial(M, 5, R); });
    parallel::setEnabled(true);
    double tp = timeIt([&] { b = minors(M, 5, R); });
    bool eq = a.size() == b.size();
    for (size_t i = 0; eq && i < a.size(); ++i) eq = polyEqual(a[i], b[i]);
    report("minors 5x5 of 6x6 linear", ts, tp, eq);
  }

  // product of consecutive differentials for a generic 4x4 matrix
  {
    SplitBundle E = SplitBundle::trivial(4);
    SplitBundle F = SplitBundle::trivial(4, 1);
    GradedMatrix M = morphismMatrix(E, F, 5, r, R);
    GNDifferentials D = gnDifferentials(M, R);
    GradedMatrix a, b;
    double ts = timeIt([&] { a = matMulSerial(D.d2, D.d3, R); });
    parallel::setEnabled(true);
    double tp = timeIt([&] { b = matMul(D.d2, D.d3, R); });
    bool eq = a.rows == b.rows && a.cols == b.cols;
    for (size_t i = 0; eq && i < a.a.size(); ++i) eq = polyEqual(a.a[i], b.a[i]);
    report("d2*d3 for 4x4 linear", ts, tp, eq);
  }

  // Groebner basis of the 16 cubics cutting the degree-20 surface in P^5
  {
    Ring R5(6, PrimeField(101));
    SplitBundle E = SplitBundle::trivial(4);
    SplitBundle F = SplitBundle::trivial(4, 1);
    GradedMatrix M = morphismMatrix(E, F, 7, 5, R5);
    Ideal I = gnIdeal(M, R5);
    std::vector<Poly> a, b;
    parallel::setEnabled(false);
    double ts = timeIt([&] { a = buchberger(I.gens, R5, {}).basis; });
    parallel::setEnabled(true);
    double tp = timeIt([&] { b = buchberger(I.gens, R5, {}).basis; });
    bool eq = a.size() == b.size();
    for (size_t i = 0; eq && i < a.size(); ++i) eq = polyEqual(a[i], b[i]);
    report("buchberger deg20 in P^5", ts, tp, eq);
  }

  return 0;
}
