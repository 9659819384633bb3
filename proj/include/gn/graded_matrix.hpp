#pragma once

#include <vector>

#include "gn/polynomial.hpp"

namespace gn {

// Matrix of homogeneous polynomials presenting a degree-0 map of graded free
// modules, columns as sources:
//
//     + R(-colDeg_j)  -->  + R(-rowDeg_i)
//
// so entry (i,j) is zero or homogeneous of degree colDeg[j] - rowDeg[i].
// Degrees here are generator degrees; the sheaf twist of a summand is the
// negated degree (a map of O(a)'s has rowDeg_i = -a_i).
struct GradedMatrix {
  int rows = 0, cols = 0;
  std::vector<Poly> a;  // row-major
  std::vector<int> rowDeg, colDeg;

  GradedMatrix() = default;
  GradedMatrix(int r, int c, std::vector<int> rd, std::vector<int> cd)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c), rowDeg(std::move(rd)), colDeg(std::move(cd)) {}

  Poly& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Poly& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// throws if some nonzero entry is inhomogeneous or off-degree
void checkHomogeneous(const GradedMatrix& M, const Ring& R);

bool isZeroMatrix(const GradedMatrix& M);

// Laplace expansion memoized on column subsets.
Poly determinant(const GradedMatrix& M, const Ring& R);

// All k x k minors, enumerated by (rowSubset, colSubset) in lexicographic
// order of the index tuples, row subsets outermost.
std::vector<Poly> minors(const GradedMatrix& M, int k, const Ring& R);
std::vector<Poly> minorsSerial(const GradedMatrix& M, int k, const Ring& R);

GradedMatrix matMul(const GradedMatrix& A, const GradedMatrix& B, const Ring& R);
GradedMatrix matMulSerial(const GradedMatrix& A, const GradedMatrix& B, const Ring& R);

std::vector<std::vector<int>> subsetsOfSize(int n, int k);  // lexicographic

}  // namespace gn
