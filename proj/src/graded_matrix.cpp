#include "gn/graded_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gn/parallel.hpp"

namespace gn {

void checkHomogeneous(const GradedMatrix& M, const Ring& R) {
  (void)R;
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      const Poly& f = M.at(i, j);
      if (f.isZero()) continue;
      int want = M.colDeg[j] - M.rowDeg[i];
      if (!polyIsHomogeneous(f) || polyDegree(f) != want) {
        std::ostringstream os;
        os << "GradedMatrix: entry (" << i << "," << j << ") not homogeneous of degree " << want;
        throw std::logic_error(os.str());
      }
    }
}

bool isZeroMatrix(const GradedMatrix& M) {
  for (const auto& f : M.a)
    if (!f.isZero()) return false;
  return true;
}

std::vector<std::vector<int>> subsetsOfSize(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// det of the submatrix given by rowIdx/colIdx, Laplace along the first row,
// memoized on the remaining-column bitmask
Poly detSub(const GradedMatrix& M, const std::vector<int>& rowIdx, const std::vector<int>& colIdx,
            const Ring& R) {
  int k = static_cast<int>(rowIdx.size());
  if (k == 0) return polyConstant(1, R);
  std::unordered_map<uint32_t, Poly> memo;

  // recursion over the set of still-unused columns; row index = k - |mask|
  std::vector<int> live;
  auto rec = [&](auto&& self, uint32_t mask) -> const Poly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int cnt = __builtin_popcount(mask);
    int row = k - cnt;
    Poly acc;
    int sign = 0;
    for (int c = 0; c < k; ++c) {
      if (!(mask & (1u << c))) continue;
      const Poly& entry = M.at(rowIdx[row], colIdx[c]);
      if (!entry.isZero()) {
        const Poly& sub = self(self, mask & ~(1u << c));
        Poly prod = polyMul(entry, sub, R);
        acc = (sign % 2 == 0) ? polyAdd(acc, prod, R) : polySub(acc, prod, R);
      }
      ++sign;
    }
    return memo.emplace(mask, std::move(acc)).first->second;
  };
  memo.emplace(0u, polyConstant(1, R));
  uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  return rec(rec, full);
}

}  // namespace

Poly determinant(const GradedMatrix& M, const Ring& R) {
  if (M.rows != M.cols) throw std::invalid_argument("determinant: matrix not square");
  std::vector<int> idx(M.rows);
  for (int i = 0; i < M.rows; ++i) idx[i] = i;
  return detSub(M, idx, idx, R);
}

std::vector<Poly> minorsSerial(const GradedMatrix& M, int k, const Ring& R) {
  if (k < 1 || k > std::min(M.rows, M.cols)) throw std::invalid_argument("minors: k out of range");
  auto rowSets = subsetsOfSize(M.rows, k);
  auto colSets = subsetsOfSize(M.cols, k);
  std::vector<Poly> out(rowSets.size() * colSets.size());
  for (size_t ri = 0; ri < rowSets.size(); ++ri)
    for (size_t ci = 0; ci < colSets.size(); ++ci)
      out[ri * colSets.size() + ci] = detSub(M, rowSets[ri], colSets[ci], R);
  return out;
}

std::vector<Poly> minors(const GradedMatrix& M, int k, const Ring& R) {
  if (!parallel::enabled()) return minorsSerial(M, k, R);
  if (k < 1 || k > std::min(M.rows, M.cols)) throw std::invalid_argument("minors: k out of range");
  auto rowSets = subsetsOfSize(M.rows, k);
  auto colSets = subsetsOfSize(M.cols, k);
  std::vector<Poly> out(rowSets.size() * colSets.size());
  const long long total = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < total; ++idx) {
    size_t ri = static_cast<size_t>(idx) / colSets.size();
    size_t ci = static_cast<size_t>(idx) % colSets.size();
    out[idx] = detSub(M, rowSets[ri], colSets[ci], R);
  }
  return out;
}

GradedMatrix matMulSerial(const GradedMatrix& A, const GradedMatrix& B, const Ring& R) {
  if (A.cols != B.rows || A.colDeg != B.rowDeg)
    throw std::invalid_argument("matMul: inner dimensions/degrees mismatch");
  GradedMatrix C(A.rows, B.cols, A.rowDeg, B.colDeg);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < B.cols; ++j) {
      Poly acc;
      for (int k = 0; k < A.cols; ++k) {
        if (A.at(i, k).isZero() || B.at(k, j).isZero()) continue;
        acc = polyAdd(acc, polyMul(A.at(i, k), B.at(k, j), R), R);
      }
      C.at(i, j) = std::move(acc);
    }
  return C;
}

GradedMatrix matMul(const GradedMatrix& A, const GradedMatrix& B, const Ring& R) {
  if (!parallel::enabled()) return matMulSerial(A, B, R);
  if (A.cols != B.rows || A.colDeg != B.rowDeg)
    throw std::invalid_argument("matMul: inner dimensions/degrees mismatch");
  GradedMatrix C(A.rows, B.cols, A.rowDeg, B.colDeg);
  const long long total = static_cast<long long>(A.rows) * B.cols;
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < total; ++idx) {
    int i = static_cast<int>(idx / B.cols);
    int j = static_cast<int>(idx % B.cols);
    Poly acc;
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k).isZero() || B.at(k, j).isZero()) continue;
      acc = polyAdd(acc, polyMul(A.at(i, k), B.at(k, j), R), R);
    }
    C.at(i, j) = std::move(acc);
  }
  return C;
}

}  // namespace gn
