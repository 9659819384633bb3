#include "gn/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gn {

namespace {

// lex compare on exponent vectors, x0 heaviest
int lexCmp(const Monomial& a, const Monomial& b, int n) {
  for (int i = 0; i < n; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

// Sorting columns by (lead component, lead monomial lex-descending) makes the
// induced syzygy leads drop one variable per level, which bounds the
// iteration by the variable count.
void sortColumns(std::vector<VecPoly>& cols, const ModuleOrder& ord, const Ring& R) {
  std::vector<ModMono> leads;
  leads.reserve(cols.size());
  for (auto& c : cols) leads.push_back(leadModMono(c, ord, R));
  std::vector<int> idx(cols.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (leads[a].comp != leads[b].comp) return leads[a].comp < leads[b].comp;
    return lexCmp(leads[a].m, leads[b].m, R.nvars) > 0;
  });
  std::vector<VecPoly> out;
  out.reserve(cols.size());
  for (int i : idx) out.push_back(std::move(cols[i]));
  cols.swap(out);
}

struct Complex {
  // d[l] maps F_{l+1} -> F_l, entries over R; deg[l] = generator degrees of F_l
  std::vector<GradedMatrix> d;
  std::vector<std::vector<int>> deg;
};

GradedMatrix columnsToMatrix(const std::vector<VecPoly>& cols, const std::vector<int>& rowDeg,
                             const Ring& R) {
  std::vector<int> colDeg;
  colDeg.reserve(cols.size());
  for (const auto& c : cols) colDeg.push_back(vecDegree(c, rowDeg));
  GradedMatrix M(static_cast<int>(rowDeg.size()), static_cast<int>(cols.size()), rowDeg, colDeg);
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < M.rows; ++i) M.at(i, static_cast<int>(j)) = cols[j].c[i];
  checkHomogeneous(M, R);
  return M;
}

void deleteRow(GradedMatrix& M, int i) {
  GradedMatrix out(M.rows - 1, M.cols, {}, M.colDeg);
  out.rowDeg = M.rowDeg;
  out.rowDeg.erase(out.rowDeg.begin() + i);
  for (int r = 0, rr = 0; r < M.rows; ++r) {
    if (r == i) continue;
    for (int c = 0; c < M.cols; ++c) out.at(rr, c) = std::move(M.at(r, c));
    ++rr;
  }
  M = std::move(out);
}

void deleteCol(GradedMatrix& M, int j) {
  GradedMatrix out(M.rows, M.cols - 1, M.rowDeg, {});
  out.colDeg = M.colDeg;
  out.colDeg.erase(out.colDeg.begin() + j);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0, cc = 0; c < M.cols; ++c) {
      if (c == j) continue;
      out.at(r, cc++) = std::move(M.at(r, c));
    }
  M = std::move(out);
}

bool rowIsZero(const GradedMatrix& M, int i) {
  for (int c = 0; c < M.cols; ++c)
    if (!M.at(i, c).isZero()) return false;
  return true;
}

bool colIsZero(const GradedMatrix& M, int j) {
  for (int r = 0; r < M.rows; ++r)
    if (!M.at(r, j).isZero()) return false;
  return true;
}

// Split off trivial R -> R summands until no matrix has a degree-0 entry.
// Cancellation coefficients are polynomials in general.
void pruneComplex(Complex& cx, const Ring& R) {
  bool found = true;
  while (found) {
    found = false;
    for (size_t l = 0; l < cx.d.size() && !found; ++l) {
      GradedMatrix& A = cx.d[l];
      for (int i = 0; i < A.rows && !found; ++i) {
        for (int j = 0; j < A.cols && !found; ++j) {
          const Poly& e = A.at(i, j);
          if (e.isZero() || A.colDeg[j] != A.rowDeg[i]) continue;
          found = true;
          uint32_t inv = R.field.inv(e.t.front().c);

          // clear row i by column operations; compensate rows of d[l+1]
          for (int c = 0; c < A.cols; ++c) {
            if (c == j || A.at(i, c).isZero()) continue;
            Poly lam = polyScale(A.at(i, c), inv, R);
            for (int r = 0; r < A.rows; ++r)
              A.at(r, c) = polySub(A.at(r, c), polyMul(lam, A.at(r, j), R), R);
            if (l + 1 < cx.d.size()) {
              GradedMatrix& B = cx.d[l + 1];
              for (int cc = 0; cc < B.cols; ++cc)
                B.at(j, cc) = polyAdd(B.at(j, cc), polyMul(lam, B.at(c, cc), R), R);
            }
          }
          // clear column j by row operations; compensate columns of d[l-1];
          // row i is zero outside the pivot now, so only column j changes
          for (int r = 0; r < A.rows; ++r) {
            if (r == i || A.at(r, j).isZero()) continue;
            Poly mu = polyScale(A.at(r, j), inv, R);
            A.at(r, j) = polySub(A.at(r, j), polyMul(mu, A.at(i, j), R), R);
            if (l >= 1) {
              GradedMatrix& C = cx.d[l - 1];
              for (int rr = 0; rr < C.rows; ++rr)
                C.at(rr, i) = polyAdd(C.at(rr, i), polyMul(mu, C.at(rr, r), R), R);
            }
          }

          if (l + 1 < cx.d.size() && !rowIsZero(cx.d[l + 1], j))
            throw std::logic_error("pruneComplex: surviving row after cancellation");
          if (l >= 1 && !colIsZero(cx.d[l - 1], i))
            throw std::logic_error("pruneComplex: surviving column after cancellation");

          deleteRow(A, i);
          deleteCol(A, j);
          if (l + 1 < cx.d.size()) deleteRow(cx.d[l + 1], j);
          if (l >= 1) deleteCol(cx.d[l - 1], i);
          cx.deg[l].erase(cx.deg[l].begin() + i);
          cx.deg[l + 1].erase(cx.deg[l + 1].begin() + j);
        }
      }
    }
  }
  // drop empty tail levels
  while (!cx.d.empty() && cx.d.back().cols == 0) {
    cx.d.pop_back();
    cx.deg.pop_back();
  }
}

}  // namespace

BettiTable minimalFreeResolution(Ideal& I, int lengthBound, const Ring& R) {
  BettiTable table;
  const auto& gb = groebnerBasis(I, R);
  if (gb.empty()) return table;  // zero ideal: nothing to resolve

  Complex cx;
  std::vector<VecPoly> cols;
  cols.reserve(gb.size());
  for (const Poly& g : gb) {
    VecPoly v(1);
    v.c[0] = g;
    cols.push_back(std::move(v));
  }
  ModuleOrder ord = ModuleOrder::trivial(1);
  std::vector<int> ambientDeg{0};

  int level = 0;
  while (true) {
    sortColumns(cols, ord, R);
    std::vector<int> colDegs;
    colDegs.reserve(cols.size());
    for (const auto& c : cols) colDegs.push_back(vecDegree(c, ambientDeg));
    if (level > 0) cx.d.push_back(columnsToMatrix(cols, ambientDeg, R));
    cx.deg.push_back(colDegs);

    std::vector<VecPoly> next = syzygiesOfGB(cols, ord, R);
    ModuleOrder nextOrd = schreyerOrder(cols, ord, R);
    next = moduleInterreduce(std::move(next), nextOrd, R);
    if (next.empty()) break;
    if (level + 1 > lengthBound) {
      table.complete = false;
      break;
    }
    ambientDeg = colDegs;
    ord = nextOrd;
    cols = std::move(next);
    ++level;
    if (level > R.nvars + 2) throw std::logic_error("minimalFreeResolution: runaway iteration");
  }

  pruneComplex(cx, R);

  table.length = static_cast<int>(cx.deg.size()) - 1;
  for (size_t l = 0; l < cx.deg.size(); ++l)
    for (int d : cx.deg[l]) ++table.beta[{static_cast<int>(l), d}];
  return table;
}

std::vector<int> minimalGeneratorDegrees(const Ideal& I, const Ring& R) {
  std::vector<VecPoly> gens;
  gens.reserve(I.gens.size());
  for (const Poly& g : I.gens) {
    if (g.isZero()) continue;
    VecPoly v(1);
    v.c[0] = g;
    gens.push_back(std::move(v));
  }
  ModuleOrder ord = ModuleOrder::trivial(1);
  std::vector<int> compDeg{0};
  std::vector<int> keep = trimGenerators(gens, ord, compDeg, R);
  std::vector<int> degs;
  degs.reserve(keep.size());
  for (int i : keep) degs.push_back(vecDegree(gens[i], compDeg));
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::string formatBetti(const BettiTable& b) {
  if (b.beta.empty()) return "(empty)\n";
  int imax = 0, rowMin = 0, rowMax = 0;
  bool first = true;
  for (auto& [ij, r] : b.beta) {
    (void)r;
    imax = std::max(imax, ij.first);
    int row = ij.second - ij.first;
    if (first) {
      rowMin = rowMax = row;
      first = false;
    } else {
      rowMin = std::min(rowMin, row);
      rowMax = std::max(rowMax, row);
    }
  }
  std::vector<long long> totals(imax + 1, 0);
  for (auto& [ij, r] : b.beta) totals[ij.first] += r;

  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= imax; ++i) os << " " << i << "\t";
  os << "\n";
  os << "total:";
  for (int i = 0; i <= imax; ++i) os << " " << totals[i] << "\t";
  os << "\n";
  for (int row = rowMin; row <= rowMax; ++row) {
    os << row << ":    ";
    for (int i = 0; i <= imax; ++i) {
      long long v = b.at(i, row + i);
      if (v)
        os << " " << v << "\t";
      else
        os << " .\t";
    }
    os << "\n";
  }
  if (!b.complete) os << "(truncated at length bound; higher syzygies not shown)\n";
  return os.str();
}

}  // namespace gn
