#include "gn/gn_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gn/random_forms.hpp"
#include "gn/saturation.hpp"

namespace gn {

GradedFreeModule schurTerm(const SplitBundle& B, int e) {
  if (B.rank() != e) throw std::invalid_argument("schurTerm: rank mismatch");
  if (e < 3) throw std::invalid_argument("schurTerm: need rank >= 3");
  // semistandard tableaux of shape (2, 1^(e-2)) with entries in 0..e-1:
  // first column strictly increasing (c_0 < ... < c_{e-2}), second box in the
  // top row weakly larger than c_0
  GradedFreeModule out;
  auto columns = subsetsOfSize(e, e - 1);
  for (const auto& col : columns) {
    int sum = 0;
    for (int c : col) sum += B.twists[c];
    for (int v = col[0]; v < e; ++v) out.push_back(sum + B.twists[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComplexShape gnShape(const SplitBundle& E, const SplitBundle& F) {
  int e = E.rank();
  if (F.rank() != e) throw std::invalid_argument("gnShape: ranks differ");
  if (e < 3) throw std::invalid_argument("gnShape: need rank >= 3");
  long long c1L = E.c1() - F.c1();

  ComplexShape s;
  s.terms[0] = {0};
  // wedge^{e-1}E x wedge^{e-1}F^*
  {
    GradedFreeModule t;
    for (int j = 0; j < e; ++j)
      for (int i = 0; i < e; ++i)
        t.push_back(static_cast<int>(E.c1() - E.twists[j] - F.c1() + F.twists[i]));
    std::sort(t.begin(), t.end());
    s.terms[1] = std::move(t);
  }
  // det E x S(F^*) + det F^* x S(E)
  {
    GradedFreeModule t;
    for (int a : schurTerm(F.dual(), e)) t.push_back(static_cast<int>(E.c1()) + a);
    for (int a : schurTerm(E, e)) t.push_back(static_cast<int>(-F.c1()) + a);
    std::sort(t.begin(), t.end());
    s.terms[2] = std::move(t);
  }
  // E x F^* x L
  {
    GradedFreeModule t;
    for (int a : E.twists)
      for (int b : F.twists) t.push_back(static_cast<int>(a - b + c1L));
    std::sort(t.begin(), t.end());
    s.terms[3] = std::move(t);
  }
  s.terms[4] = {static_cast<int>(2 * c1L)};

  size_t rank2 = static_cast<size_t>(2 * e * e - 2);
  if (s.terms[1].size() != static_cast<size_t>(e * e) || s.terms[2].size() != rank2 ||
      s.terms[3].size() != static_cast<size_t>(e * e))
    throw std::logic_error("gnShape: rank sequence violated");
  return s;
}

bool shapeSelfDual(const ComplexShape& s, long long c1L) {
  for (int i = 0; i <= 4; ++i) {
    GradedFreeModule dual;
    for (int t : s.terms[4 - i]) dual.push_back(static_cast<int>(-t + 2 * c1L));
    std::sort(dual.begin(), dual.end());
    if (dual != s.terms[i]) return false;
  }
  return true;
}

std::string shapeToString(const ComplexShape& s) {
  std::ostringstream os;
  os << "0";
  for (int i = 4; i >= 0; --i) {
    os << " -> ";
    // group twists, descending twist value
    const auto& t = s.terms[i];
    std::vector<std::pair<int, int>> groups;  // twist, count
    for (int v : t) {
      if (!groups.empty() && groups.back().first == v)
        ++groups.back().second;
      else
        groups.push_back({v, 1});
    }
    std::reverse(groups.begin(), groups.end());
    bool first = true;
    for (auto& [tw, cnt] : groups) {
      if (!first) os << " + ";
      first = false;
      os << "O";
      if (cnt > 1) os << "^" << cnt;
      if (tw != 0) os << "(" << tw << ")";
    }
  }
  return os.str();
}

namespace {

Poly cofactor(const GradedMatrix& M, int i, int j, const Ring& R) {
  int e = M.rows;
  GradedMatrix sub(e - 1, e - 1, {}, {});
  sub.rowDeg.clear();
  sub.colDeg.clear();
  for (int r = 0; r < e; ++r)
    if (r != i) sub.rowDeg.push_back(M.rowDeg[r]);
  for (int c = 0; c < e; ++c)
    if (c != j) sub.colDeg.push_back(M.colDeg[c]);
  for (int r = 0, rr = 0; r < e; ++r) {
    if (r == i) continue;
    for (int c = 0, cc = 0; c < e; ++c) {
      if (c == j) continue;
      sub.at(rr, cc++) = M.at(r, c);
    }
    ++rr;
  }
  Poly d = determinant(sub, R);
  if ((i + j) % 2 == 1) d = polyNeg(d, R);
  return d;
}

}  // namespace

GNDifferentials gnDifferentials(const GradedMatrix& M, const Ring& R) {
  int e = M.rows;
  if (M.cols != e) throw std::invalid_argument("gnDifferentials: matrix not square");
  if (e < 3) throw std::invalid_argument("gnDifferentials: need size >= 3");
  if (static_cast<uint32_t>(e) % R.field.modulus() == 0)
    throw std::invalid_argument("gnDifferentials: characteristic divides the rank");
  checkHomogeneous(M, R);

  // sheaf twists of source (a) and target (b) from the generator degrees
  std::vector<long long> a(e), b(e);
  for (int j = 0; j < e; ++j) a[j] = -M.colDeg[j];
  for (int i = 0; i < e; ++i) b[i] = -M.rowDeg[i];
  long long sumA = std::accumulate(a.begin(), a.end(), 0LL);
  long long sumB = std::accumulate(b.begin(), b.end(), 0LL);
  long long shift = sumB - sumA;  // = -c1(L)

  // generator degrees of the four middle modules
  std::vector<int> g1(e * e), g3(e * e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      g1[i * e + j] = static_cast<int>(a[j] - b[i] + shift);  // Hom(E,F) x L
      g3[j * e + i] = static_cast<int>(b[i] - a[j] + shift);  // Hom(F,E) x L
    }
  // W basis: E off-diagonals, F off-diagonals, E diagonal differences,
  // F diagonal differences
  struct WBasis {
    int kind;  // 0 E-off, 1 F-off, 2 E-diag, 3 F-diag
    int u, v;  // off-diagonal position or diagonal index in u
  };
  std::vector<WBasis> wbasis;
  std::vector<int> g2;
  for (int u = 0; u < e; ++u)
    for (int v = 0; v < e; ++v)
      if (u != v) {
        wbasis.push_back({0, u, v});
        g2.push_back(static_cast<int>(a[v] - a[u] + shift));
      }
  for (int u = 0; u < e; ++u)
    for (int v = 0; v < e; ++v)
      if (u != v) {
        wbasis.push_back({1, u, v});
        g2.push_back(static_cast<int>(b[v] - b[u] + shift));
      }
  for (int k = 0; k + 1 < e; ++k) {
    wbasis.push_back({2, k, 0});
    g2.push_back(static_cast<int>(shift));
  }
  for (int k = 0; k + 1 < e; ++k) {
    wbasis.push_back({3, k, 0});
    g2.push_back(static_cast<int>(shift));
  }
  int wRank = static_cast<int>(wbasis.size());

  // adjugate entries: adj_{ji} = cofactor(i, j)
  std::vector<Poly> cof(static_cast<size_t>(e) * e);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) cof[static_cast<size_t>(i) * e + j] = cofactor(M, i, j, R);

  GNDifferentials D;

  // d1: Hom(E,F) x L -> O, Y |-> tr(adj(M) Y)
  D.d1 = GradedMatrix(1, e * e, {0}, g1);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) D.d1.at(0, i * e + j) = cof[static_cast<size_t>(i) * e + j];

  // d2: W x L -> Hom(E,F) x L, (A,B) |-> M A - B M
  D.d2 = GradedMatrix(e * e, wRank, g1, g2);
  for (int w = 0; w < wRank; ++w) {
    const WBasis& wb = wbasis[w];
    if (wb.kind == 0) {
      // M * E^E_{uv}: column v of the image is column u of M
      for (int i = 0; i < e; ++i) D.d2.at(i * e + wb.v, w) = M.at(i, wb.u);
    } else if (wb.kind == 1) {
      // -E^F_{uv} * M: row u of the image is -row v of M
      for (int j = 0; j < e; ++j) D.d2.at(wb.u * e + j, w) = polyNeg(M.at(wb.v, j), R);
    } else if (wb.kind == 2) {
      int k = wb.u;
      for (int i = 0; i < e; ++i) {
        D.d2.at(i * e + k, w) = M.at(i, k);
        D.d2.at(i * e + k + 1, w) = polyNeg(M.at(i, k + 1), R);
      }
    } else {
      int k = wb.u;
      for (int j = 0; j < e; ++j) {
        D.d2.at(k * e + j, w) = polyNeg(M.at(k, j), R);
        D.d2.at((k + 1) * e + j, w) = M.at(k + 1, j);
      }
    }
  }

  // d3: Hom(F,E) x L -> W x L, X |-> (X M, M X) in W coordinates; the
  // diagonal parts need division by e
  uint32_t invE = R.field.inv(static_cast<uint32_t>(e % R.field.modulus()));
  D.d3 = GradedMatrix(wRank, e * e, g2, g3);
  for (int j = 0; j < e; ++j)
    for (int i = 0; i < e; ++i) {
      int col = j * e + i;  // X = E^{EF}_{ji}
      for (int w = 0; w < wRank; ++w) {
        const WBasis& wb = wbasis[w];
        if (wb.kind == 0) {
          // (X M)_{uv} = delta_{u,j} M_{i,v}
          if (wb.u == j) D.d3.at(w, col) = M.at(i, wb.v);
        } else if (wb.kind == 1) {
          // (M X)_{uv} = M_{u,j} delta_{v,i}
          if (wb.v == i) D.d3.at(w, col) = M.at(wb.u, j);
        } else if (wb.kind == 2) {
          // alpha_k = M_{ij} ([k >= j] - (k+1)/e)
          int k = wb.u;
          long long num = (k >= j ? e : 0) - (k + 1);
          uint32_t sc = R.field.mul(R.field.fromSigned(num), invE);
          if (sc) D.d3.at(w, col) = polyScale(M.at(i, j), sc, R);
        } else {
          int k = wb.u;
          long long num = (k >= i ? e : 0) - (k + 1);
          uint32_t sc = R.field.mul(R.field.fromSigned(num), invE);
          if (sc) D.d3.at(w, col) = polyScale(M.at(i, j), sc, R);
        }
      }
    }

  // d4: L^2 -> Hom(F,E) x L, 1 |-> adj(M)
  D.d4 = GradedMatrix(e * e, 1, g3, {static_cast<int>(2 * shift)});
  for (int j = 0; j < e; ++j)
    for (int i = 0; i < e; ++i) D.d4.at(j * e + i, 0) = cof[static_cast<size_t>(i) * e + j];

  checkHomogeneous(D.d1, R);
  checkHomogeneous(D.d2, R);
  checkHomogeneous(D.d3, R);
  checkHomogeneous(D.d4, R);
  return D;
}

Ideal gnIdeal(const GradedMatrix& M, const Ring& R) {
  if (M.rows != M.cols) throw std::invalid_argument("gnIdeal: matrix not square");
  std::vector<Poly> gens = minors(M, M.rows - 1, R);
  std::vector<Poly> nonzero;
  for (auto& g : gens)
    if (!g.isZero()) nonzero.push_back(std::move(g));
  return Ideal(std::move(nonzero));
}

GradedMatrix eulerAugmentedMatrix(const SplitBundle& E, int r, uint64_t seed, const Ring& R) {
  if (E.rank() != r) throw std::invalid_argument("eulerAugmentedMatrix: need rank(E) = r");
  SplitBundle lines = SplitBundle::trivial(r + 1, 1);
  GradedMatrix phi = morphismMatrix(E, lines, seed, r, R);
  GradedMatrix aug(r + 1, r + 1, phi.rowDeg, phi.colDeg);
  aug.colDeg.push_back(0);
  aug.a.assign(static_cast<size_t>(r + 1) * (r + 1), Poly{});
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < r; ++j) aug.at(i, j) = phi.at(i, j);
    aug.at(i, r) = polyVariable(i, R);
  }
  checkHomogeneous(aug, R);
  return aug;
}

Ideal eulerMinorsIdeal(const SplitBundle& E, int r, uint64_t seed, const Ring& R) {
  GradedMatrix aug = eulerAugmentedMatrix(E, r, seed, R);
  std::vector<Poly> gens = minors(aug, r, R);
  std::vector<Poly> nonzero;
  for (auto& g : gens)
    if (!g.isZero()) nonzero.push_back(std::move(g));
  return Ideal(std::move(nonzero));
}

Ideal eulerConstruction(const SplitBundle& E, int r, uint64_t seed, const Ring& R) {
  Ideal raw = eulerMinorsIdeal(E, r, seed, R);
  // work from the reduced basis; the saturation runs take it from there
  Ideal based(groebnerBasis(raw, R));
  based.gb = based.gens;
  return saturate(based, R);
}

}  // namespace gn
