#include "gn/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gn {

namespace {

using IPoly = std::vector<long long>;  // ascending in t

void ipAddInto(IPoly& a, const IPoly& b, int shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

IPoly ipMul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void ipTrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// drop multiples; gens end up a minimal generating set
void interreduceMonomials(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> kept;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& k : kept)
      if (monDivides(k, m)) {
        red = true;
        break;
      }
    if (!red) kept.push_back(m);
  }
  g.swap(kept);
}

IPoly hnRec(std::vector<Monomial> g, int nvars) {
  if (g.empty()) return {1};
  if (g.size() == 1) {
    IPoly r(g[0].deg + 1, 0);
    r[0] = 1;
    r[g[0].deg] -= 1;
    return r;
  }

  // pure powers form a regular sequence
  bool purePowers = true;
  for (const auto& m : g) {
    int support = 0;
    for (int i = 0; i < nvars; ++i)
      if (m.e[i]) ++support;
    if (support > 1) {
      purePowers = false;
      break;
    }
  }
  if (purePowers) {
    IPoly r{1};
    for (const auto& m : g) {
      IPoly f(m.deg + 1, 0);
      f[0] = 1;
      f[m.deg] -= 1;
      r = ipMul(r, f);
    }
    return r;
  }

  // split into variable-disjoint groups
  {
    std::vector<int> comp(nvars, -1);
    int nc = 0;
    std::vector<int> parent(nvars);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& m : g) {
      int first = -1;
      for (int i = 0; i < nvars; ++i) {
        if (!m.e[i]) continue;
        if (first < 0)
          first = i;
        else
          parent[find(i)] = find(first);
      }
    }
    for (const auto& m : g)
      for (int i = 0; i < nvars; ++i)
        if (m.e[i] && comp[find(i)] < 0) comp[find(i)] = nc++;
    if (nc > 1) {
      std::vector<std::vector<Monomial>> groups(nc);
      for (const auto& m : g) {
        for (int i = 0; i < nvars; ++i)
          if (m.e[i]) {
            groups[comp[find(i)]].push_back(m);
            break;
          }
      }
      bool nontrivial = true;
      for (auto& gr : groups)
        if (gr.size() == g.size()) nontrivial = false;
      if (nontrivial) {
        IPoly r{1};
        for (auto& gr : groups) r = ipMul(r, hnRec(std::move(gr), nvars));
        return r;
      }
    }
  }

  // pivot on the most frequent variable
  int pivot = 0, bestCount = -1;
  for (int i = 0; i < nvars; ++i) {
    int cnt = 0;
    for (const auto& m : g)
      if (m.e[i]) ++cnt;
    if (cnt > bestCount) {
      bestCount = cnt;
      pivot = i;
    }
  }

  // N(I) = N(I + (x)) + t * N(I : x)
  std::vector<Monomial> added;
  added.push_back(Monomial::variable(pivot));
  for (const auto& m : g)
    if (!m.e[pivot]) added.push_back(m);

  std::vector<Monomial> colon;
  colon.reserve(g.size());
  for (const auto& m : g) {
    Monomial c = m;
    if (c.e[pivot]) {
      c.e[pivot] -= 1;
      c.deg -= 1;
    }
    colon.push_back(c);
  }
  interreduceMonomials(colon);

  IPoly r = hnRec(std::move(added), nvars);
  IPoly rc = hnRec(std::move(colon), nvars);
  ipAddInto(r, rc, 1);
  ipTrim(r);
  return r;
}

}  // namespace

std::vector<long long> hilbertNumeratorMonomial(std::vector<Monomial> gens, int nvars) {
  interreduceMonomials(gens);
  IPoly r = hnRec(std::move(gens), nvars);
  ipTrim(r);
  if (r.empty()) r = {0};
  return r;
}

HilbertSeries hilbertSeriesOfLeadingTerms(Ideal& I, const Ring& R) {
  const auto& gb = groebnerBasis(I, R);
  std::vector<Monomial> lead;
  lead.reserve(gb.size());
  for (const Poly& g : gb) lead.push_back(g.lm());
  HilbertSeries hs;
  hs.nvars = R.nvars;
  hs.numerator = hilbertNumeratorMonomial(std::move(lead), R.nvars);
  return hs;
}

long long hilbertFunction(const HilbertSeries& hs, int m) {
  if (m < 0) return 0;
  long long v = 0;
  for (size_t j = 0; j < hs.numerator.size(); ++j) {
    if (static_cast<int>(j) > m) break;
    v += hs.numerator[j] * binomial(m - static_cast<long long>(j) + hs.nvars - 1, hs.nvars - 1);
  }
  return v;
}

SchemeInvariants schemeInvariants(const HilbertSeries& hs) {
  SchemeInvariants inv;
  IPoly q = hs.numerator;
  ipTrim(q);
  if (q.empty()) {
    // R/I = 0
    inv.unitIdeal = true;
    inv.emptyScheme = true;
    inv.codim = hs.nvars;
    return inv;
  }
  // cancel (1-t) factors: q(1) == 0 means divisible
  int cancels = 0;
  while (true) {
    long long at1 = std::accumulate(q.begin(), q.end(), 0LL);
    if (at1 != 0) break;
    // divide by (1 - t): synthetic division
    IPoly d(q.size() - 1, 0);
    long long carry = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      carry += q[i];
      d[i] = carry;
    }
    q = std::move(d);
    ipTrim(q);
    ++cancels;
    if (q.empty()) throw std::logic_error("hilbert: numerator vanished");
  }
  inv.krullDim = hs.nvars - cancels;
  inv.dimension = inv.krullDim - 1;
  inv.codim = (hs.nvars - 1) - inv.dimension;
  inv.degree = std::accumulate(q.begin(), q.end(), 0LL);
  if (inv.krullDim == 0) {
    inv.emptyScheme = true;
    inv.hilbertPolynomial = {};
    return inv;
  }
  int D = inv.krullDim;
  RatPoly hp;
  for (size_t j = 0; j < q.size(); ++j) {
    if (!q[j]) continue;
    hp = rpAdd(hp, rpScale(binomialPoly(D - 1 - static_cast<long long>(j), D - 1), Rat(q[j])));
  }
  inv.hilbertPolynomial = hp;
  // leading coefficient * dim! must reproduce the degree
  if (inv.dimension >= 0 && !hp.empty()) {
    long long fact = 1;
    for (int i = 2; i <= inv.dimension; ++i) fact *= i;
    Rat lead = hp.back() * Rat(fact);
    if (!lead.isInteger() || lead.num != inv.degree)
      throw std::logic_error("hilbert: degree/leading-coefficient mismatch");
  }
  return inv;
}

SchemeInvariants schemeInvariants(Ideal& I, const Ring& R) {
  return schemeInvariants(hilbertSeriesOfLeadingTerms(I, R));
}

RatPoly hilbertPolynomial(Ideal& I, const Ring& R) {
  return schemeInvariants(I, R).hilbertPolynomial;
}

int codimension(Ideal& I, const Ring& R) {
  SchemeInvariants inv = schemeInvariants(I, R);
  if (inv.unitIdeal) throw std::domain_error("codimension: unit ideal (empty scheme)");
  return inv.codim;
}

long long degreeOfScheme(Ideal& I, const Ring& R) {
  SchemeInvariants inv = schemeInvariants(I, R);
  if (inv.emptyScheme) throw std::domain_error("degreeOfScheme: empty scheme");
  return inv.degree;
}

}  // namespace gn
