#include "gn/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "gn/rational.hpp"

namespace gn {

std::string monToString(const Monomial& m, int nvars) {
  if (m.deg == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars; ++i) {
    if (!m.e[i]) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (m.e[i] > 1) os << "^" << m.e[i];
  }
  return os.str();
}

Poly polyFromTerms(std::vector<Term> terms, const Ring& R) {
  std::sort(terms.begin(), terms.end(),
            [&R](const Term& a, const Term& b) { return monCmp(a.m, b.m, R) > 0; });
  Poly out;
  out.t.reserve(terms.size());
  for (auto& tm : terms) {
    if (!out.t.empty() && out.t.back().m == tm.m) {
      out.t.back().c = R.field.add(out.t.back().c, tm.c);
      if (out.t.back().c == 0) out.t.pop_back();
    } else if (tm.c % R.field.modulus() != 0) {
      out.t.push_back({tm.m, tm.c % R.field.modulus()});
    }
  }
  return out;
}

Poly polyConstant(uint32_t c, const Ring& R) {
  Poly f;
  c %= R.field.modulus();
  if (c) f.t.push_back({Monomial::one(), c});
  return f;
}

Poly polyVariable(int i, const Ring& R) {
  Poly f;
  f.t.push_back({Monomial::variable(i), 1 % R.field.modulus()});
  return f;
}

// merge g into f with scaling: f + c * x^m * g
Poly polyAddScaled(const Poly& f, const Poly& g, const Monomial& m, uint32_t c, const Ring& R) {
  Poly out;
  out.t.reserve(f.t.size() + g.t.size());
  size_t i = 0, j = 0;
  while (i < f.t.size() && j < g.t.size()) {
    Monomial gm = monMul(g.t[j].m, m);
    int cmp = monCmp(f.t[i].m, gm, R);
    if (cmp > 0) {
      out.t.push_back(f.t[i++]);
    } else if (cmp < 0) {
      uint32_t v = R.field.mul(g.t[j].c, c);
      if (v) out.t.push_back({gm, v});
      ++j;
    } else {
      uint32_t v = R.field.add(f.t[i].c, R.field.mul(g.t[j].c, c));
      if (v) out.t.push_back({gm, v});
      ++i;
      ++j;
    }
  }
  while (i < f.t.size()) out.t.push_back(f.t[i++]);
  while (j < g.t.size()) {
    uint32_t v = R.field.mul(g.t[j].c, c);
    if (v) out.t.push_back({monMul(g.t[j].m, m), v});
    ++j;
  }
  return out;
}

Poly polyAdd(const Poly& f, const Poly& g, const Ring& R) {
  return polyAddScaled(f, g, Monomial::one(), 1, R);
}

Poly polySub(const Poly& f, const Poly& g, const Ring& R) {
  return polyAddScaled(f, g, Monomial::one(), R.field.neg(1), R);
}

Poly polyNeg(const Poly& f, const Ring& R) {
  Poly out = f;
  for (auto& tm : out.t) tm.c = R.field.neg(tm.c);
  return out;
}

Poly polyScale(const Poly& f, uint32_t c, const Ring& R) {
  c %= R.field.modulus();
  if (c == 0) return {};
  Poly out = f;
  for (auto& tm : out.t) tm.c = R.field.mul(tm.c, c);
  return out;
}

Poly polyMulTerm(const Poly& f, const Monomial& m, uint32_t c, const Ring& R) {
  c %= R.field.modulus();
  if (c == 0) return {};
  Poly out;
  out.t.reserve(f.t.size());
  for (auto& tm : f.t) out.t.push_back({monMul(tm.m, m), R.field.mul(tm.c, c)});
  return out;
}

Poly polyMul(const Poly& f, const Poly& g, const Ring& R) {
  if (f.isZero() || g.isZero()) return {};
  const Poly& small = f.t.size() <= g.t.size() ? f : g;
  const Poly& big = f.t.size() <= g.t.size() ? g : f;
  Poly acc;
  for (auto& tm : small.t) acc = polyAddScaled(acc, big, tm.m, tm.c, R);
  return acc;
}

bool polyEqual(const Poly& f, const Poly& g) {
  if (f.t.size() != g.t.size()) return false;
  for (size_t i = 0; i < f.t.size(); ++i)
    if (f.t[i].c != g.t[i].c || f.t[i].m != g.t[i].m) return false;
  return true;
}

int polyDegree(const Poly& f) {
  int d = -1;
  for (auto& tm : f.t) d = std::max(d, static_cast<int>(tm.m.deg));
  return d;
}

bool polyIsHomogeneous(const Poly& f) {
  for (auto& tm : f.t)
    if (tm.m.deg != f.t.front().m.deg) return false;
  return true;
}

Poly polyMonic(const Poly& f, const Ring& R) {
  if (f.isZero() || f.lc() == 1) return f;
  return polyScale(f, R.field.inv(f.lc()), R);
}

Poly polyReorder(const Poly& f, const Ring& to) {
  return polyFromTerms(f.t, to);
}

std::string polyToString(const Poly& f, const Ring& R) {
  if (f.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& tm : f.t) {
    if (!first) os << " + ";
    first = false;
    if (tm.c != 1 || tm.m.deg == 0) {
      os << tm.c;
      if (tm.m.deg > 0) os << "*";
    }
    if (tm.m.deg > 0) os << monToString(tm.m, R.nvars);
  }
  return os.str();
}

std::string ratPolyToString(const RatPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    const Rat& c = p[i];
    if (c.isZero()) continue;
    Rat a = c;
    if (first) {
      if (a.num < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.num < 0 ? " - " : " + ");
      if (a.num < 0) a = -a;
    }
    first = false;
    bool unitCoef = (a.num == 1 && a.den == 1);
    if (i == 0 || !unitCoef) {
      if (a.den == 1)
        os << a.num;
      else
        os << "(" << a.num << "/" << a.den << ")";
    }
    if (i >= 1) {
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace gn
