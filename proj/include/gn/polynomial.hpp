#pragma once

#include <string>
#include <vector>

#include "gn/monomial.hpp"

namespace gn {

struct Term {
  Monomial m;
  uint32_t c;  // nonzero, in [1, p)
};

// Sparse polynomial over F_p: nonzero terms, strictly descending monomials
// under the ring order.
struct Poly {
  std::vector<Term> t;

  bool isZero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  uint32_t lc() const { return t.front().c; }
  size_t size() const { return t.size(); }
};

Poly polyFromTerms(std::vector<Term> terms, const Ring& R);  // sorts, combines, drops zeros
Poly polyConstant(uint32_t c, const Ring& R);
Poly polyVariable(int i, const Ring& R);

Poly polyAdd(const Poly& f, const Poly& g, const Ring& R);
Poly polySub(const Poly& f, const Poly& g, const Ring& R);
Poly polyNeg(const Poly& f, const Ring& R);
Poly polyScale(const Poly& f, uint32_t c, const Ring& R);
Poly polyMulTerm(const Poly& f, const Monomial& m, uint32_t c, const Ring& R);
Poly polyMul(const Poly& f, const Poly& g, const Ring& R);
// f + c * x^m * g
Poly polyAddScaled(const Poly& f, const Poly& g, const Monomial& m, uint32_t c, const Ring& R);

bool polyEqual(const Poly& f, const Poly& g);

// total degree; -1 for the zero polynomial
int polyDegree(const Poly& f);
bool polyIsHomogeneous(const Poly& f);

Poly polyMonic(const Poly& f, const Ring& R);

// reinterpret under another ring (same variables prefix); re-sorts
Poly polyReorder(const Poly& f, const Ring& to);

std::string polyToString(const Poly& f, const Ring& R);

}  // namespace gn
