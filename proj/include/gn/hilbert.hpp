#pragma once

#include "gn/groebner.hpp"
#include "gn/rational.hpp"

namespace gn {

// Hilbert series numerator of R/I over (1-t)^nvars, integer coefficients
// ascending in t. Computed from the lead-term ideal of a Groebner basis
// (Macaulay's principle), via the standard pivot recursion on monomial
// generators.
struct HilbertSeries {
  std::vector<long long> numerator;
  int nvars = 0;
};

std::vector<long long> hilbertNumeratorMonomial(std::vector<Monomial> gens, int nvars);

HilbertSeries hilbertSeriesOfLeadingTerms(Ideal& I, const Ring& R);

// dim_k (R/I)_m, exact for every m >= 0
long long hilbertFunction(const HilbertSeries& hs, int m);

// Everything the series determines about the projective scheme Proj(R/I)
// in P^(nvars-1).
struct SchemeInvariants {
  bool unitIdeal = false;       // R/I = 0
  bool emptyScheme = false;     // dim R/I = 0 (unit ideal or irrelevant-primary)
  int krullDim = 0;             // of R/I
  int dimension = -1;           // projective dimension, krullDim - 1
  int codim = 0;                // in P^(nvars-1)
  long long degree = 0;
  RatPoly hilbertPolynomial;    // chi(O_X(x))
};

SchemeInvariants schemeInvariants(const HilbertSeries& hs);
SchemeInvariants schemeInvariants(Ideal& I, const Ring& R);

RatPoly hilbertPolynomial(Ideal& I, const Ring& R);
int codimension(Ideal& I, const Ring& R);       // throws on the unit ideal
long long degreeOfScheme(Ideal& I, const Ring& R);

}  // namespace gn
