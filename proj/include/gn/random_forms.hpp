#pragma once

#include <cstdint>

#include "gn/bundles.hpp"
#include "gn/graded_matrix.hpp"
#include "gn/polynomial.hpp"

namespace gn {

// splitmix64: tiny deterministic stream, identical across platforms
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform on [0, p), rejection sampled
  uint32_t uniform(uint32_t p) {
    uint64_t lim = UINT64_MAX - UINT64_MAX % p;
    uint64_t v;
    do {
      v = next();
    } while (v >= lim);
    return static_cast<uint32_t>(v % p);
  }
};

// all monomials of the given total degree in r+1 variables, descending under
// the ring order
std::vector<Monomial> monomialsOfDegree(int degree, int nvars, const Ring& R);

// homogeneous form with coefficients drawn from the stream (uniform over F_p,
// zero included), one draw per monomial in descending order
Poly randomFormStream(int degree, SplitMix64& rng, const Ring& R);
Poly randomForm(int degree, uint64_t seed, int r, const Ring& R);

// rank(F) x rank(E) matrix of a random morphism E -> F; entry (i,j) is a
// random form of degree twist(F)_i - twist(E)_j, zero when that is negative.
// Entries consume one stream row-major.
GradedMatrix morphismMatrix(const SplitBundle& E, const SplitBundle& F, uint64_t seed, int r,
                            const Ring& R);

}  // namespace gn
