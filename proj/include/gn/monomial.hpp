#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "gn/field.hpp"

namespace gn {

// Enough for P^8 (nine variables) plus an elimination auxiliary.
inline constexpr int kMaxVars = 12;

// Dense exponent vector with cached total degree. The number of active
// variables is carried by the ambient Ring; unused slots stay zero.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  static Monomial one() { return {}; }
  static Monomial variable(int i, uint16_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }
  bool isOne() const { return deg == 0; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// grevlex is the working order; ElimLast is the block order that makes the
// last ring variable dominate (used to eliminate a saturation auxiliary).
enum class MonOrder { Grevlex, ElimLast };

struct Ring {
  int nvars;
  PrimeField field;
  MonOrder order = MonOrder::Grevlex;

  Ring(int n, PrimeField f = PrimeField(101), MonOrder o = MonOrder::Grevlex)
      : nvars(n), field(f), order(o) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("Ring: bad variable count");
  }
};

inline Monomial monMul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    if (s > 0xffff) throw std::overflow_error("Monomial: exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

inline bool monDivides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial monDiv(const Monomial& a, const Monomial& b) {
  // a / b, assumes b | a
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

inline Monomial monLcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool monCoprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// grevlex on variables [0, n): ties in total degree break at the last
// differing variable, smaller exponent wins.
inline int grevlexCmp(const Monomial& a, const Monomial& b, int n) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = n - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

// >0 if a > b under the ring order
inline int monCmp(const Monomial& a, const Monomial& b, const Ring& R) {
  if (R.order == MonOrder::Grevlex) return grevlexCmp(a, b, R.nvars);
  // ElimLast: exponent of the last variable first, grevlex on the rest
  int last = R.nvars - 1;
  if (a.e[last] != b.e[last]) return a.e[last] > b.e[last] ? 1 : -1;
  return grevlexCmp(a, b, last);
}

inline uint32_t supportMask(const Monomial& m, int n) {
  uint32_t s = 0;
  for (int i = 0; i < n; ++i)
    if (m.e[i]) s |= 1u << i;
  return s;
}

std::string monToString(const Monomial& m, int nvars);

}  // namespace gn
