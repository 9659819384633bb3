#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gn {

// Exact rational on int64 with __int128 intermediates. The values handled
// here (Chern coefficients, Hilbert polynomial coefficients) stay tiny;
// overflow throws rather than wrapping.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  static Rat fromI128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("Rat: overflow");
    Rat r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d == 0 ? 1 : d);
    if (r.num == 0) r.den = 1;
    return r;
  }

  bool isZero() const { return num == 0; }
  bool isInteger() const { return den == 1; }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }

  Rat operator+(const Rat& o) const {
    return fromI128(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
  }
  Rat operator-(const Rat& o) const {
    return fromI128(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
  }
  Rat operator*(const Rat& o) const {
    return fromI128(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
  }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw std::domain_error("Rat: division by zero");
    return fromI128(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
  }
  Rat operator-() const {
    Rat r = *this;
    r.num = -r.num;
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
  }
};

// Dense univariate polynomial with rational coefficients, ascending powers,
// trailing zeros trimmed. Used for Hilbert polynomials and Chern series work.
using RatPoly = std::vector<Rat>;

inline void rpTrim(RatPoly& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

inline int rpDegree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rpAdd(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    Rat v;
    if (i < a.size()) v = v + a[i];
    if (i < b.size()) v = v + b[i];
    r[i] = v;
  }
  rpTrim(r);
  return r;
}

inline RatPoly rpScale(const RatPoly& a, const Rat& c) {
  if (c.isZero()) return {};
  RatPoly r = a;
  for (auto& v : r) v = v * c;
  return r;
}

inline RatPoly rpMul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  rpTrim(r);
  return r;
}

inline Rat rpEval(const RatPoly& p, const Rat& x) {
  Rat v;
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// binomial coefficient C(x + shift, k) as a polynomial in x
inline RatPoly binomialPoly(long long shift, int k) {
  RatPoly r{Rat(1)};
  for (int i = 0; i < k; ++i) {
    // multiply by (x + shift - i)
    RatPoly lin{Rat(shift - i), Rat(1)};
    r = rpMul(r, lin);
  }
  long long fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  return rpScale(r, Rat(1, fact));
}

// combinatorial binomial C(n, k), zero for n < k or n < 0
inline long long binomial(long long n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  if (r > INT64_MAX) throw std::overflow_error("binomial: overflow");
  return static_cast<long long>(r);
}

std::string ratPolyToString(const RatPoly& p, const std::string& var = "x");

}  // namespace gn
