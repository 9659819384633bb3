#pragma once

#include <cstdint>
#include <stdexcept>

namespace gn {

bool isPrime(uint32_t n);

// Arithmetic in Z/p for a prime modulus p. Elements are uint32_t values
// reduced into [0, p); the default modulus is 101.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p = 101) : p_(p) {
    if (!isPrime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
  }

  uint32_t modulus() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;

  // canonical image of a signed integer
  uint32_t fromSigned(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

}  // namespace gn
