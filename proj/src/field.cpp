#include "gn/field.hpp"

#include <atomic>

#include "gn/parallel.hpp"

namespace gn {

bool isPrime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // extended Euclid on (a, p)
  int64_t t = 0, newt = 1;
  int64_t r = p_, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint32_t result = 1 % p_;
  uint32_t base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace gn

namespace gn::parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }
void setEnabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

}  // namespace gn::parallel
