#include "circulant/modarith.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace circ {

Residue::Residue(int64_t v, int64_t modulus) : value(mod(v, modulus)), n(modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
}

bool UnitGroup::contains(int64_t x) const {
  return std::binary_search(members.begin(), members.end(), mod(x, n));
}

int64_t gcd(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

int64_t mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

int64_t mul_mod(int64_t a, int64_t b, int64_t n) {
  a = mod(a, n);
  b = mod(b, n);
  __int128 p = static_cast<__int128>(a) * b;
  return static_cast<int64_t>(p % n);
}

int64_t totient(int64_t n) {
  int64_t result = n;
  int64_t x = n;
  for (int64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

bool is_unit(int64_t n, int64_t x) { return gcd(n, mod(x, n)) == 1; }

int64_t inverse_unit(int64_t n, int64_t x) {
  int64_t a = mod(x, n), b = n;
  int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    int64_t q = a / b;
    int64_t r = a - q * b;
    a = b;
    b = r;
    int64_t s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (a != 1) throw DomainError("not a unit mod " + std::to_string(n));
  return mod(s0, n);
}

std::vector<int64_t> reflexive_reduce(const std::vector<int64_t>& values,
                                      int64_t n) {
  if (n < 3) throw DomainError("order must be at least 3");
  std::vector<int64_t> out;
  out.reserve(values.size());
  for (int64_t v : values) {
    int64_t r = mod(v, n);
    if (r == 0)
      throw DomainError("value " + std::to_string(v) + " reduces to 0 mod " +
                        std::to_string(n));
    if (2 * r > n) r = n - r;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UnitGroup units(int64_t n) {
  if (n < 3) throw DomainError("order must be at least 3");
  UnitGroup g;
  g.n = n;
  for (int64_t x = 1; x < n; ++x)
    if (gcd(n, x) == 1) g.members.push_back(x);
  return g;
}

std::vector<int64_t> cube_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t m = 2; m * m * m <= n; ++m)
    if (n % (m * m * m) == 0) out.push_back(m);
  return out;
}

}  // namespace circ
