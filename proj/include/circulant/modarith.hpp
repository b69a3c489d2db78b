#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace circ {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Element of Z_n.
struct Residue {
  int64_t value = 0;
  int64_t n = 0;

  Residue() = default;
  Residue(int64_t v, int64_t modulus);
};

struct UnitGroup {
  int64_t n = 0;
  std::vector<int64_t> members;  // ascending

  bool contains(int64_t x) const;
  std::size_t size() const { return members.size(); }
};

int64_t gcd(int64_t a, int64_t b);
int64_t mod(int64_t a, int64_t n);  // result in [0, n)
int64_t mul_mod(int64_t a, int64_t b, int64_t n);
int64_t totient(int64_t n);  // trial division
bool is_unit(int64_t n, int64_t x);
int64_t inverse_unit(int64_t n, int64_t x);

// Reduce each value mod n, fold v > n/2 to n - v, dedupe, sort.
// Throws DomainError if some value is a multiple of n.
std::vector<int64_t> reflexive_reduce(const std::vector<int64_t>& values,
                                      int64_t n);

UnitGroup units(int64_t n);

// All m > 1 with m^3 | n, ascending.
std::vector<int64_t> cube_divisors(int64_t n);

}  // namespace circ
