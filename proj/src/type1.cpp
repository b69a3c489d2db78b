#include "circulant/type1.hpp"

#include <string>

namespace circ {

std::vector<JumpSet> Type1Orbit::members() const {
  std::vector<JumpSet> out;
  for (const auto& [s, x] : witness) out.push_back({n, s});
  return out;
}

std::vector<int64_t> multiply(int64_t n, const std::vector<int64_t>& R, int64_t x) {
  if (!is_unit(n, x))
    throw DomainError(std::to_string(x) + " is not a unit mod " + std::to_string(n));
  std::vector<int64_t> prod;
  prod.reserve(R.size());
  for (int64_t r : R) prod.push_back(mul_mod(x, r, n));
  return reflexive_reduce(prod, n);
}

Type1Orbit type1_orbit(int64_t n, const std::vector<int64_t>& R) {
  Type1Orbit orb;
  orb.n = n;
  orb.base = {n, R};
  // x and n - x give the same set, so units up to n/2 suffice.
  for (int64_t x = 1; 2 * x <= n; ++x) {
    if (gcd(n, x) != 1) continue;
    orb.witness.emplace(multiply(n, R, x), x);
  }
  return orb;
}

std::optional<int64_t> is_type1_pair(int64_t n, const std::vector<int64_t>& R,
                                     const std::vector<int64_t>& S) {
  if (R.size() != S.size()) return std::nullopt;
  for (int64_t x = 1; 2 * x <= n; ++x) {
    if (gcd(n, x) != 1) continue;
    if (multiply(n, R, x) == S) return x;
  }
  return std::nullopt;
}

ComposeReport compose_check(int64_t n, const std::vector<int64_t>& R, int64_t x,
                            int64_t y) {
  ComposeReport rep;
  rep.lhs = multiply(n, multiply(n, R, y), x);
  rep.rhs = multiply(n, R, mul_mod(x, y, n));
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace circ
