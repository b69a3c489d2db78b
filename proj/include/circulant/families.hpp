#pragma once

#include <optional>
#include <string>

#include "circulant/type2.hpp"

namespace circ {

// Order 8n pair: R = {2s-1, 4n-(2s-1)} u E, S = {2n-(2s-1), 2n+2s-1} u E,
// with E = {2} or E = {2p_1, ..., 2p_{k-2}}.
struct FamilyPair {
  int64_t order = 0;
  int64_t n = 0;
  int64_t s = 0;
  std::vector<int64_t> R, S;
  std::optional<std::vector<int64_t>> extra_even;
  int64_t expected_t = 0;
  bool degenerate = false;       // R == S, happens when n == 2s-1
  bool theta_verified = false;   // theta_{8n,2,n}(R) == S
};

FamilyPair family_42(int64_t n, int64_t s);
FamilyPair family_43(int64_t n, int64_t s, const std::vector<int64_t>& p);
FamilyPair corollary_2n(int64_t npow, int64_t s);

// Same formulas with only the bounds and gcd(p) = 1 enforced.
FamilyPair family_sets(int64_t n, int64_t s, const std::vector<int64_t>& p);

struct IdentityReport {
  bool holds = true;
  int64_t t = 0;
  std::string failure;
};

// theta_t(R) = theta_{2n+t}(R) = theta_{n+t}(S) = theta_{3n+t}(S) and the
// same with R, S exchanged, as residue sets of order 8n.
IdentityReport shift_identities_check(int64_t n, int64_t s, const std::vector<int64_t>& p,
                                      int64_t t);

// R = {2, a, b}, a < b odd.
struct Conditions48 {
  int64_t n = 0, a = 0, b = 0;
  bool mod8 = false;        // n = 0 mod 8
  bool sum_half = false;    // a + b = n/2
  bool not_eighth = false;  // a != n/8
  bool small_a = false;     // 1 <= a <= n/4
  bool large_n = false;     // n >= 16
  std::vector<int64_t> candidate_t;  // n/8, 3n/8

  bool static_hold() const { return mod8 && sum_half && not_eighth && small_a && large_n; }
  bool admits(int64_t t) const;  // all conditions including t
};

Conditions48 necessary_conditions_48(int64_t n, const std::vector<int64_t>& R);

}  // namespace circ
