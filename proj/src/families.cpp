#include "circulant/families.hpp"

#include <algorithm>
#include <numeric>

namespace circ {

namespace {

void check_bounds(int64_t n, int64_t s) {
  if (n < 2) throw DomainError("family needs n >= 2");
  if (s < 1 || 2 * s - 1 > 2 * n - 1) throw DomainError("need 1 <= 2s-1 <= 2n-1");
}

std::vector<int64_t> even_part(const std::vector<int64_t>& p) {
  std::vector<int64_t> e;
  for (int64_t x : p) {
    if (x < 1) throw DomainError("p_i must be positive");
    e.push_back(2 * x);
  }
  return e;
}

std::vector<int64_t> exact(std::vector<int64_t> v, int64_t order, std::size_t expect) {
  std::vector<int64_t> r = reflexive_reduce(v, order);
  if (r.size() != expect)
    throw DomainError("family jumps collide after reduction: " + format_set(r));
  return r;
}

}  // namespace

FamilyPair family_sets(int64_t n, int64_t s, const std::vector<int64_t>& p) {
  check_bounds(n, s);
  if (p.empty()) throw DomainError("even part must be nonempty");
  int64_t g = 0;
  for (int64_t x : p) g = gcd(g, x);
  if (g != 1) throw DomainError("gcd of p_i must be 1");
  FamilyPair f;
  f.order = 8 * n;
  f.n = n;
  f.s = s;
  f.expected_t = n;
  int64_t a = 2 * s - 1;
  std::vector<int64_t> R = even_part(p), S = even_part(p);
  R.push_back(a);
  R.push_back(4 * n - a);
  S.push_back(2 * n - a);
  S.push_back(2 * n + a);
  f.R = exact(R, f.order, p.size() + 2);
  f.S = exact(S, f.order, p.size() + 2);
  if (!(p.size() == 1 && p[0] == 1)) f.extra_even = even_part(p);
  f.degenerate = f.R == f.S;
  f.theta_verified = theta_set({f.order, 2, n}, f.R).S == f.S;
  return f;
}

FamilyPair family_42(int64_t n, int64_t s) {
  FamilyPair f = family_sets(n, s, {1});
  if (f.degenerate != (n == 2 * s - 1))
    throw std::logic_error("degeneracy does not match n == 2s-1");
  return f;
}

FamilyPair family_43(int64_t n, int64_t s, const std::vector<int64_t>& p) {
  check_bounds(n, s);
  if (n == 2 * s - 1) throw DomainError("family needs n != 2s-1");
  if (std::none_of(p.begin(), p.end(), [n](int64_t y) { return gcd(4 * n, y) == 1; }))
    throw DomainError("even part needs some 2y with gcd(4n, y) = 1");
  FamilyPair f = family_sets(n, s, p);
  f.extra_even = even_part(p);
  return f;
}

FamilyPair corollary_2n(int64_t npow, int64_t s) {
  if (npow < 4 || npow > 40) throw DomainError("corollary needs 4 <= npow <= 40");
  return family_42(int64_t{1} << (npow - 3), s);
}

IdentityReport shift_identities_check(int64_t n, int64_t s, const std::vector<int64_t>& p,
                                      int64_t t) {
  FamilyPair f = family_sets(n, s, p);
  IdentityReport rep;
  rep.t = t;
  if (t < 0 || t > 4 * n - 1) throw DomainError("t must lie in [0, 4n-1]");
  int64_t period = 4 * n;
  auto img = [&](const std::vector<int64_t>& X, int64_t shift) {
    return theta_set({f.order, 2, mod(shift, period)}, X).image;
  };
  struct Chain { const char* name; const std::vector<int64_t>* a; const std::vector<int64_t>* b; };
  for (auto [name, A, B] : {Chain{"R", &f.R, &f.S}, Chain{"S", &f.S, &f.R}}) {
    auto base = img(*A, t);
    const std::pair<const char*, std::vector<int64_t>> rest[] = {
        {"2n+t on same set", img(*A, 2 * n + t)},
        {"n+t on partner", img(*B, n + t)},
        {"3n+t on partner", img(*B, 3 * n + t)}};
    for (const auto& [what, v] : rest)
      if (v != base) {
        rep.holds = false;
        rep.failure = std::string("chain ") + name + ": " + what;
        return rep;
      }
  }
  return rep;
}

bool Conditions48::admits(int64_t t) const {
  return static_hold() &&
         std::find(candidate_t.begin(), candidate_t.end(), t) != candidate_t.end();
}

Conditions48 necessary_conditions_48(int64_t n, const std::vector<int64_t>& R) {
  std::vector<int64_t> odd;
  bool two = false;
  for (int64_t r : R) {
    if (r == 2) two = true;
    else if (r % 2 == 1) odd.push_back(r);
  }
  if (R.size() != 3 || !two || odd.size() != 2 || 2 * odd[1] > n)
    throw DomainError("expected R = {2, a, b} with odd a < b <= n/2");
  Conditions48 c;
  c.n = n;
  c.a = odd[0];
  c.b = odd[1];
  c.mod8 = n % 8 == 0;
  c.sum_half = 2 * (c.a + c.b) == n;
  c.not_eighth = 8 * c.a != n;
  c.small_a = c.a >= 1 && 4 * c.a <= n;
  c.large_n = n >= 16;
  if (c.mod8) c.candidate_t = {n / 8, 3 * n / 8};
  return c;
}

}  // namespace circ
