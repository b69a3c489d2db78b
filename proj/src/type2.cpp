#include "circulant/type2.hpp"

#include <algorithm>
#include <set>

namespace circ {

namespace {

void check_modulus(int64_t n, int64_t m) {
  if (m <= 1) throw DomainError("m must exceed 1");
  if (n % (m * m * m) != 0)
    throw DomainError("m^3 must divide n (n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
}

}  // namespace

void ThetaParams::validate() const {
  if (n < 3) throw DomainError("order must be at least 3");
  check_modulus(n, m);
  if (t < 0 || t >= n / m)
    throw DomainError("t must lie in [0, n/m - 1]");
}

int64_t theta_point(const ThetaParams& p, int64_t x) {
  p.validate();
  if (x < 0 || x >= p.n) throw DomainError("point outside Z_n");
  int64_t j = x % p.m;
  return mod(x + mul_mod(j * p.m, p.t, p.n), p.n);
}

bool has_anchor(int64_t m, const std::vector<int64_t>& R) {
  return std::any_of(R.begin(), R.end(), [m](int64_t r) { return r % m == 0; });
}

ThetaImage theta_set(const ThetaParams& p, const std::vector<int64_t>& R) {
  p.validate();
  if (!has_anchor(p.m, R))
    throw PreconditionError("no jump of " + format_set(R) + " is divisible by m=" +
                            std::to_string(p.m));
  ThetaImage out;
  for (int64_t s : symmetric_closure(p.n, R)) out.image.push_back(theta_point(p, s));
  std::sort(out.image.begin(), out.image.end());
  out.circulant = symmetric(out.image, p.n);
  if (out.circulant) out.S = reflexive_reduce(out.image, p.n);
  return out;
}

std::vector<VEntry> v_set(int64_t n, int64_t m, const std::vector<int64_t>& R) {
  std::vector<VEntry> out;
  for (int64_t t = 0; t < n / m; ++t) out.push_back({t, theta_set({n, m, t}, R)});
  return out;
}

std::vector<std::vector<int64_t>> type2_set(int64_t n, int64_t m,
                                            const std::vector<int64_t>& R) {
  std::set<std::vector<int64_t>> out{R};
  auto entries = v_set(n, m, R);
  if (R.size() < 3) return {out.begin(), out.end()};
  Type1Orbit orb = type1_orbit(n, R);
  for (const auto& e : entries)
    if (e.result.circulant && !orb.contains(e.result.S)) out.insert(e.result.S);
  return {out.begin(), out.end()};
}

std::string Classification::str() const {
  switch (kind) {
    case Verdict::Identical: return "Identical";
    case Verdict::Type1: return "Type1 x=" + std::to_string(x);
    case Verdict::Type2: return "Type2 m=" + std::to_string(m) + " t=" + std::to_string(t);
    case Verdict::IsomorphicOther: return "IsomorphicOther perm=" + format_set(perm);
    case Verdict::NotIsomorphic: return "NotIsomorphic";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

Classification Classification::scaled(int64_t k) const {
  if (kind != Verdict::Type2) throw DomainError("only Type-2 labels scale");
  if (k < 1) throw DomainError("scale factor must be positive");
  Classification c = *this;
  c.note = "inherited from the order n/" + std::to_string(k) + " pair under scaling by " +
           std::to_string(k);
  return c;
}

Classification classify_pair(int64_t n, const std::vector<int64_t>& R,
                             const std::vector<int64_t>& S, const ClassifyOptions& opt) {
  JumpSet{n, R}.validate(Connectivity::Permissive);
  JumpSet{n, S}.validate(Connectivity::Permissive);
  Classification c;
  if (R == S) {
    c.kind = Verdict::Identical;
    return c;
  }
  if (gcd_signature(n, R) != gcd_signature(n, S)) {
    c.kind = Verdict::NotIsomorphic;
    c.note = "gcd signatures differ";
    return c;
  }
  if (auto x = is_type1_pair(n, R, S)) {
    c.kind = Verdict::Type1;
    c.x = *x;
    return c;
  }
  if (R.size() >= 3) {
    for (int64_t m : cube_divisors(n)) {
      if (!has_anchor(m, R)) continue;
      for (int64_t t = 1; t < n / m; ++t) {
        ThetaImage img = theta_set({n, m, t}, R);
        if (img.circulant && img.S == S) {
          c.kind = Verdict::Type2;
          c.m = m;
          c.t = t;
          return c;
        }
      }
    }
  }
  if (n > opt.oracle_max_order) {
    c.kind = Verdict::Unknown;
    c.note = "no Type-1 or Type-2 witness; oracle refuses n > " +
             std::to_string(opt.oracle_max_order);
    return c;
  }
  OracleResult o = brute_force_isomorphic(CirculantGraph({n, R}), CirculantGraph({n, S}),
                                          opt.budget);
  switch (o.status) {
    case OracleStatus::Isomorphic:
      c.kind = Verdict::IsomorphicOther;
      c.perm = o.witness.permutation;
      break;
    case OracleStatus::NotIsomorphic:
      c.kind = Verdict::NotIsomorphic;
      c.note = "oracle exhausted " + std::to_string(o.nodes) + " nodes";
      break;
    case OracleStatus::BudgetExceeded:
      c.kind = Verdict::Unknown;
      c.note = "oracle budget exceeded after " + std::to_string(o.nodes) + " nodes";
      break;
  }
  return c;
}

namespace {

void check_general(int64_t n, int64_t m, std::size_t count) {
  check_modulus(n, m);
  if (static_cast<int64_t>(count) != m)
    throw DomainError("expected one entry per residue class mod m");
}

void check_point(int64_t n, int64_t x) {
  if (x < 0 || x >= n) throw DomainError("point outside Z_n");
}

void check_pairs(int64_t n, int64_t m,
                 const std::vector<std::pair<int64_t, int64_t>>& pairs) {
  check_general(n, m, pairs.size());
  for (const auto& [xj, tj] : pairs) {
    if (gcd(n / m, xj) != 1)
      throw DomainError("x_j=" + std::to_string(xj) + " not coprime to n/m");
    if (tj < 0 || tj >= n / m) throw DomainError("t_j must lie in [0, n/m - 1]");
  }
}

}  // namespace

int64_t theta_multi(int64_t n, int64_t m, const std::vector<int64_t>& shifts, int64_t x) {
  check_general(n, m, shifts.size());
  for (int64_t tj : shifts)
    if (tj < 0 || tj >= n / m) throw DomainError("t_j must lie in [0, n/m - 1]");
  check_point(n, x);
  int64_t j = x % m;
  return mod(x + mul_mod(j * m, shifts[j], n), n);
}

int64_t theta_affine(int64_t n, int64_t m,
                     const std::vector<std::pair<int64_t, int64_t>>& pairs, int64_t x) {
  check_pairs(n, m, pairs);
  check_point(n, x);
  int64_t q = x / m, j = x % m;
  auto [xj, tj] = pairs[j];
  return mod(j + mul_mod(mod(xj * q + tj, n), m, n), n);
}

int64_t mu_affine(int64_t n, int64_t m,
                  const std::vector<std::pair<int64_t, int64_t>>& pairs, int64_t x) {
  check_pairs(n, m, pairs);
  check_point(n, x);
  int64_t q = x / m, j = x % m;
  auto [xj, tj] = pairs[j];
  return mod(j + mul_mod(mod(xj * q + j * tj, n), m, n), n);
}

}  // namespace circ
