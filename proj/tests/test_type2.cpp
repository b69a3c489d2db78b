#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "circulant/census.hpp"
#include "circulant/type2.hpp"

using namespace circ;
using V = std::vector<int64_t>;

TEST_CASE("theta_point") {
  CHECK(theta_point({16, 2, 2}, 1) == 5);
  CHECK(theta_point({16, 2, 2}, 2) == 2);
  CHECK(theta_point({16, 2, 3}, 15) == 5);
  CHECK_THROWS_AS(theta_point({16, 3, 1}, 1), DomainError);
  CHECK_THROWS_AS(theta_point({16, 2, 8}, 1), DomainError);
  CHECK_THROWS_AS(theta_point({16, 2, -1}, 1), DomainError);
  CHECK_THROWS_AS(theta_point({16, 1, 0}, 1), DomainError);
}

TEST_CASE("theta_set") {
  CHECK(theta_set({16, 2, 2}, {1, 2, 7}).S == V{2, 3, 5});
  CHECK_FALSE(theta_set({16, 2, 1}, {1, 2, 7}).circulant);
  CHECK(theta_set({16, 2, 0}, {1, 2, 7}).S == V{1, 2, 7});
  CHECK(theta_set({24, 2, 3}, {1, 2, 8, 11}).S == V{2, 5, 7, 8});
  CHECK(theta_set({27, 3, 1}, {1, 3, 8, 10}).S == V{3, 4, 5, 13});
  CHECK(theta_set({48, 2, 6}, {1, 2, 23}).S == V{2, 11, 13});
  CHECK_THROWS_AS(theta_set({16, 2, 1}, {1, 3, 7}), PreconditionError);
}

TEST_CASE("v_set") {
  auto v = v_set(16, 2, {1, 2, 7});
  REQUIRE(v.size() == 8);
  for (const auto& e : v) {
    if (e.t % 4 == 0) CHECK(e.result.S == V{1, 2, 7});
    else if (e.t % 2 == 0) CHECK(e.result.S == V{2, 3, 5});
    else CHECK_FALSE(e.result.circulant);
  }
  for (int64_t n : {24, 27, 54, 64})
    for (int64_t m : cube_divisors(n)) CHECK(v_set(n, m, {1, m}).front().result.S == V{1, m});
}

TEST_CASE("type2_set") {
  CHECK(type2_set(16, 2, {1, 2, 7}) == std::vector<V>{{1, 2, 7}, {2, 3, 5}});
  CHECK(type2_set(27, 3, {1, 3, 8, 10}) ==
        std::vector<V>{{1, 3, 8, 10}, {2, 3, 7, 11}, {3, 4, 5, 13}});
  // Every circulant image of this set is already an Adam image.
  V R{2, 3, 4, 5, 6};
  Type1Orbit orb = type1_orbit(16, R);
  bool hit_orbit_only = true;
  for (const auto& e : v_set(16, 2, R))
    if (e.result.circulant && !orb.contains(e.result.S)) hit_orbit_only = false;
  CHECK(hit_orbit_only);
  CHECK(type2_set(16, 2, R) == std::vector<V>{R});
  CHECK(type2_set(16, 2, {2, 3}) == std::vector<V>{{2, 3}});
}

TEST_CASE("classify_pair") {
  CHECK(classify_pair(16, {1, 2, 7}, {2, 3, 5}).str() == "Type2 m=2 t=2");
  CHECK(classify_pair(16, {1, 2, 4, 6, 7}, {2, 3, 4, 5, 6}).str() == "Type1 x=3");
  CHECK(classify_pair(16, {1, 2, 7}, {1, 2, 3}).kind == Verdict::NotIsomorphic);
  CHECK(classify_pair(16, {1, 2, 7}, {1, 2, 7}).kind == Verdict::Identical);
  CHECK(classify_pair(54, {1, 3, 17, 19}, {3, 7, 11, 25}).str() == "Type2 m=3 t=2");
  CHECK(classify_pair(16, {1, 2, 7}, {1, 4, 7}).note == "gcd signatures differ");
  // No witness and no oracle above 64.
  Classification u = classify_pair(100, {1, 2, 3}, {1, 2, 13});
  CHECK(u.kind == Verdict::Unknown);
  CHECK_THROWS_AS(classify_pair(16, {1, 2, 9}, {1, 2, 3}), ValidationError);
  Classification c = classify_pair(16, {1, 2, 7}, {2, 3, 5});
  CHECK(c.scaled(3).m == 2);
  CHECK(c.scaled(3).kind == Verdict::Type2);
  CHECK_THROWS(classify_pair(16, {1, 2, 7}, {1, 2, 7}).scaled(2));
}

TEST_CASE("classification invariants at order 24") {
  for (const V& R : enumerate(24, {true, 3})) {
    for (int64_t m : cube_divisors(24)) {
      if (!has_anchor(m, R)) continue;
      for (const V& S : type2_set(24, m, R)) {
        if (S == R) continue;
        Classification c = classify_pair(24, R, S);
        CHECK(c.kind == Verdict::Type2);
        CHECK_FALSE(type1_orbit(24, R).contains(S));
        CHECK(24 % (c.m * c.m * c.m) == 0);
        CHECK(has_anchor(c.m, R));
        CHECK(has_anchor(c.m, S));
      }
    }
  }
}

TEST_CASE("theta is a bijection fixing multiples of m, with additive shifts") {
  for (int64_t n = 8; n <= 216; ++n)
    for (int64_t m : cube_divisors(n)) {
      int64_t period = n / m;
      for (int64_t t = 0; t < period; ++t) {
        std::vector<char> hit(n, 0);
        for (int64_t x = 0; x < n; ++x) {
          int64_t y = theta_point({n, m, t}, x);
          CHECK(y % m == x % m);
          if (x % m == 0) CHECK(y == x);
          hit[y] = 1;
        }
        CHECK(std::count(hit.begin(), hit.end(), 1) == n);
      }
    }
}

TEST_CASE("circulant images are edge bijections") {
  auto check_set = [](int64_t n, const V& R) {
    for (int64_t m : cube_divisors(n)) {
      if (!has_anchor(m, R)) continue;
      for (const auto& e : v_set(n, m, R)) {
        if (!e.result.circulant) continue;
        CirculantGraph g({n, R}), h({n, e.result.S});
        std::vector<int64_t> perm(n);
        for (int64_t x = 0; x < n; ++x) perm[x] = theta_point({n, m, e.t}, x);
        CHECK(verify_map(g, h, perm));
      }
    }
  };
  for (int64_t n : {16, 24, 27, 32})
    for (const V& R : enumerate(n, {true, 3})) check_set(n, R);
  std::mt19937_64 rng(7);
  for (int64_t n : {54, 64}) {
    for (int i = 0; i < 3000; ++i) {
      std::set<int64_t> pick;
      std::size_t k = 3 + rng() % 5;
      while (pick.size() < k) pick.insert(1 + static_cast<int64_t>(rng() % (n / 2)));
      check_set(n, V(pick.begin(), pick.end()));
    }
  }
  check_set(54, {1, 3, 17, 19});
  check_set(54, {1, 6, 17, 19});
}

TEST_CASE("type2_set membership is mutual") {
  for (int64_t n : {16, 24, 27, 32})
    for (const V& R : enumerate(n, {true, 3}))
      for (int64_t m : cube_divisors(n)) {
        if (!has_anchor(m, R)) continue;
        for (const V& S : type2_set(n, m, R)) {
          auto back = type2_set(n, m, S);
          CHECK(std::find(back.begin(), back.end(), R) != back.end());
        }
      }
}

TEST_CASE("generalized transforms") {
  CHECK(theta_multi(16, 2, {3, 2}, 7) == 11);
  CHECK(theta_affine(16, 2, {{1, 0}, {3, 0}}, 3) == 7);
  CHECK_THROWS_AS(theta_affine(16, 2, {{2, 0}, {1, 0}}, 3), DomainError);
  CHECK_THROWS_AS(theta_multi(16, 2, {8, 0}, 3), DomainError);
  CHECK_THROWS_AS(theta_multi(16, 2, {0}, 3), DomainError);
  for (int64_t n : {8, 16, 24, 27}) {
    int64_t m = cube_divisors(n).front(), q = n / m;
    for (int64_t t = 0; t < q; ++t)
      for (int64_t x = 0; x < n; ++x) {
        V uniform(m, t);
        std::vector<std::pair<int64_t, int64_t>> ones(m, {1, t});
        CHECK(theta_multi(n, m, uniform, x) == theta_point({n, m, t}, x));
        CHECK(theta_multi(n, m, V(m, 0), x) == x);
        CHECK(mu_affine(n, m, ones, x) == theta_point({n, m, t}, x));
        // Unit multipliers with shifts j*t_j reproduce theta_multi.
        std::vector<std::pair<int64_t, int64_t>> scaled;
        for (int64_t j = 0; j < m; ++j) scaled.push_back({1, j * uniform[j] % q});
        CHECK(theta_affine(n, m, scaled, x) == theta_multi(n, m, uniform, x));
      }
  }
}

TEST_CASE("generalized transforms are bijections") {
  for (int64_t n : {8, 16, 24, 27}) {
    int64_t m = cube_divisors(n).front(), q = n / m;
    V mults;
    for (int64_t x = 1; x < q; ++x)
      if (gcd(q, x) == 1) mults.push_back(x);
    auto bij = [n](auto f) {
      std::set<int64_t> img;
      for (int64_t x = 0; x < n; ++x) img.insert(f(x));
      return static_cast<int64_t>(img.size()) == n;
    };
    // Every shift vector, and multiplier vectors over a spread of units.
    std::vector<V> shift_vecs{{}};
    for (int64_t j = 0; j < m; ++j) {
      std::vector<V> next;
      for (const V& v : shift_vecs)
        for (int64_t t = 0; t < q; ++t) {
          V w = v;
          w.push_back(t);
          next.push_back(w);
        }
      shift_vecs = next;
    }
    for (const V& sv : shift_vecs) {
      CHECK(bij([&](int64_t x) { return theta_multi(n, m, sv, x); }));
      for (std::size_t k = 0; k < mults.size(); ++k) {
        std::vector<std::pair<int64_t, int64_t>> pr;
        for (int64_t j = 0; j < m; ++j) pr.push_back({mults[(k + j) % mults.size()], sv[j]});
        CHECK(bij([&](int64_t x) { return theta_affine(n, m, pr, x); }));
        CHECK(bij([&](int64_t x) { return mu_affine(n, m, pr, x); }));
      }
    }
  }
}
