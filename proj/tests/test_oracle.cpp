#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circulant/oracle.hpp"
#include "circulant/type2.hpp"

using namespace circ;
using V = std::vector<int64_t>;

TEST_CASE("oracle verdicts") {
  CirculantGraph a({16, {1, 2, 7}}), b({16, {2, 3, 5}}), c({16, {1, 2, 3}});
  auto r = brute_force_isomorphic(a, b);
  CHECK(r.status == OracleStatus::Isomorphic);
  CHECK(r.witness.verified);
  CHECK(r.witness.permutation[0] == 0);
  CHECK(verify_map(a, b, r.witness.permutation));
  CHECK(brute_force_isomorphic(a, c).status == OracleStatus::NotIsomorphic);
  auto self = brute_force_isomorphic(a, a);
  CHECK(self.status == OracleStatus::Isomorphic);
  V id(16);
  for (int64_t i = 0; i < 16; ++i) id[i] = i;
  CHECK(self.witness.permutation == id);
}

TEST_CASE("verify_map") {
  CirculantGraph a({16, {1, 2, 7}}), b({16, {2, 3, 5}});
  V th(16), mul(16), id(16);
  for (int64_t x = 0; x < 16; ++x) {
    th[x] = theta_point({16, 2, 2}, x);
    mul[x] = 3 * x % 16;
    id[x] = x;
  }
  CHECK(verify_map(a, b, th));
  CHECK(verify_map(CirculantGraph({16, {1, 2, 4, 7}}), CirculantGraph({16, {3, 4, 5, 6}}), mul));
  CHECK_FALSE(verify_map(a, b, id));
  V dup = id;
  dup[1] = 0;
  CHECK_FALSE(verify_map(a, a, dup));
}

TEST_CASE("budget") {
  CirculantGraph a({16, {1, 2, 7}}), b({16, {2, 3, 5}});
  auto full = brute_force_isomorphic(a, b);
  REQUIRE(full.nodes > 3);
  auto r = brute_force_isomorphic(a, b, 3);
  CHECK(r.status == OracleStatus::BudgetExceeded);
  CHECK(r.nodes > 3);
  CHECK(r.witness.permutation.empty());
  CHECK_THROWS(brute_force_isomorphic(CirculantGraph({65, {1}}), CirculantGraph({65, {2}})));
  CHECK_THROWS(brute_force_isomorphic(CirculantGraph({16, {1}}), CirculantGraph({17, {1}})));
}

TEST_CASE("isomorphic pairs share gcd signatures") {
  for (int64_t n : {12, 16, 18}) {
    std::vector<V> all;
    for (int64_t a = 1; 2 * a <= n; ++a)
      for (int64_t b = a + 1; 2 * b <= n; ++b)
        for (int64_t c = b + 1; 2 * c <= n; ++c) all.push_back({a, b, c});
    for (const V& R : all)
      for (const V& S : all) {
        auto r = brute_force_isomorphic(CirculantGraph({n, R}), CirculantGraph({n, S}));
        if (r.status == OracleStatus::Isomorphic)
          CHECK(gcd_signature(n, R) == gcd_signature(n, S));
      }
  }
}
