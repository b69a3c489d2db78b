#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "circulant/census.hpp"
#include "circulant/kernels.hpp"
#include "circulant/type2.hpp"

using namespace circ;
using V = std::vector<int64_t>;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("circ_census_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("enumerate") {
  CHECK(enumerate(5, {true, 1}) == std::vector<V>{{1}, {2}, {1, 2}});
  auto e8 = enumerate(8, {true, 1});
  CHECK(e8.size() == 12);  // 16 subsets less {}, {2}, {4}, {2,4}
  for (const V& R : e8) CHECK(JumpSet{8, R}.connected());
  CHECK(enumerate(16, {false, 3}).size() == 219);
  CHECK(enumerate(16, {false, 0}).size() == 256);
  auto e = enumerate(12, {false, 2});
  for (std::size_t i = 1; i < e.size(); ++i)
    CHECK((e[i - 1].size() < e[i].size() || (e[i - 1].size() == e[i].size() && e[i - 1] < e[i])));
}

TEST_CASE("census counts at small orders") {
  CensusOptions opt;
  opt.threads = 1;
  auto r16 = run_census(16, opt);
  CHECK(r16.counts.pairs == 8);
  CHECK(r16.counts.shape_pairs == 8);
  CHECK(summary_row(r16).rfind("16, pairs=8", 0) == 0);
  auto r12 = run_census(12, opt);
  CHECK(r12.counts.pairs == 0);
  CHECK(r12.ms.empty());
  CHECK(summary_row(r12).rfind("12, pairs=0", 0) == 0);
  CHECK_THROWS_AS(run_census(65, opt), DomainError);
  opt.cap = 20;
  CHECK_THROWS_AS(run_census(24, opt), DomainError);
}

TEST_CASE("census matches a direct vector-based recount") {
  for (int64_t n : {16, 24, 27}) {
    CensusOptions opt;
    opt.threads = 1;
    auto rep = run_census(n, opt);
    CHECK(verify_report(rep) == 0);
    std::set<std::pair<V, V>> pairs;
    int64_t sets = 0;
    for (const V& R : enumerate(n, {true, 3})) {
      ++sets;
      for (int64_t m : cube_divisors(n)) {
        if (!has_anchor(m, R)) continue;
        for (const V& S : type2_set(n, m, R))
          if (S != R) pairs.insert({std::min(R, S), std::max(R, S)});
      }
    }
    CHECK(rep.counts.sets == sets);
    CHECK(rep.counts.pairs == static_cast<int64_t>(pairs.size()));
    // Classes partition the domain and are Adam orbits.
    std::set<V> seen;
    for (const auto& cls : rep.classes) {
      auto orb = type1_orbit(n, cls.rep);
      for (const auto& e : cls.members) {
        CHECK(seen.insert(e.set).second);
        CHECK(orb.contains(e.set));
        CHECK(multiply(n, cls.rep, e.x) == e.set);
        CHECK_FALSE(e.set < cls.rep);
      }
    }
    CHECK(static_cast<int64_t>(seen.size()) == sets);
  }
}

TEST_CASE("partnership is mutual in the report") {
  auto rep = run_census(24);
  std::map<V, std::set<V>> partners;
  for (const auto& cls : rep.classes)
    for (const auto& e : cls.members)
      for (const auto& p : e.partners) partners[e.set].insert(p.S);
  for (const auto& [R, ps] : partners)
    for (const V& S : ps) CHECK(partners[S].count(R) == 1);
}

TEST_CASE("serial, parallel and kernel choice give identical files") {
  auto dir_a = scratch("serial"), dir_b = scratch("parallel"), dir_c = scratch("scalar");
  CensusOptions serial;
  serial.threads = 1;
  CensusOptions parallel;
  parallel.threads = 4;
  persist(run_census(32, serial), dir_a.string());
  persist(run_census(32, parallel), dir_b.string());
  kern::Isa isa = kern::active_isa();
  kern::force_isa(kern::Isa::Scalar);
  persist(run_census(32, parallel), dir_c.string());
  kern::force_isa(isa);
  for (const char* f : {"census_32.txt", "summary_32.csv"}) {
    CHECK(slurp(dir_a / f) == slurp(dir_b / f));
    CHECK(slurp(dir_a / f) == slurp(dir_c / f));
  }
}

TEST_CASE("persist and load round trip") {
  for (int64_t n : {12, 16, 27}) {
    CensusOptions opt;
    opt.oracle_spot_checks = 3;
    auto rep = run_census(n, opt);
    auto dir = scratch("rt" + std::to_string(n));
    persist(rep, dir.string());
    auto back = load((dir / ("census_" + std::to_string(n) + ".txt")).string());
    CHECK(back.same_payload(rep));
    CHECK(serialize(back) == serialize(rep));
    std::string summary = slurp(dir / ("summary_" + std::to_string(n) + ".csv"));
    CHECK(summary.find("\n" + std::to_string(n) + ", pairs=") != std::string::npos);
  }
  auto bad = scratch("bad");
  std::filesystem::create_directories(bad);
  std::ofstream(bad / "x.txt") << "circulant-census schema=99\n";
  CHECK_THROWS(load((bad / "x.txt").string()));
  std::ofstream(bad / "y.txt") << "circulant-census schema=1\norder 16\n";
  CHECK_THROWS(load((bad / "y.txt").string()));
  CHECK_THROWS(load((bad / "missing.txt").string()));
}

TEST_CASE("oracle spot checks") {
  CensusOptions opt;
  opt.oracle_spot_checks = 8;
  auto rep = run_census(16, opt);
  CHECK(rep.spot_checked == 8);
  CHECK(rep.spot_failed == 0);
}
