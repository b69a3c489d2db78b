#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "circulant/graph.hpp"

namespace circ {

inline constexpr int kCensusSchema = 1;
inline constexpr int64_t kCensusCap = 64;

struct EnumerateOptions {
  bool connected_only = true;
  int64_t min_size = 3;
  friend bool operator==(const EnumerateOptions&, const EnumerateOptions&) = default;
};

// Subsets of [1, n/2] by size, lexicographic within a size.
std::vector<std::vector<int64_t>> enumerate(int64_t n, const EnumerateOptions& opt);

struct CensusOptions {
  EnumerateOptions domain;
  int threads = 0;             // 0: hardware concurrency, 1: serial
  int64_t cap = kCensusCap;
  bool dual_count = true;      // also count the relaxed domain
  int64_t oracle_spot_checks = 0;
};

struct Partner {
  int64_t m = 0, t = 0;  // smallest t for this (m, S)
  std::vector<int64_t> S;
  friend bool operator==(const Partner&, const Partner&) = default;
};

struct MemberEntry {
  std::vector<int64_t> set;
  int64_t x = 1;  // smallest multiplier taking the class representative here
  std::vector<Partner> partners;
  friend bool operator==(const MemberEntry&, const MemberEntry&) = default;
};

struct CensusClass {
  std::vector<int64_t> rep;  // lexicographically smallest member
  std::vector<MemberEntry> members;
  friend bool operator==(const CensusClass&, const CensusClass&) = default;
};

struct CensusCounts {
  int64_t sets = 0;
  int64_t classes = 0;
  int64_t pairs = 0;                 // unordered {R, S}, any m
  std::map<int64_t, int64_t> pairs_by_m;
  std::map<std::pair<int64_t, int64_t>, int64_t> tuples;  // (m, |T|) -> distinct T
  // Same, restricted to sets with exactly m jumps not divisible by m.
  int64_t shape_pairs = 0;
  std::map<std::pair<int64_t, int64_t>, int64_t> shape_tuples;
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusReport {
  int64_t n = 0;
  EnumerateOptions domain;
  std::vector<int64_t> ms;
  std::vector<CensusClass> classes;
  CensusCounts counts;
  std::optional<CensusCounts> relaxed;  // disconnected allowed, |R| >= 2
  int64_t spot_checked = 0;
  int64_t spot_failed = 0;
  double elapsed_ms = 0;  // not persisted

  bool same_payload(const CensusReport& o) const;
};

CensusReport run_census(int64_t n, const CensusOptions& opt = {});

// Re-derives every partner with the vector API: theta_set hits S and S is
// outside the Adam orbit. Returns the number of failures.
int64_t verify_report(const CensusReport& r);

// Writes <dir>/census_<n>.txt and <dir>/summary_<n>.csv.
void persist(const CensusReport& r, const std::string& dir);
CensusReport load(const std::string& path);
std::string serialize(const CensusReport& r);
std::string summary_row(const CensusReport& r);

}  // namespace circ
