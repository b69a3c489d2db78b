#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circulant/modarith.hpp"

namespace circ {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Connectivity { Strict, Permissive };

// Order n plus canonical connection set R in [1, n/2].
struct JumpSet {
  int64_t n = 0;
  std::vector<int64_t> r;

  JumpSet() = default;
  JumpSet(int64_t order, std::vector<int64_t> jumps) : n(order), r(std::move(jumps)) {}

  bool canonical() const;
  bool connected() const;  // gcd(R u {n}) == 1
  bool contains(int64_t x) const;
  std::size_t size() const { return r.size(); }
  void validate(Connectivity mode = Connectivity::Strict) const;

  friend bool operator==(const JumpSet&, const JumpSet&) = default;
  friend bool operator<(const JumpSet& a, const JumpSet& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.r < b.r;
  }
};

// Residues in [1, n-1] closed under x -> n - x.
struct SymmetricResidueSet {
  int64_t n = 0;
  std::vector<int64_t> residues;  // ascending

  static SymmetricResidueSet closure(const JumpSet& j);
  JumpSet reduce() const;
};

std::vector<int64_t> symmetric_closure(int64_t n, const std::vector<int64_t>& r);

class CirculantGraph {
 public:
  CirculantGraph() = default;
  explicit CirculantGraph(JumpSet j) : jumps_(std::move(j)) {}

  int64_t order() const { return jumps_.n; }
  const JumpSet& jumps() const { return jumps_; }
  bool adjacent(int64_t i, int64_t j) const;
  int64_t degree() const;
  // Simple edges; with double_half the n/2 matching counts twice.
  int64_t edge_count(bool double_half = false) const;
  // Row i has bit j set iff i ~ j. Requires n <= 64.
  std::vector<uint64_t> adjacency_bits() const;
  std::string to_dot() const;

 private:
  JumpSet jumps_;
};

CirculantGraph build(int64_t n, std::vector<int64_t> R,
                     Connectivity mode = Connectivity::Strict);
int64_t degree(const CirculantGraph& g);

struct PeriodicCycleDecomposition {
  int64_t period = 0;
  int64_t cycle_count = 0;
  int64_t cycle_length = 0;
  std::vector<std::vector<int64_t>> cycles;
};

PeriodicCycleDecomposition periodic_cycles(int64_t n, int64_t r);

struct MirrorReport {
  bool holds = true;
  int64_t checked = 0;
  std::optional<int64_t> counterexample;
};

// x mod m == j  <=>  (n-1-x) mod m == m-1-j, for all x in Z_n.
MirrorReport mirror_class_check(int64_t n, int64_t m);

bool symmetric(const std::vector<int64_t>& s, int64_t n);

std::vector<int64_t> gcd_signature(int64_t n, const std::vector<int64_t>& R);

std::string format_set(const std::vector<int64_t>& s);
std::vector<int64_t> parse_set(const std::string& text);

}  // namespace circ
