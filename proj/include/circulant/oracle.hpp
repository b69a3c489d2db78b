#pragma once

#include "circulant/graph.hpp"

namespace circ {

inline constexpr uint64_t kDefaultBudget = 10'000'000;
inline constexpr int64_t kOracleMaxOrder = 64;

enum class OracleStatus { Isomorphic, NotIsomorphic, BudgetExceeded };

struct IsoWitness {
  std::vector<int64_t> permutation;  // vertex i of g1 -> permutation[i] of g2
  bool verified = false;
};

struct OracleResult {
  OracleStatus status = OracleStatus::NotIsomorphic;
  IsoWitness witness;
  uint64_t nodes = 0;
};

// Backtracking over adjacency-preserving maps with vertex 0 pinned to 0.
// Circulants are vertex-transitive: if f is an isomorphism then so is
// (i -> i - f(0)) o f, which pins 0. Requires n <= 64.
OracleResult brute_force_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2,
                                    uint64_t budget = kDefaultBudget);

bool verify_map(const CirculantGraph& g1, const CirculantGraph& g2,
                const std::vector<int64_t>& perm);

}  // namespace circ
