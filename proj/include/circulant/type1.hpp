#pragma once

#include <map>
#include <optional>

#include "circulant/graph.hpp"

namespace circ {

// Adam orbit: all reduce(xR) over units x, each with its smallest multiplier.
struct Type1Orbit {
  int64_t n = 0;
  JumpSet base;
  std::map<std::vector<int64_t>, int64_t> witness;  // member -> smallest x

  bool contains(const std::vector<int64_t>& s) const { return witness.count(s) != 0; }
  std::vector<JumpSet> members() const;
};

std::vector<int64_t> multiply(int64_t n, const std::vector<int64_t>& R, int64_t x);
Type1Orbit type1_orbit(int64_t n, const std::vector<int64_t>& R);
std::optional<int64_t> is_type1_pair(int64_t n, const std::vector<int64_t>& R,
                                     const std::vector<int64_t>& S);

struct ComposeReport {
  std::vector<int64_t> lhs;  // x(yR)
  std::vector<int64_t> rhs;  // (xy)R
  bool holds = false;
};

ComposeReport compose_check(int64_t n, const std::vector<int64_t>& R, int64_t x,
                            int64_t y);

}  // namespace circ
