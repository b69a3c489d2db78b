#pragma once

#include <optional>
#include <string>
#include <utility>

#include "circulant/graph.hpp"
#include "circulant/oracle.hpp"
#include "circulant/type1.hpp"

namespace circ {

struct PreconditionError : DomainError {
  using DomainError::DomainError;
};

// theta_{n,m,t}: needs m > 1, m^3 | n, 0 <= t < n/m.
struct ThetaParams {
  int64_t n = 0;
  int64_t m = 0;
  int64_t t = 0;

  void validate() const;
};

int64_t theta_point(const ThetaParams& p, int64_t x);

struct ThetaImage {
  std::vector<int64_t> image;  // theta of R u (n-R), ascending
  bool circulant = false;
  std::vector<int64_t> S;      // canonical reduction, set when circulant
};

ThetaImage theta_set(const ThetaParams& p, const std::vector<int64_t>& R);

struct VEntry {
  int64_t t = 0;
  ThetaImage result;
};

std::vector<VEntry> v_set(int64_t n, int64_t m, const std::vector<int64_t>& R);

// {R} u {S != R circulant image with S outside the Adam orbit of R}.
// Sets with fewer than three jumps only get {R}.
std::vector<std::vector<int64_t>> type2_set(int64_t n, int64_t m,
                                            const std::vector<int64_t>& R);

bool has_anchor(int64_t m, const std::vector<int64_t>& R);

enum class Verdict { Identical, Type1, Type2, IsomorphicOther, NotIsomorphic, Unknown };

struct Classification {
  Verdict kind = Verdict::Unknown;
  int64_t x = 0;               // Type1
  int64_t m = 0, t = 0;        // Type2
  std::vector<int64_t> perm;   // IsomorphicOther
  std::string note;

  bool isomorphic() const {
    return kind == Verdict::Identical || kind == Verdict::Type1 ||
           kind == Verdict::Type2 || kind == Verdict::IsomorphicOther;
  }
  std::string str() const;

  // Label carried by C_{kn}(kR), C_{kn}(kS) when this pair is Type-2.
  Classification scaled(int64_t k) const;
};

struct ClassifyOptions {
  uint64_t budget = kDefaultBudget;
  int64_t oracle_max_order = kOracleMaxOrder;
};

Classification classify_pair(int64_t n, const std::vector<int64_t>& R,
                             const std::vector<int64_t>& S,
                             const ClassifyOptions& opt = {});

// x = qm + j maps to (x + j t_j m) mod n.
int64_t theta_multi(int64_t n, int64_t m, const std::vector<int64_t>& shifts, int64_t x);
// x = qm + j maps to (j + (x_j q + t_j) m) mod n.
int64_t theta_affine(int64_t n, int64_t m,
                     const std::vector<std::pair<int64_t, int64_t>>& pairs, int64_t x);
// x = qm + j maps to (j + (x_j q + j t_j) m) mod n.
int64_t mu_affine(int64_t n, int64_t m,
                  const std::vector<std::pair<int64_t, int64_t>>& pairs, int64_t x);

}  // namespace circ
