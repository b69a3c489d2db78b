#pragma once

// Bitmask kernels for n <= 64: bit x of a mask stands for residue x.

#include <cstdint>
#include <vector>

namespace circ::kern {

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxClasses = 4;  // m^3 <= 64

enum class Isa { Scalar, Avx2 };

struct SweepPlan {
  int n = 0;
  int m = 0;
  uint64_t full = 0;
  uint64_t cls[kMaxClasses] = {};  // residues congruent to j mod m
};

SweepPlan make_plan(int n, int m);

inline uint64_t full_mask(int n) { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

inline uint64_t rotl(uint64_t v, int s, int n) {
  if (s == 0) return v;
  return ((v << s) | (v >> (n - s))) & full_mask(n);
}

uint64_t reverse_bits(uint64_t v);

// x -> (n - x) mod n
inline uint64_t negate(uint64_t v, int n) { return rotl(reverse_bits(v) >> (64 - n), 1, n); }

inline bool is_symmetric(uint64_t v, int n) { return negate(v, n) == v; }

uint64_t to_mask(const std::vector<int64_t>& residues);
std::vector<int64_t> from_mask(uint64_t v);

// images[i] = theta_{n,m,t0+i}(sym); flags[i] = 1 iff images[i] is symmetric.
using SweepFn = void (*)(const SweepPlan&, uint64_t sym, int t0, int count,
                         uint64_t* images, uint8_t* flags);

void theta_sweep_scalar(const SweepPlan&, uint64_t sym, int t0, int count,
                        uint64_t* images, uint8_t* flags);
#if defined(__x86_64__) || defined(_M_X64)
void theta_sweep_avx2(const SweepPlan&, uint64_t sym, int t0, int count,
                      uint64_t* images, uint8_t* flags);
#endif

bool avx2_available();
Isa active_isa();
void force_isa(Isa isa);  // throws if unavailable
const char* isa_name(Isa isa);
SweepFn theta_sweep();

}  // namespace circ::kern
