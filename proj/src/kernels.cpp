#include "circulant/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace circ::kern {

SweepPlan make_plan(int n, int m) {
  if (n < 3 || n > kMaxOrder) throw std::domain_error("kernel order out of range");
  if (m < 2 || m > kMaxClasses || n % (m * m * m) != 0)
    throw std::domain_error("kernel needs m > 1 with m^3 | n");
  SweepPlan p;
  p.n = n;
  p.m = m;
  p.full = full_mask(n);
  for (int x = 0; x < n; ++x) p.cls[x % m] |= uint64_t{1} << x;
  return p;
}

uint64_t reverse_bits(uint64_t v) {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(v);
}

uint64_t to_mask(const std::vector<int64_t>& residues) {
  uint64_t v = 0;
  for (int64_t x : residues) v |= uint64_t{1} << x;
  return v;
}

std::vector<int64_t> from_mask(uint64_t v) {
  std::vector<int64_t> out;
  while (v) {
    out.push_back(__builtin_ctzll(v));
    v &= v - 1;
  }
  return out;
}

void theta_sweep_scalar(const SweepPlan& p, uint64_t sym, int t0, int count,
                        uint64_t* images, uint8_t* flags) {
  for (int i = 0; i < count; ++i) {
    int t = t0 + i;
    uint64_t img = sym & p.cls[0];
    for (int j = 1; j < p.m; ++j) {
      int s = static_cast<int>((static_cast<int64_t>(j) * p.m * t) % p.n);
      img |= rotl(sym & p.cls[j], s, p.n);
    }
    images[i] = img;
    flags[i] = is_symmetric(img, p.n) ? 1 : 0;
  }
}

#if !defined(CIRC_BUILD_AVX2) && (defined(__x86_64__) || defined(_M_X64))
void theta_sweep_avx2(const SweepPlan& p, uint64_t sym, int t0, int count,
                      uint64_t* images, uint8_t* flags) {
  theta_sweep_scalar(p, sym, t0, count, images, flags);
}
#endif

bool avx2_available() {
#if defined(CIRC_BUILD_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{avx2_available() ? Isa::Avx2 : Isa::Scalar};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) throw std::runtime_error("AVX2 unavailable");
  current().store(isa);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

SweepFn theta_sweep() {
#if defined(CIRC_BUILD_AVX2)
  if (active_isa() == Isa::Avx2) return theta_sweep_avx2;
#endif
  return theta_sweep_scalar;
}

}  // namespace circ::kern
