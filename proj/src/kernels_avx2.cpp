#include "circulant/kernels.hpp"

#if defined(CIRC_BUILD_AVX2)

#include <immintrin.h>

namespace circ::kern {

namespace {

inline __m256i rotl4(__m256i v, __m256i s, __m256i n_minus_s, __m256i full) {
  __m256i r = _mm256_or_si256(_mm256_sllv_epi64(v, s), _mm256_srlv_epi64(v, n_minus_s));
  return _mm256_and_si256(r, full);
}

inline __m256i reverse4(__m256i v) {
  const __m256i lo_mask = _mm256_set1_epi8(0x0F);
  const __m256i rev_lo = _mm256_setr_epi8(0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15,
                                          0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15);
  const __m256i rev_hi = _mm256_slli_epi16(rev_lo, 4);
  const __m256i bswap = _mm256_setr_epi8(7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8,
                                         7, 6, 5, 4, 3, 2, 1, 0, 15, 14, 13, 12, 11, 10, 9, 8);
  __m256i lo = _mm256_and_si256(v, lo_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), lo_mask);
  __m256i r = _mm256_or_si256(_mm256_shuffle_epi8(rev_hi, lo), _mm256_shuffle_epi8(rev_lo, hi));
  return _mm256_shuffle_epi8(r, bswap);
}

}  // namespace

void theta_sweep_avx2(const SweepPlan& p, uint64_t sym, int t0, int count,
                      uint64_t* images, uint8_t* flags) {
  const int n = p.n;
  const __m256i full = _mm256_set1_epi64x(static_cast<long long>(p.full));
  const __m256i nv = _mm256_set1_epi64x(n);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i n_minus_1 = _mm256_set1_epi64x(n - 1);
  const __m256i align = _mm256_set1_epi64x(64 - n);
  __m256i part[kMaxClasses];
  for (int j = 0; j < p.m; ++j)
    part[j] = _mm256_set1_epi64x(static_cast<long long>(sym & p.cls[j]));

  int i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i img = part[0];
    for (int j = 1; j < p.m; ++j) {
      alignas(32) long long sh[4];
      for (int k = 0; k < 4; ++k)
        sh[k] = (static_cast<long long>(j) * p.m * (t0 + i + k)) % n;
      __m256i s = _mm256_load_si256(reinterpret_cast<const __m256i*>(sh));
      img = _mm256_or_si256(img, rotl4(part[j], s, _mm256_sub_epi64(nv, s), full));
    }
    __m256i neg = _mm256_srlv_epi64(reverse4(img), align);
    neg = rotl4(neg, one, n_minus_1, full);
    int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(neg, img)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(images + i), img);
    for (int k = 0; k < 4; ++k) flags[i + k] = static_cast<uint8_t>((eq >> k) & 1);
  }
  if (i < count) theta_sweep_scalar(p, sym, t0 + i, count - i, images + i, flags + i);
}

}  // namespace circ::kern

#endif
