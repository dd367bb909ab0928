// Compiled with -mavx2; only reached through dispatch after a CPUID check.

#include <immintrin.h>

#include "rim/kernels/coverage.hpp"

namespace rim::kernels {

void coverage_counts_avx2(const CoverageBatch& batch, std::span<std::uint32_t> counts) {
  const std::size_t n = batch.px.size();
  const std::size_t m = batch.cx.size();
  const std::size_t m4 = m & ~std::size_t{3};

  const auto* cx = reinterpret_cast<const __m256i*>(batch.cx.data());
  const auto* cy = reinterpret_cast<const __m256i*>(batch.cy.data());
  const auto* r2 = reinterpret_cast<const __m256i*>(batch.r2.data());

  for (std::size_t i = 0; i < n; ++i) {
    const __m256i x = _mm256_set1_epi64x(batch.px[i]);
    const __m256i y = _mm256_set1_epi64x(batch.py[i]);
    // Accumulates -1 per lane for every ball that does NOT cover the point.
    __m256i outside = _mm256_setzero_si256();
    for (std::size_t j = 0; j < m4; j += 4) {
      const std::size_t k = j / 4;
      const __m256i dx = _mm256_sub_epi64(_mm256_loadu_si256(cx + k), x);
      const __m256i dy = _mm256_sub_epi64(_mm256_loadu_si256(cy + k), y);
      // Differences fit in 31 bits, so the signed 32x32->64 multiply is exact.
      const __m256i d2 = _mm256_add_epi64(_mm256_mul_epi32(dx, dx), _mm256_mul_epi32(dy, dy));
      outside = _mm256_add_epi64(outside, _mm256_cmpgt_epi64(d2, _mm256_loadu_si256(r2 + k)));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), outside);
    std::int64_t covered = static_cast<std::int64_t>(m4) + lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (std::size_t j = m4; j < m; ++j) {
      const std::int64_t dx = batch.cx[j] - batch.px[i];
      const std::int64_t dy = batch.cy[j] - batch.py[i];
      covered += dx * dx + dy * dy <= batch.r2[j];
    }
    counts[i] = static_cast<std::uint32_t>(covered);
  }
}

}  // namespace rim::kernels
