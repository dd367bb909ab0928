#include "rim/kernels/coverage.hpp"

namespace rim::kernels {

void coverage_counts_scalar(const CoverageBatch& batch, std::span<std::uint32_t> counts) {
  const std::size_t n = batch.px.size();
  const std::size_t m = batch.cx.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t x = batch.px[i];
    const std::int64_t y = batch.py[i];
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t dx = batch.cx[j] - x;
      const std::int64_t dy = batch.cy[j] - y;
      c += static_cast<std::uint32_t>(dx * dx + dy * dy <= batch.r2[j]);
    }
    counts[i] = c;
  }
}

}  // namespace rim::kernels
