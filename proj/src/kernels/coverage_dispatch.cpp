#include <atomic>
#include <stdexcept>
#include <string>

#include "rim/kernels/coverage.hpp"

namespace rim::kernels {
namespace {

// -1 = automatic selection, otherwise a pinned Isa value.
std::atomic<int> g_forced{-1};

}  // namespace

#if !defined(RIM_HAVE_AVX2_KERNEL)
void coverage_counts_avx2(const CoverageBatch& batch, std::span<std::uint32_t> counts) {
  coverage_counts_scalar(batch, counts);
}
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(RIM_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa selected_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa best = isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  return best;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("ISA " + std::string(isa_name(isa)) + " not supported on this host");
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

void coverage_counts(const CoverageBatch& batch, std::span<std::uint32_t> counts) {
  switch (selected_isa()) {
    case Isa::kAvx2:
      coverage_counts_avx2(batch, counts);
      return;
    case Isa::kScalar:
      break;
  }
  coverage_counts_scalar(batch, counts);
}

}  // namespace rim::kernels
