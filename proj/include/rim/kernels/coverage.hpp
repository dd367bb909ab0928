#pragma once

// Ball-coverage counting over integer-embedded coordinates.
//
// For every query point i, counts the balls j with
//   (px[i]-cx[j])^2 + (py[i]-cy[j])^2 <= r2[j].
// All coordinates must satisfy |v| <= kMaxEmbeddedCoordinate so that each
// difference fits in 31 bits and the squared sum fits in int64. Results are
// exact; the SIMD variants must agree with the scalar kernel bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace rim::kernels {

inline constexpr std::int64_t kMaxEmbeddedCoordinate = std::int64_t{1} << 29;

struct CoverageBatch {
  std::span<const std::int64_t> px;
  std::span<const std::int64_t> py;
  std::span<const std::int64_t> cx;
  std::span<const std::int64_t> cy;
  std::span<const std::int64_t> r2;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

void coverage_counts_scalar(const CoverageBatch& batch, std::span<std::uint32_t> counts);

/// Only valid when isa_supported(Isa::kAvx2).
void coverage_counts_avx2(const CoverageBatch& batch, std::span<std::uint32_t> counts);

bool isa_supported(Isa isa);

/// Best supported ISA, unless pinned via force_isa().
Isa selected_isa();

/// Pins dispatch to `isa` (tests and benchmarks). Throws if unsupported.
void force_isa(Isa isa);
void reset_isa();

/// Runtime-dispatched entry point.
void coverage_counts(const CoverageBatch& batch, std::span<std::uint32_t> counts);

}  // namespace rim::kernels
