#ifndef EXPOFIT_RANDOM_HPP
#define EXPOFIT_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace expofit {

/// The generator behind every bootstrap stream. std::mt19937_64 and
/// std::seed_seq are both specified bit-for-bit by the standard, so a stream
/// keyed by (master seed, replicate index) is portable across toolchains.
using Engine = std::mt19937_64;

/// Independent stream for replicate `index` (0-based) under `master_seed`.
inline Engine replicate_stream(std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(master_seed),
      static_cast<std::uint32_t>(master_seed >> 32),
      static_cast<std::uint32_t>(index),
      static_cast<std::uint32_t>(index >> 32),
  };
  return Engine(seq);
}

/// Uniform draw on the open interval (0, 1) from the top 52 bits of one
/// 64-bit output: (k + 1/2) / 2^52. Every such value is exactly representable,
/// so the result never rounds to 0 or 1. Avoids std::uniform_real_distribution,
/// whose algorithm differs between standard libraries.
template <class Gen>
double uniform_open01(Gen& gen) {
  static_assert(Gen::min() == 0 && Gen::max() == std::numeric_limits<std::uint64_t>::max(),
                "uniform_open01 needs a full-range 64-bit generator");
  const std::uint64_t k = static_cast<std::uint64_t>(gen()) >> 12;
  return (static_cast<double>(k) + 0.5) * 0x1.0p-52;
}

}  // namespace expofit

#endif  // EXPOFIT_RANDOM_HPP
