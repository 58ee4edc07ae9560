#pragma once

#include <cstdint>

namespace escape {

/// Counter-based generator: every (seed, counter) pair maps to an independent
/// 64-bit word, so parallel workers can draw disjoint streams without shared
/// state and merges stay order-independent.
inline std::uint64_t hash_counter(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + counter * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from stream `seed`, draw index `counter`.
inline double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(hash_counter(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace escape
