#ifndef GRIDNET_RNG_HPP
#define GRIDNET_RNG_HPP

#include <cstdint>
#include <random>

namespace gridnet {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives an independent substream seed from (seed, stream). Used so that
/// per-trial and per-scenario streams depend only on their coordinates,
/// never on execution order or worker count.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + (stream << 1));
  std::uint64_t a = splitmix64(s);
  return splitmix64(s) ^ a;
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace gridnet

#endif
