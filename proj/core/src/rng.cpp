#include "urbanflow/rng.hpp"

namespace urbanflow {

std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                       std::uint64_t d) {
  SplitMix64 m(a ^ 0x2545f4914f6cdd1dULL);
  std::uint64_t h = m.next();
  h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = SplitMix64(h).next();
  h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = SplitMix64(h).next();
  h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return SplitMix64(h).next();
}

}  // namespace urbanflow
