#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ssodr {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Derives an independent stream seed from a master seed, a stage tag and an
// optional index (cycle number, frame number, fold number, ...). Keeping all
// randomness on derived streams makes stage replay and per-item generation
// order-independent.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the tag
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ mix64(h) ^
               mix64(index + 0x632be59bd9b4e019ULL));
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view tag,
                                std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(seed, tag, index));
}

}  // namespace ssodr
