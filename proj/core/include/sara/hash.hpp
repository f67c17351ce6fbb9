#ifndef SARA_HASH_HPP
#define SARA_HASH_HPP

#include <cstdint>
#include <cstring>
#include <string_view>

namespace sara {

/// splitmix64 finalizer; stable across platforms.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// FNV-1a over bytes; used for config digests.
constexpr std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Stable per-trial seed derivation: order-insensitive across parallel trials.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                                 double sweep_value = 0.0) {
  std::uint64_t bits = 0;
  std::memcpy(&bits, &sweep_value, sizeof(bits));
  return splitmix64(master_seed ^ splitmix64(trial_index ^ splitmix64(bits)));
}

}  // namespace sara

#endif
