#pragma once

#include <cstdint>
#include <random>
#include <string_view>

// Randomness for the simulator. Two access patterns share one seed space:
//
//  * sequential draws from a named stream (agent placement, role shuffles);
//    the engine is std::mt19937_64, whose output sequence is fixed by the
//    standard, and every mapping from raw bits to a value is spelled out
//    here, so runs are byte-reproducible across platforms;
//  * keyed draws, a pure function of (stream key, indices) with no state.
//    Per-tick draws keyed by (tick, agent) and per-exposure draws keyed by
//    (susceptible, source) stay aligned between paired runs that share a
//    seed, which is what the common-random-numbers comparisons rely on.

namespace ctrace {

inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

/// splitmix64 step: increments by the golden ratio and finalizes.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += kGolden64;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Maps 64 random bits onto [0, 1) with 53-bit resolution.
constexpr double unit_double(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t keyed_bits(std::uint64_t key, std::uint64_t a,
                                   std::uint64_t b = 0,
                                   std::uint64_t c = 0) noexcept {
  std::uint64_t h = key;
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : key_(key), seq_(key) {}

  std::uint64_t key() const { return key_; }

  // --- sequential draws ---
  std::uint64_t next_bits() { return seq_(); }

  double uniform() { return unit_double(next_bits()); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [0, n). Fixed-point multiply keeps the mapping portable.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_bits()) * n) >> 64);
  }

  // --- keyed draws (stateless; see header comment) ---
  double unit_at(std::uint64_t a, std::uint64_t b = 0,
                 std::uint64_t c = 0) const {
    return unit_double(keyed_bits(key_, a, b, c));
  }

  double range_at(double lo, double hi, std::uint64_t a, std::uint64_t b = 0,
                  std::uint64_t c = 0) const {
    return lo + (hi - lo) * unit_at(a, b, c);
  }

 private:
  std::uint64_t key_;
  std::mt19937_64 seq_;
};

/// Derives an independent stream for (seed, name). Modules draw from their
/// own stream, so one module's draw count cannot perturb another's sequence.
inline RngStream named_stream(std::uint64_t seed, std::string_view name) {
  return RngStream(mix64(seed ^ mix64(fnv1a64(name))));
}

}  // namespace ctrace
