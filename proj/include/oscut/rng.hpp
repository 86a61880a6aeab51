#ifndef OSCUT_RNG_HPP
#define OSCUT_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace oscut {

/// Deterministic random stream with portable output.
///
/// std::mt19937_64's integer sequence is fixed by the standard; the float
/// conversion below avoids std::uniform_real_distribution, whose output is
/// implementation-defined. Identical seeds give identical draws everywhere.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1), 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), unbiased via rejection. bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

}  // namespace detail

/// Derives the seed of a named sub-stream from a master seed. Every source of
/// randomness in the tool draws from its own named stream so that adding a
/// feature never perturbs existing ones.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                 std::uint64_t index = 0) {
  std::uint64_t state = master;
  detail::splitmix64(state);
  state ^= detail::fnv1a(stream);
  detail::splitmix64(state);
  state ^= index;
  return detail::splitmix64(state);
}

}  // namespace oscut

#endif  // OSCUT_RNG_HPP
