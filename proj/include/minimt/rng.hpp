#pragma once

#include <cstdint>
#include <vector>

namespace minimt {

// Deterministic PRNG used for every random draw in the toolkit (parameter
// init, shuffling, dropout). The generator is pinned bit-exactly so that a
// seed reproduces the same stream on any platform or implementation:
//
//   splitmix64(z):
//     z += 0x9E3779B97F4A7C15
//     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//     return z ^ (z >> 31)
//
//   state0 = splitmix64(seed); if state0 == 0 then state0 = 0x9E3779B97F4A7C15
//
//   next_u64() (xorshift64*):
//     s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27     (s is the stored state)
//     return s * 0x2545F4914F6CDD1D
//
//   uniform() = (next_u64() >> 11) * 2^-53            in [0, 1)
//   next_below(n) = next_u64() % n
//   shuffle = Fisher-Yates from the back using next_below
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(init_state(seed)) {}

  static uint64_t splitmix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t next_u64() {
    uint64_t s = state_;
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    state_ = s;
    return s * 0x2545F4914F6CDD1DULL;
  }

  // [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent stream derived from a base seed and a salt. Used to give
  // init / dropout / per-epoch shuffling their own reproducible streams.
  static Rng derive(uint64_t seed, uint64_t salt) {
    return Rng(splitmix64(seed ^ (salt * 0x9E3779B97F4A7C15ULL)));
  }

  uint64_t state() const { return state_; }
  void set_state(uint64_t s) { state_ = s == 0 ? 0x9E3779B97F4A7C15ULL : s; }

 private:
  static uint64_t init_state(uint64_t seed) {
    uint64_t s = splitmix64(seed);
    return s == 0 ? 0x9E3779B97F4A7C15ULL : s;
  }

  uint64_t state_;
};

}  // namespace minimt
