#ifndef FB_RNG_HPP
#define FB_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace fb {

// splitmix64 step; also used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256++ with splitmix64 seeding. The algorithms are fixed and fully
// specified here so other implementations can reproduce the streams exactly:
//   - state init: four successive splitmix64 outputs of the seed
//   - uniform doubles: top 53 bits of next() scaled by 2^-53
//   - normals: Box-Muller on two uniforms, cosine branch only
//   - bounded ints: rejection sampling, then modulo
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform();                      // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard normal
  std::uint64_t below(std::uint64_t n);  // [0, n), unbiased

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(below(i + 1));
      std::swap(v[i], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

// Deterministic substream: mixes (seed, stream) through splitmix64 so
// parallel generation is order independent.
Rng substream(std::uint64_t seed, std::uint64_t stream);

}  // namespace fb

#endif
