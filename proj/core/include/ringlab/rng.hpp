#ifndef RINGLAB_RNG_HPP
#define RINGLAB_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace ringlab {

// Deterministic counter-based split: child streams are a pure function of
// (root seed, index), so parallel workers never share generator state.
std::uint64_t split_seed(std::uint64_t root, std::uint64_t index);

// mt19937_64 with explicit uniform/normal draws. The normal variates come
// from our own Box-Muller so that sequences do not depend on the standard
// library's unspecified std::normal_distribution algorithm.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal();

  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  bool operator==(const Rng& other) const {
    return engine_ == other.engine_ && have_spare_ == other.have_spare_ &&
           spare_ == other.spare_;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ringlab

#endif
