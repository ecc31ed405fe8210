#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fgm {

// splitmix64 finalizer; used to derive independent sub-stream seeds from a
// single root seed.
std::uint64_t mix64(std::uint64_t x);

// Seed for a named sub-stream ("generate", "train", "folds", ...) of a root
// seed. Same (root, stream, index) always yields the same seed.
std::uint64_t derive_seed(std::uint64_t root, std::string_view stream,
                          std::uint64_t index = 0);

// mt19937_64 with hand-rolled output distributions. std::uniform_* and
// std::normal_distribution are implementation-defined, which would make
// generated instances differ across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  // Standard normal via Box-Muller (pair cached).
  double normal();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fgm
