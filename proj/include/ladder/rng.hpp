#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ladder {

// Deterministic random source. Same seed, same call sequence: bit-identical
// results on every host (the engine is the fully specified mt19937_64 and
// every derived draw below is defined in terms of its integer output).
//
// Independent named streams are derived as
//   child_seed = splitmix64(parent_seed ^ fnv1a64(label))
// so adding or removing draws on one stream never shifts another. Parameter
// tensors, corruption noise, and shuffles each get their own stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  Rng stream(std::string_view label) const;

  std::uint64_t next_u64();
  // Uniform in [0, 1): (next_u64() >> 11) * 2^-53.
  double next_unit();
  // Standard normal via the Marsaglia polar transform; pairs are generated
  // and the spare is cached, so draws consume a deterministic uniform count.
  double next_gaussian();
  // Uniform in [0, bound) by rejection; bound must be positive.
  std::size_t next_index(std::size_t bound);

  // In-place Fisher-Yates using next_index (std::shuffle is not seed-stable
  // across standard libraries).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      std::size_t j = next_index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

  static std::uint64_t splitmix64(std::uint64_t x);
  static std::uint64_t fnv1a64(std::string_view s);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ladder
