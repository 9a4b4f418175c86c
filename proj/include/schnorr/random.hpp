#pragma once

#include <cstdint>
#include <vector>

namespace schnorr {

// Stream tags for deriving independent generators from one master seed.
enum class Stream : std::uint64_t {
  kDiagonal = 1,
  kVqeRestart = 2,
  kShots = 3,
  kRound = 4,
};

// SplitMix64-based generator.  A stream is fully determined by
// (seed, stream tag, call index), so any stage can be replayed on its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  Rng(std::uint64_t seed, Stream stream, std::uint64_t index);

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [0, bound); rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

// Seed of the generator for (seed, stream, index); what Rng(seed, stream,
// index) starts from.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t index);

}  // namespace schnorr
