#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace polya {

// Deterministic random stream keyed by (master seed, trial index).
//
// Counter based: the i-th output is a SplitMix64 finalisation of
// key + i * gamma, so any stream can be reconstructed from its key alone and
// distinct trials never share state. All derived draws (bounded integers,
// uniform reals, Bernoulli) are implemented here rather than through
// <random> distributions so results are identical across standard libraries.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  /// Uniform integer in [1, n]; the 1-based position draws of the models.
  std::uint64_t position(std::uint64_t n) noexcept { return below(n) + 1; }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() noexcept;

  /// True with probability p (p <= 0 never, p >= 1 always).
  bool bernoulli(double p) noexcept { return uniform01() < p; }

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace polya
