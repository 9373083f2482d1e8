#pragma once

// Permutation machinery behind complement tandem duplication from the seed 0:
// history permutations, up-down signatures and their counts, and the
// signature-process entropies that bound the capacity of that model.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "polya/exact.hpp"
#include "polya/models.hpp"
#include "polya/rational.hpp"
#include "polya/word.hpp"

namespace polya {

// A bijection on [n], stored 1-based in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<std::uint32_t> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  /// pi_i for 1 <= i <= n.
  std::uint32_t operator()(std::size_t i) const noexcept { return values_[i - 1]; }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> values_;
};

/// Up-down word of length n - 1: symbol i is 1 iff pi_i < pi_{i+1}.
/// The empty permutation and permutations of size 1 give the empty word.
Word signature(const Permutation& pi);

/// Encodes an n-step history of complement tandem duplication from the seed
/// "0" by labelling each symbol with the step that created it and dropping
/// the seed. Throws UnsupportedSpecError for any other seed or noise, and
/// InvalidHistoryError for a history that is not a valid tandem history.
Permutation history_permutation(const History& history, const Word& seed, Rule rule,
                                const NoiseParams& noise);

/// Inverse of history_permutation for the seed "0" and delta0 = delta1 = 1.
History history_from_permutation(const Permutation& pi);

/// Positions in [1, |v| + 1] where the maximum (t) or minimum (u) of a
/// permutation with signature v can sit.
struct TransitionSets {
  std::vector<std::size_t> t;
  std::vector<std::size_t> u;
};

TransitionSets transition_sets(const Word& v);

/// Number of permutations of [|u| + 1] with signature u, by the O(m^2)
/// prefix-rank dynamic program.
BigInt count_signature_dp(const Word& u);

enum class Placement { Maximum, Minimum };

/// Same count by recursively placing the maximum (positions t of
/// transition_sets) or the minimum (positions u), memoised on subwords.
BigInt count_signature_recursion(const Word& u, Placement placement = Placement::Maximum);

/// Counts for every signature of length m - 1 (permutations of [m]).
/// Throws BudgetExceededError when m > 20.
std::map<Word, BigInt> signature_counts(std::size_t m);

/// Pr(S(|u|+1) = 01u) for complement tandem duplication from seed 0:
/// count_signature_dp(u) / (|u| + 1)!.
Rational prob_tandem_complement(const Word& u);

struct BlockEntropyRow {
  std::size_t m = 0;         // block length (signature symbols)
  double entropy = 0.0;      // H of the first m signature symbols, bits
  double increment = 0.0;    // entropy(m) - entropy(m - 1)
};

struct SignatureLimits {
  std::size_t max_block = 24;
};

/// Exact block entropies of the signature of a uniform random permutation,
/// m = 1 .. m_max. Throws BudgetExceededError when m_max > limits.max_block.
std::vector<BlockEntropyRow> signature_block_entropies(std::size_t m_max,
                                                       const SignatureLimits& limits = {});

/// H(block k+1) - H(block k): the order-k conditional entropy of the
/// stationary signature process, an upper bound on the capacity of complement
/// tandem duplication. k = 1 gives H2(1/3).
CapacityValue markov_upper_bound(std::size_t k, const SignatureLimits& limits = {});

}  // namespace polya
