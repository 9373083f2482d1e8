#pragma once

// Exact small-instance ground truth: the law of S(n) computed by expanding
// every history in rational arithmetic, plus the closed-form probability
// identities it is checked against.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "polya/models.hpp"
#include "polya/rational.hpp"
#include "polya/word.hpp"

namespace polya {

/// Channel parameters as exact rationals in [0, 1].
struct ExactNoise {
  Rational delta0{0};
  Rational delta1{0};

  /// Throws DomainError unless both values lie in [0, 1].
  static ExactNoise make(Rational delta0, Rational delta1);
  /// Parses both values with parse_rational().
  static ExactNoise parse(std::string_view delta0, std::string_view delta1);

  const Rational& flip_probability(Bit a) const noexcept {
    return a == Bit::Zero ? delta0 : delta1;
  }
  NoiseParams approx() const { return {to_double(delta0), to_double(delta1)}; }
};

struct ExactModelSpec {
  Rule rule = Rule::End;
  ExactNoise noise;
  Word seed;

  /// Throws EmptyWordError for an empty seed.
  static ExactModelSpec make(Rule rule, ExactNoise noise, Word seed);
};

struct EnumerationLimits {
  /// Cap on projected expansion work: the sum over levels of (distinct-word
  /// bound) x (branching factor). Configuration, not a constant.
  std::uint64_t max_work = 100'000'000;
};

/// Exact law of S(n): every reachable word with its probability.
struct ExactDist {
  ExactModelSpec spec;
  std::size_t horizon = 0;
  std::map<Word, Rational> probs;  // ordered lexicographically

  Rational total() const;
  /// Probability of `w`, zero when unreachable.
  Rational at(const Word& w) const;
};

/// Projected work of enumerate_distribution; exposed so callers can check a
/// request against a budget before running it.
std::uint64_t projected_enumeration_work(const ExactModelSpec& spec, std::size_t n);

/// Exhaustive expansion of all histories, merging equal words level by level.
/// Throws BudgetExceededError when projected work exceeds `limits.max_work`.
ExactDist enumerate_distribution(const ExactModelSpec& spec, std::size_t n,
                                 const EnumerationLimits& limits = {});

/// Entropy in bits of the exact law (floating evaluation).
double exact_entropy(const ExactDist& dist);

/// Law of |S(n)|_0 obtained by summing word probabilities by zero count.
std::map<std::size_t, Rational> zero_count_law(const ExactDist& dist);

// Canonical text format: one line `<word> <numerator>/<denominator>` per word,
// words in lexicographic order. Lines starting with '#' are comments.
void write_canonical(std::ostream& os, const ExactDist& dist);
std::string to_canonical_text(const ExactDist& dist);
std::map<Word, Rational> parse_canonical(std::istream& is);

/// Noiseless end duplication: probability that S(n) = s w for a specific w
/// with k0 zeros and k1 ones, seed with t0 zeros and t1 ones:
/// (t0+t1-1)! (t0+k0-1)! (t1+k1-1)! / ((t0-1)! (t1-1)! (t0+t1+k0+k1-1)!).
/// Throws DomainError when t0 or t1 is zero.
Rational prob_end_noiseless(std::uint64_t t0, std::uint64_t t1, std::uint64_t k0,
                            std::uint64_t k1);

/// Probability that exactly k0 of the n appended symbols are zeros:
/// C(n, k0) prob_end_noiseless(t0, t1, k0, n - k0).
Rational prob_class_Ak0(std::uint64_t n, std::uint64_t k0, std::uint64_t t0,
                        std::uint64_t t1);

/// Probability of each order permutation in interspersed duplication:
/// seed_len! / (n + seed_len)!.
Rational interspersed_perm_prob(std::uint64_t n, std::uint64_t seed_len);

/// Factorial bounds k0! k1! <= |class| <= (t0+k0)! (t1+k1)! on the number of
/// order permutations producing the same word.
std::pair<BigInt, BigInt> equivalence_class_bounds(std::uint64_t t0, std::uint64_t t1,
                                                   std::uint64_t k0, std::uint64_t k1);

/// Bounds on Pr(S^int(n) = w) for noiseless interspersed duplication: the
/// class bounds times seed_len! / (seed_len + n)! times Pr(A_k0).
std::pair<Rational, Rational> interspersed_word_bounds(std::uint64_t t0, std::uint64_t t1,
                                                       std::uint64_t k0, std::uint64_t k1);

}  // namespace polya
