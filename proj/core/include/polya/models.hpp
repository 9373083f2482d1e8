#pragma once

// The three noisy duplication rules and a trajectory runner.
//
// Positions in StepRecord are 1-based: the source position |ua| lies in
// [1, |w|] and the insert position is the index the new symbol occupies in
// the grown word, in [1, |w| + 1].

#include <cstddef>
#include <string_view>
#include <vector>

#include "polya/rng.hpp"
#include "polya/word.hpp"

namespace polya {

enum class Rule { End, Tandem, Interspersed };

std::string_view rule_name(Rule rule) noexcept;
/// Accepts "end", "tandem"/"tan", "int"/"interspersed". Throws DomainError.
Rule parse_rule(std::string_view text);

/// Complement probabilities of the duplicate channel: a duplicated symbol a is
/// flipped with probability delta_a.
struct NoiseParams {
  double delta0 = 0.0;
  double delta1 = 0.0;

  /// Throws DomainError unless both values lie in [0, 1].
  static NoiseParams make(double delta0, double delta1);

  double flip_probability(Bit a) const noexcept { return a == Bit::Zero ? delta0 : delta1; }
  bool degenerate() const noexcept { return delta0 == 0.0 && delta1 == 0.0; }
  friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

struct ModelSpec {
  Rule rule = Rule::End;
  NoiseParams noise;
  Word seed;

  /// Validates the noise range and a nonempty seed.
  static ModelSpec make(Rule rule, NoiseParams noise, Word seed);
};

struct StepRecord {
  std::size_t source_position = 0;
  Bit source_bit = Bit::Zero;
  Bit output_bit = Bit::Zero;
  std::size_t insert_position = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

using History = std::vector<StepRecord>;

struct Trajectory {
  Word word;
  History history;
};

/// Passes `a` through the asymmetric binary channel.
Bit duplicate_channel(Bit a, const NoiseParams& noise, RngStream& rng) noexcept;

// Single steps mutate `w` in place and return the record of their choices.
// Each draws the source position, then the channel outcome, then (for the
// interspersed rule) the insert position. All throw EmptyWordError when w is
// empty.
StepRecord step_end(Word& w, const NoiseParams& noise, RngStream& rng);
StepRecord step_tandem(Word& w, const NoiseParams& noise, RngStream& rng);
StepRecord step_interspersed(Word& w, const NoiseParams& noise, RngStream& rng);
StepRecord step(Rule rule, Word& w, const NoiseParams& noise, RngStream& rng);

/// n steps from the seed with the full history logged.
Trajectory run(const ModelSpec& spec, std::size_t n, RngStream& rng);

/// n steps from the seed without logging; same draws and result as run().
Word run_final(const ModelSpec& spec, std::size_t n, RngStream& rng);

/// Applies one recorded step. Throws InvalidHistoryError if a position is out
/// of range, the recorded source bit disagrees with the word, or the insert
/// position is inconsistent with the rule.
void apply_step(Rule rule, Word& w, const StepRecord& record);

/// Re-applies a recorded history to the seed.
Word replay(const Word& seed, Rule rule, const History& history);

}  // namespace polya
