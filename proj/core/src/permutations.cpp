#include "polya/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polya/error.hpp"

namespace polya {

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::uint32_t v : values_) {
    if (v < 1 || v > values_.size() || seen[v]) {
      throw DomainError("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1U);
  return Permutation(std::move(v));
}

Word signature(const Permutation& pi) {
  Word u;
  const auto v = pi.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    u.push_back(v[i] < v[i + 1] ? Bit::One : Bit::Zero);
  }
  return u;
}

namespace {

void require_complement_tandem(const Word& seed, Rule rule, const NoiseParams& noise) {
  if (rule != Rule::Tandem || seed != Word::parse("0") || noise.delta0 != 1.0 ||
      noise.delta1 != 1.0) {
    throw UnsupportedSpecError(
        "history permutations are defined for tandem duplication from seed 0 with "
        "delta0 = delta1 = 1");
  }
}

}  // namespace

Permutation history_permutation(const History& history, const Word& seed, Rule rule,
                                const NoiseParams& noise) {
  require_complement_tandem(seed, rule, noise);
  Word w = seed;
  // Creation step of each symbol currently in the word; the seed symbol is 0.
  std::vector<std::uint32_t> labels{0};
  std::uint32_t step = 0;
  for (const StepRecord& rec : history) {
    ++step;
    apply_step(Rule::Tandem, w, rec);
    if (rec.output_bit != complement(rec.source_bit)) {
      throw InvalidHistoryError("step " + std::to_string(step) +
                                " did not complement its source symbol");
    }
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(rec.insert_position - 1), step);
  }
  return Permutation(std::vector<std::uint32_t>(labels.begin() + 1, labels.end()));
}

History history_from_permutation(const Permutation& pi) {
  const std::size_t n = pi.size();
  // Final arrangement of creation labels, seed first.
  std::vector<std::uint32_t> final_order{0};
  final_order.insert(final_order.end(), pi.values().begin(), pi.values().end());
  std::vector<std::size_t> where(n + 1);
  for (std::size_t i = 0; i < final_order.size(); ++i) where[final_order[i]] = i;

  History history;
  history.reserve(n);
  Word w = Word::parse("0");
  std::vector<std::uint32_t> current{0};
  for (std::uint32_t t = 1; t <= n; ++t) {
    // The source of symbol t is the nearest older symbol to its left: later
    // insertions can only land after it, never between it and t's parent
    // before t existed.
    std::size_t i = where[t];
    while (final_order[--i] > t) {
    }
    const std::uint32_t parent = final_order[i];
    const auto it = std::find(current.begin(), current.end(), parent);
    const std::size_t source = static_cast<std::size_t>(it - current.begin()) + 1;
    StepRecord rec;
    rec.source_position = source;
    rec.source_bit = w[source - 1];
    rec.output_bit = complement(rec.source_bit);
    rec.insert_position = source + 1;
    apply_step(Rule::Tandem, w, rec);
    current.insert(current.begin() + static_cast<std::ptrdiff_t>(source), t);
    history.push_back(rec);
  }
  return history;
}

TransitionSets transition_sets(const Word& v) {
  const std::size_t n = v.size();
  TransitionSets sets;
  // 1-based: v_i is v[i - 1]; i = 1 and i = n + 1 are the boundary clauses.
  for (std::size_t i = 1; i <= n + 1; ++i) {
    const bool left_one = i == 1 || v[i - 2] == Bit::One;
    const bool left_zero = i == 1 || v[i - 2] == Bit::Zero;
    const bool right_zero = i == n + 1 || v[i - 1] == Bit::Zero;
    const bool right_one = i == n + 1 || v[i - 1] == Bit::One;
    if (left_one && right_zero) sets.t.push_back(i);
    if (left_zero && right_one) sets.u.push_back(i);
  }
  return sets;
}

}  // namespace polya
