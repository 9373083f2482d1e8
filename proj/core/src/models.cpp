#include "polya/models.hpp"

#include <string>

#include "polya/error.hpp"

namespace polya {

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::End:
      return "end";
    case Rule::Tandem:
      return "tandem";
    case Rule::Interspersed:
      return "int";
  }
  return "?";
}

Rule parse_rule(std::string_view text) {
  if (text == "end") return Rule::End;
  if (text == "tandem" || text == "tan") return Rule::Tandem;
  if (text == "int" || text == "interspersed") return Rule::Interspersed;
  throw DomainError("unknown rule '" + std::string(text) + "' (expected end, tandem or int)");
}

NoiseParams NoiseParams::make(double delta0, double delta1) {
  auto check = [](double d, const char* name) {
    if (!(d >= 0.0 && d <= 1.0)) {
      throw DomainError(std::string(name) + " = " + std::to_string(d) + " outside [0, 1]");
    }
  };
  check(delta0, "delta0");
  check(delta1, "delta1");
  return {delta0, delta1};
}

ModelSpec ModelSpec::make(Rule rule, NoiseParams noise, Word seed) {
  noise = NoiseParams::make(noise.delta0, noise.delta1);
  if (seed.empty()) throw EmptyWordError("model seed");
  return {rule, noise, std::move(seed)};
}

Bit duplicate_channel(Bit a, const NoiseParams& noise, RngStream& rng) noexcept {
  return rng.bernoulli(noise.flip_probability(a)) ? complement(a) : a;
}

namespace {

// Source position and channel output shared by all three rules.
StepRecord draw_source(const Word& w, const NoiseParams& noise, RngStream& rng,
                       const char* where) {
  if (w.empty()) throw EmptyWordError(where);
  StepRecord rec;
  rec.source_position = static_cast<std::size_t>(rng.position(w.size()));
  rec.source_bit = w[rec.source_position - 1];
  rec.output_bit = duplicate_channel(rec.source_bit, noise, rng);
  return rec;
}

}  // namespace

StepRecord step_end(Word& w, const NoiseParams& noise, RngStream& rng) {
  StepRecord rec = draw_source(w, noise, rng, "step_end");
  rec.insert_position = w.size() + 1;
  w.push_back(rec.output_bit);
  return rec;
}

StepRecord step_tandem(Word& w, const NoiseParams& noise, RngStream& rng) {
  StepRecord rec = draw_source(w, noise, rng, "step_tandem");
  rec.insert_position = rec.source_position + 1;
  w.insert(rec.insert_position - 1, rec.output_bit);
  return rec;
}

StepRecord step_interspersed(Word& w, const NoiseParams& noise, RngStream& rng) {
  StepRecord rec = draw_source(w, noise, rng, "step_interspersed");
  rec.insert_position = static_cast<std::size_t>(rng.position(w.size() + 1));
  w.insert(rec.insert_position - 1, rec.output_bit);
  return rec;
}

StepRecord step(Rule rule, Word& w, const NoiseParams& noise, RngStream& rng) {
  switch (rule) {
    case Rule::End:
      return step_end(w, noise, rng);
    case Rule::Tandem:
      return step_tandem(w, noise, rng);
    case Rule::Interspersed:
      return step_interspersed(w, noise, rng);
  }
  throw DomainError("step: unknown rule");
}

Trajectory run(const ModelSpec& spec, std::size_t n, RngStream& rng) {
  Trajectory t{spec.seed, {}};
  t.word.reserve(spec.seed.size() + n);
  t.history.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.history.push_back(step(spec.rule, t.word, spec.noise, rng));
  }
  return t;
}

Word run_final(const ModelSpec& spec, std::size_t n, RngStream& rng) {
  Word w = spec.seed;
  w.reserve(spec.seed.size() + n);
  for (std::size_t i = 0; i < n; ++i) step(spec.rule, w, spec.noise, rng);
  return w;
}

void apply_step(Rule rule, Word& w, const StepRecord& rec) {
  const std::size_t len = w.size();
  if (rec.source_position < 1 || rec.source_position > len) {
    throw InvalidHistoryError("source position " + std::to_string(rec.source_position) +
                              " outside [1, " + std::to_string(len) + "]");
  }
  if (w[rec.source_position - 1] != rec.source_bit) {
    throw InvalidHistoryError("source bit at position " +
                              std::to_string(rec.source_position) + " does not match word");
  }
  std::size_t expected_lo = 1;
  std::size_t expected_hi = len + 1;
  if (rule == Rule::End) {
    expected_lo = expected_hi = len + 1;
  } else if (rule == Rule::Tandem) {
    expected_lo = expected_hi = rec.source_position + 1;
  }
  if (rec.insert_position < expected_lo || rec.insert_position > expected_hi) {
    throw InvalidHistoryError("insert position " + std::to_string(rec.insert_position) +
                              " invalid for rule " + std::string(rule_name(rule)));
  }
  w.insert(rec.insert_position - 1, rec.output_bit);
}

Word replay(const Word& seed, Rule rule, const History& history) {
  Word w = seed;
  w.reserve(seed.size() + history.size());
  for (const StepRecord& rec : history) apply_step(rule, w, rec);
  return w;
}

}  // namespace polya
