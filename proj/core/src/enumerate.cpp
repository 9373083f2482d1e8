#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "polya/error.hpp"
#include "polya/info.hpp"
#include "polya/oracle.hpp"

namespace polya {

ExactNoise ExactNoise::make(Rational delta0, Rational delta1) {
  for (const Rational* d : {&delta0, &delta1}) {
    if (*d < 0 || *d > 1) {
      throw DomainError("noise value " + to_fraction_string(*d) + " outside [0, 1]");
    }
  }
  return {std::move(delta0), std::move(delta1)};
}

ExactNoise ExactNoise::parse(std::string_view delta0, std::string_view delta1) {
  return make(parse_rational(delta0), parse_rational(delta1));
}

ExactModelSpec ExactModelSpec::make(Rule rule, ExactNoise noise, Word seed) {
  if (seed.empty()) throw EmptyWordError("exact model seed");
  return {rule, std::move(noise), std::move(seed)};
}

Rational ExactDist::total() const {
  Rational sum = 0;
  for (const auto& [w, p] : probs) sum += p;
  return sum;
}

Rational ExactDist::at(const Word& w) const {
  auto it = probs.find(w);
  return it == probs.end() ? Rational(0) : it->second;
}

namespace {

using Saturating = std::uint64_t;
constexpr Saturating kSaturate = std::uint64_t{1} << 62;

Saturating sat_mul(Saturating a, Saturating b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturate / b) return kSaturate;
  return a * b;
}

Saturating sat_add(Saturating a, Saturating b) { return a + b > kSaturate ? kSaturate : a + b; }

// Number of channel outcomes with nonzero probability that can occur from
// some symbol: 1 when both flip probabilities are 0 or 1.
Saturating channel_outcomes(const ExactNoise& noise) {
  auto deterministic = [](const Rational& d) { return d == 0 || d == 1; };
  return deterministic(noise.delta0) && deterministic(noise.delta1) ? 1 : 2;
}

struct Outcome {
  Bit bit;
  Rational prob;
};

// Channel outcomes of duplicating `a`, zero-probability outcomes dropped.
std::vector<Outcome> channel_law(Bit a, const ExactNoise& noise) {
  std::vector<Outcome> out;
  const Rational& flip = noise.flip_probability(a);
  if (flip != 1) out.push_back({a, Rational(1 - flip)});
  if (flip != 0) out.push_back({complement(a), flip});
  return out;
}

}  // namespace

std::uint64_t projected_enumeration_work(const ExactModelSpec& spec, std::size_t n) {
  const Saturating outcomes = channel_outcomes(spec.noise);
  Saturating histories = 1;
  Saturating work = 0;
  for (std::size_t level = 0; level < n; ++level) {
    const std::size_t len = spec.seed.size() + level;
    const Saturating distinct_bound = len >= 62 ? kSaturate : (Saturating{1} << len);
    const Saturating states = std::min(histories, distinct_bound);
    Saturating branching = sat_mul(len, outcomes);
    if (spec.rule == Rule::Interspersed) branching = sat_mul(branching, len + 1);
    work = sat_add(work, sat_mul(states, branching));
    histories = sat_mul(histories, branching);
  }
  return work;
}

ExactDist enumerate_distribution(const ExactModelSpec& spec, std::size_t n,
                                 const EnumerationLimits& limits) {
  if (spec.seed.empty()) throw EmptyWordError("enumerate_distribution");
  const std::uint64_t work = projected_enumeration_work(spec, n);
  if (work > limits.max_work) {
    throw BudgetExceededError("enumeration of " + std::to_string(n) +
                              " steps needs projected work " + std::to_string(work) +
                              " > budget " + std::to_string(limits.max_work));
  }

  const std::array<std::vector<Outcome>, 2> law{channel_law(Bit::Zero, spec.noise),
                                                channel_law(Bit::One, spec.noise)};

  std::map<Word, Rational> level{{spec.seed, Rational(1)}};
  for (std::size_t step = 0; step < n; ++step) {
    std::map<Word, Rational> next;
    const std::size_t len = spec.seed.size() + step;
    for (const auto& [w, p] : level) {
      switch (spec.rule) {
        case Rule::End: {
          // Only the source symbol matters, not its position.
          const SymbolCounts c = symbol_counts(w);
          for (Bit a : {Bit::Zero, Bit::One}) {
            const std::size_t count = a == Bit::Zero ? c.zeros : c.ones;
            if (count == 0) continue;
            const Rational source = p * ratio(count, len);
            for (const Outcome& o : law[to_int(a)]) {
              Word grown = w;
              grown.push_back(o.bit);
              next[grown] += source * o.prob;
            }
          }
          break;
        }
        case Rule::Tandem: {
          const Rational source = p / len;
          for (std::size_t i = 0; i < len; ++i) {
            for (const Outcome& o : law[to_int(w[i])]) {
              Word grown = w;
              grown.insert(i + 1, o.bit);
              next[grown] += source * o.prob;
            }
          }
          break;
        }
        case Rule::Interspersed: {
          const SymbolCounts c = symbol_counts(w);
          for (Bit a : {Bit::Zero, Bit::One}) {
            const std::size_t count = a == Bit::Zero ? c.zeros : c.ones;
            if (count == 0) continue;
            const Rational source = p * ratio(count, len * (len + 1));
            for (const Outcome& o : law[to_int(a)]) {
              const Rational branch = source * o.prob;
              for (std::size_t j = 0; j <= len; ++j) {
                Word grown = w;
                grown.insert(j, o.bit);
                next[grown] += branch;
              }
            }
          }
          break;
        }
      }
    }
    level = std::move(next);
  }
  return {spec, n, std::move(level)};
}

double exact_entropy(const ExactDist& dist) {
  double h = 0.0;
  for (const auto& [w, p] : dist.probs) {
    const double x = to_double(p);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

std::map<std::size_t, Rational> zero_count_law(const ExactDist& dist) {
  std::map<std::size_t, Rational> law;
  for (const auto& [w, p] : dist.probs) law[w.count(Bit::Zero)] += p;
  return law;
}

void write_canonical(std::ostream& os, const ExactDist& dist) {
  for (const auto& [w, p] : dist.probs) {
    os << w.to_string() << ' ' << to_fraction_string(p) << '\n';
  }
}

std::string to_canonical_text(const ExactDist& dist) {
  std::ostringstream os;
  write_canonical(os, dist);
  return os.str();
}

std::map<Word, Rational> parse_canonical(std::istream& is) {
  std::map<Word, Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word;
    std::string prob;
    std::string extra;
    if (!(fields >> word >> prob) || (fields >> extra)) {
      throw DomainError("canonical distribution line " + std::to_string(lineno) +
                        ": expected '<word> <p>/<q>'");
    }
    out[Word::parse(word)] = parse_rational(prob);
  }
  return out;
}

Rational prob_end_noiseless(std::uint64_t t0, std::uint64_t t1, std::uint64_t k0,
                            std::uint64_t k1) {
  if (t0 == 0 || t1 == 0) throw DomainError("prob_end_noiseless: t0 and t1 must be >= 1");
  return ratio(factorial(t0 + t1 - 1) * factorial(t0 + k0 - 1) * factorial(t1 + k1 - 1),
               factorial(t0 - 1) * factorial(t1 - 1) * factorial(t0 + t1 + k0 + k1 - 1));
}

Rational prob_class_Ak0(std::uint64_t n, std::uint64_t k0, std::uint64_t t0,
                        std::uint64_t t1) {
  if (k0 > n) throw DomainError("prob_class_Ak0: k0 exceeds n");
  return Rational(binomial(n, k0)) * prob_end_noiseless(t0, t1, k0, n - k0);
}

Rational interspersed_perm_prob(std::uint64_t n, std::uint64_t seed_len) {
  if (seed_len == 0) throw DomainError("interspersed_perm_prob: seed_len must be >= 1");
  return ratio(factorial(seed_len), factorial(seed_len + n));
}

std::pair<BigInt, BigInt> equivalence_class_bounds(std::uint64_t t0, std::uint64_t t1,
                                                   std::uint64_t k0, std::uint64_t k1) {
  return {factorial(k0) * factorial(k1), factorial(t0 + k0) * factorial(t1 + k1)};
}

std::pair<Rational, Rational> interspersed_word_bounds(std::uint64_t t0, std::uint64_t t1,
                                                       std::uint64_t k0, std::uint64_t k1) {
  const auto [lo, hi] = equivalence_class_bounds(t0, t1, k0, k1);
  const Rational per_perm = interspersed_perm_prob(k0 + k1, t0 + t1);
  const Rational ak0 = prob_class_Ak0(k0 + k1, k0, t0, t1);
  return {Rational(lo) * per_perm * ak0, Rational(hi) * per_perm * ak0};
}

}  // namespace polya
