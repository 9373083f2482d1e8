#include "polya/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "polya/error.hpp"
#include "polya/exact.hpp"
#include "polya/info.hpp"
#include "polya/rng.hpp"

namespace polya {

SimConfig SimConfig::make(std::size_t trials, std::size_t horizon, std::uint64_t master_seed,
                          RecordMode mode, unsigned threads) {
  if (trials == 0) throw DomainError("SimConfig: trials must be >= 1");
  if (horizon == 0) throw DomainError("SimConfig: horizon must be >= 1");
  return {trials, horizon, master_seed, mode, threads};
}

EstimateResult summarize(std::span<const double> samples) {
  EstimateResult r;
  r.trials = samples.size();
  if (samples.empty()) return r;
  double sum = 0.0;
  for (double x : samples) sum += x;
  r.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double x : samples) ss += (x - r.mean) * (x - r.mean);
    const double var = ss / static_cast<double>(samples.size() - 1);
    r.standard_error = std::sqrt(var / static_cast<double>(samples.size()));
  }
  return r;
}

void for_each_trial(std::size_t trials, unsigned threads,
                    const std::function<void(std::size_t)>& body) {
  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  if (workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < trials && !failed.load(); i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

// Zero and one counts after n steps. The source symbol of every rule is a
// uniform position of the current word, so only the counts evolve.
SymbolCounts run_counts(const ModelSpec& spec, std::size_t n, RngStream& rng) {
  SymbolCounts c = symbol_counts(spec.seed);
  for (std::size_t step = 0; step < n; ++step) {
    const Bit a = rng.below(c.total()) < c.zeros ? Bit::Zero : Bit::One;
    if (duplicate_channel(a, spec.noise, rng) == Bit::Zero) {
      ++c.zeros;
    } else {
      ++c.ones;
    }
  }
  return c;
}

Word final_word(const ModelSpec& spec, const SimConfig& config, RngStream& rng) {
  if (config.record_mode == RecordMode::FullHistory) return run(spec, config.horizon, rng).word;
  return run_final(spec, config.horizon, rng);
}

std::array<std::size_t, 4> cyclic_pair_counts(const Word& w) {
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Bit b = w[(i + 1) % w.size()];
    ++counts[2 * to_int(w[i]) + to_int(b)];
  }
  return counts;
}

// Tandem duplication on a singly linked list in creation order: a uniform
// node is a uniform position, and inserting after it changes one cyclic pair
// into two.
std::array<std::size_t, 4> run_tandem_pairs(const ModelSpec& spec, std::size_t n,
                                            RngStream& rng) {
  const std::size_t len0 = spec.seed.size();
  std::vector<std::uint32_t> next(len0 + n);
  std::vector<std::uint8_t> bit(len0 + n);
  for (std::size_t i = 0; i < len0; ++i) {
    bit[i] = static_cast<std::uint8_t>(to_int(spec.seed[i]));
    next[i] = static_cast<std::uint32_t>((i + 1) % len0);
  }
  std::array<std::size_t, 4> counts = cyclic_pair_counts(spec.seed);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t len = len0 + step;
    const auto node = static_cast<std::uint32_t>(rng.below(len));
    const Bit a = bit_from_int(bit[node]);
    const int b = to_int(duplicate_channel(a, spec.noise, rng));
    const std::uint32_t after = next[node];
    --counts[2 * bit[node] + bit[after]];
    ++counts[2 * bit[node] + b];
    ++counts[2 * b + bit[after]];
    bit[len] = static_cast<std::uint8_t>(b);
    next[len] = after;
    next[node] = static_cast<std::uint32_t>(len);
  }
  return counts;
}

}  // namespace

std::vector<double> sample_symbol_freq(const ModelSpec& spec, const SimConfig& config) {
  std::vector<double> out(config.trials);
  for_each_trial(config.trials, config.threads, [&](std::size_t t) {
    RngStream rng(config.master_seed, t);
    if (config.record_mode == RecordMode::RunningCounts) {
      const SymbolCounts c = run_counts(spec, config.horizon, rng);
      out[t] = static_cast<double>(c.zeros) / static_cast<double>(c.total());
    } else {
      out[t] = freq_symbol(final_word(spec, config, rng), Bit::Zero);
    }
  });
  return out;
}

EstimateResult estimate_symbol_freq(const ModelSpec& spec, const SimConfig& config) {
  const auto samples = sample_symbol_freq(spec, config);
  return summarize(samples);
}

std::array<EstimateResult, 4> estimate_pair_freqs(const ModelSpec& spec,
                                                  const SimConfig& config) {
  if (spec.rule != Rule::Tandem) {
    throw RuleMismatchError("estimate_pair_freqs requires the tandem rule, got " +
                            std::string(rule_name(spec.rule)));
  }
  if (!(spec.noise.delta0 + spec.noise.delta1 > 0.0)) {
    throw DegenerateNoiseError("estimate_pair_freqs");
  }
  std::array<std::vector<double>, 4> samples;
  for (auto& s : samples) s.resize(config.trials);
  for_each_trial(config.trials, config.threads, [&](std::size_t t) {
    RngStream rng(config.master_seed, t);
    std::array<std::size_t, 4> counts;
    if (config.record_mode == RecordMode::RunningCounts) {
      counts = run_tandem_pairs(spec, config.horizon, rng);
    } else {
      counts = cyclic_pair_counts(final_word(spec, config, rng));
    }
    const double len = static_cast<double>(spec.seed.size() + config.horizon);
    for (std::size_t i = 0; i < 4; ++i) samples[i][t] = static_cast<double>(counts[i]) / len;
  });
  std::array<EstimateResult, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = summarize(samples[i]);
  return out;
}

namespace {

std::vector<Word> sample_words(const ModelSpec& spec, const SimConfig& config) {
  std::vector<Word> words(config.trials);
  for_each_trial(config.trials, config.threads, [&](std::size_t t) {
    RngStream rng(config.master_seed, t);
    words[t] = final_word(spec, config, rng);
  });
  return words;
}

}  // namespace

PluginEntropy estimate_entropy_plugin(const ModelSpec& spec, const SimConfig& config,
                                      bool allow_large_support) {
  if (config.horizon > kPluginMaxHorizon && !allow_large_support) {
    throw SupportTooLargeError("plug-in entropy at n = " + std::to_string(config.horizon) +
                               " exceeds the samplable guideline n <= " +
                               std::to_string(kPluginMaxHorizon));
  }
  std::unordered_map<Word, std::size_t> counts;
  for (const Word& w : sample_words(spec, config)) ++counts[w];
  // Sum over a sorted view so the floating result is order-stable.
  std::vector<std::size_t> freq;
  freq.reserve(counts.size());
  for (const auto& [w, c] : counts) freq.push_back(c);
  std::sort(freq.begin(), freq.end());

  const double total = static_cast<double>(config.trials);
  double h = 0.0;
  double second = 0.0;
  for (std::size_t c : freq) {
    const double p = static_cast<double>(c) / total;
    const double l = std::log2(p);
    h -= p * l;
    second += p * l * l;
  }
  PluginEntropy r;
  r.estimate.mean = h;
  r.estimate.standard_error = std::sqrt(std::max(0.0, second - h * h) / total);
  r.estimate.trials = config.trials;
  r.distinct_words = counts.size();
  return r;
}

std::map<Word, double> empirical_distribution(const ModelSpec& spec, const SimConfig& config) {
  std::map<Word, std::size_t> counts;
  for (const Word& w : sample_words(spec, config)) ++counts[w];
  std::map<Word, double> out;
  for (const auto& [w, c] : counts) {
    out.emplace(w, static_cast<double>(c) / static_cast<double>(config.trials));
  }
  return out;
}

double total_variation(const std::map<Word, double>& empirical, const ExactDist& exact) {
  double sum = 0.0;
  for (const auto& [w, p] : exact.probs) {
    const auto it = empirical.find(w);
    sum += std::abs(to_double(p) - (it == empirical.end() ? 0.0 : it->second));
  }
  for (const auto& [w, q] : empirical) {
    if (exact.probs.find(w) == exact.probs.end()) sum += q;
  }
  return sum / 2.0;
}

std::vector<OdeRow> trajectory_vs_ode(const ModelSpec& spec, const SimConfig& config,
                                      std::vector<std::size_t> checkpoints) {
  if (spec.rule != Rule::End) {
    throw RuleMismatchError("trajectory_vs_ode requires the end rule, got " +
                            std::string(rule_name(spec.rule)));
  }
  if (!(spec.noise.delta0 + spec.noise.delta1 > 0.0)) {
    throw DegenerateNoiseError("trajectory_vs_ode");
  }
  if (checkpoints.empty()) {
    checkpoints.push_back(0);
    for (std::size_t s = 10; s < config.horizon; s *= 10) checkpoints.push_back(s);
    checkpoints.push_back(config.horizon);
  }
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) ||
      checkpoints.back() > config.horizon) {
    throw DomainError("trajectory_vs_ode: checkpoints must be sorted and <= horizon");
  }

  const std::size_t rows = checkpoints.size();
  std::vector<std::vector<double>> freq(rows, std::vector<double>(config.trials));
  for_each_trial(config.trials, config.threads, [&](std::size_t t) {
    RngStream rng(config.master_seed, t);
    SymbolCounts c = symbol_counts(spec.seed);
    std::size_t step = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      for (; step < checkpoints[r]; ++step) {
        const Bit a = rng.below(c.total()) < c.zeros ? Bit::Zero : Bit::One;
        if (duplicate_channel(a, spec.noise, rng) == Bit::Zero) {
          ++c.zeros;
        } else {
          ++c.ones;
        }
      }
      freq[r][t] = static_cast<double>(c.zeros) / static_cast<double>(c.total());
    }
  });

  const double t0t1 = static_cast<double>(spec.seed.size());
  std::vector<OdeRow> out;
  out.reserve(rows);
  double clock = 0.0;
  std::size_t clock_step = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (; clock_step < checkpoints[r]; ++clock_step) {
      clock += 1.0 / (static_cast<double>(clock_step + 1) + t0t1);
    }
    out.push_back({checkpoints[r], clock, summarize(freq[r]),
                   ode_solution_end(clock, spec.noise, spec.seed)});
  }
  return out;
}

namespace {

double block_entropy(std::span<const std::size_t> counts, double total) {
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

// H(block k+1) - H(block k) from counts of (k+1)-blocks, where the k-block is
// the prefix (high bits) of the (k+1)-block.
double conditional_from_counts(std::span<const std::size_t> counts, double total) {
  std::vector<std::size_t> prefix(counts.size() / 2);
  for (std::size_t i = 0; i < counts.size(); ++i) prefix[i >> 1] += counts[i];
  return block_entropy(counts, total) - block_entropy(prefix, total);
}

}  // namespace

SignatureEstimate estimate_signature_conditional(std::size_t k, const SimConfig& config) {
  if (k == 0) throw DomainError("estimate_signature_conditional: k must be >= 1");
  if (k > 20) throw BudgetExceededError("estimate_signature_conditional: k must be <= 20");
  const std::size_t cells = std::size_t{1} << (k + 1);
  std::vector<std::uint32_t> block(config.trials);
  for_each_trial(config.trials, config.threads, [&](std::size_t t) {
    RngStream rng(config.master_seed, t);
    double prev = rng.uniform01();
    std::uint32_t code = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      const double x = rng.uniform01();
      code = (code << 1) | (prev < x ? 1U : 0U);
      prev = x;
    }
    block[t] = code;
  });

  std::vector<std::size_t> counts(cells);
  for (std::uint32_t b : block) ++counts[b];
  SignatureEstimate est;
  const double total = static_cast<double>(config.trials);
  est.block_probs.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    est.block_probs[i] = static_cast<double>(counts[i]) / total;
  }

  constexpr std::size_t kBatches = 20;
  std::vector<double> batch_values;
  if (config.trials >= kBatches) {
    for (std::size_t b = 0; b < kBatches; ++b) {
      const std::size_t lo = config.trials * b / kBatches;
      const std::size_t hi = config.trials * (b + 1) / kBatches;
      std::vector<std::size_t> c(cells);
      for (std::size_t t = lo; t < hi; ++t) ++c[block[t]];
      batch_values.push_back(conditional_from_counts(c, static_cast<double>(hi - lo)));
    }
  }
  const EstimateResult batches = summarize(batch_values);
  est.conditional_entropy.mean = conditional_from_counts(counts, total);
  est.conditional_entropy.standard_error = batches.standard_error;
  est.conditional_entropy.trials = config.trials;
  return est;
}

}  // namespace polya
