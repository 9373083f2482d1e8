#pragma once

// Monte Carlo estimators over independent trajectories. Each trial draws from
// its own counter-based stream keyed by (master_seed, trial index) and results
// are reduced in trial order, so estimates do not depend on the thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "polya/models.hpp"
#include "polya/oracle.hpp"
#include "polya/word.hpp"

namespace polya {

enum class RecordMode {
  FinalWord,      // simulate the full word, keep only the final state
  RunningCounts,  // symbol and cyclic-pair counters only
  FullHistory,    // log every step record
};

struct SimConfig {
  std::size_t trials = 1;
  std::size_t horizon = 1;
  std::uint64_t master_seed = 0;
  RecordMode record_mode = RecordMode::RunningCounts;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws DomainError when trials or horizon is zero.
  static SimConfig make(std::size_t trials, std::size_t horizon, std::uint64_t master_seed,
                        RecordMode mode = RecordMode::RunningCounts, unsigned threads = 0);
};

struct EstimateResult {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

/// Mean and standard error of the mean, summed in index order.
EstimateResult summarize(std::span<const double> samples);

/// Runs body(trial) for every trial on `threads` workers; out[i] = body(i).
void for_each_trial(std::size_t trials, unsigned threads,
                    const std::function<void(std::size_t)>& body);

/// fr_0(S(n)) per trajectory, in trial order.
std::vector<double> sample_symbol_freq(const ModelSpec& spec, const SimConfig& config);

EstimateResult estimate_symbol_freq(const ModelSpec& spec, const SimConfig& config);

/// Cyclic pair frequencies (00, 01, 10, 11) at the horizon. Throws
/// RuleMismatchError unless the rule is Tandem and DegenerateNoiseError when
/// delta0 + delta1 = 0.
std::array<EstimateResult, 4> estimate_pair_freqs(const ModelSpec& spec,
                                                  const SimConfig& config);

struct PluginEntropy {
  EstimateResult estimate;         // bits; stderr by the delta method
  std::size_t distinct_words = 0;
  bool underestimates = true;      // plug-in entropy is biased low
};

constexpr std::size_t kPluginMaxHorizon = 16;

/// Plug-in entropy of the empirical law of S(n) over config.trials samples.
/// Throws SupportTooLargeError when n > kPluginMaxHorizon unless
/// allow_large_support is set.
PluginEntropy estimate_entropy_plugin(const ModelSpec& spec, const SimConfig& config,
                                      bool allow_large_support = false);

/// Empirical law of S(n) with probabilities as frequencies.
std::map<Word, double> empirical_distribution(const ModelSpec& spec, const SimConfig& config);

/// Total variation distance between an empirical law and an exact one.
double total_variation(const std::map<Word, double>& empirical, const ExactDist& exact);

struct OdeRow {
  std::size_t step = 0;
  double time = 0.0;  // sum_{m <= step} 1 / (m + t0 + t1)
  EstimateResult mean_freq;
  double ode = 0.0;
};

/// Mean fr_0 after each checkpoint step against the ODE solution at the
/// matching clock. Checkpoints must be nondecreasing and at most the horizon;
/// an empty list selects step 0, the horizon and powers of ten in between.
/// Throws RuleMismatchError for rules other than End.
std::vector<OdeRow> trajectory_vs_ode(const ModelSpec& spec, const SimConfig& config,
                                      std::vector<std::size_t> checkpoints = {});

struct SignatureEstimate {
  EstimateResult conditional_entropy;  // H(block k+1) - H(block k), bits
  std::vector<double> block_probs;     // (k+1)-blocks, index = binary value
};

/// Draws config.trials independent runs of k + 2 uniform reals and estimates
/// the order-k conditional entropy of their up-down signature. The standard
/// error comes from 20 contiguous batches. config.horizon is ignored.
SignatureEstimate estimate_signature_conditional(std::size_t k, const SimConfig& config);

}  // namespace polya
