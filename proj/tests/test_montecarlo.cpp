#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "polya/error.hpp"
#include "polya/exact.hpp"
#include "polya/info.hpp"
#include "polya/montecarlo.hpp"
#include "polya/oracle.hpp"

using namespace polya;

// Tolerances are empirical (pilot runs at the pinned seeds), not derived from
// a convergence rate.

namespace {

ModelSpec spec(Rule r, double d0, double d1, const char* seed) {
  return ModelSpec::make(r, NoiseParams::make(d0, d1), Word::parse(seed));
}

double ks_uniform(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - xs[i],
                             xs[i] - static_cast<double>(i) / n));
  }
  return d;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(SimConfig::make(0, 10, 1), DomainError);
  CHECK_THROWS_AS(SimConfig::make(10, 0, 1), DomainError);
}

TEST_CASE("summary statistics") {
  const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
  const EstimateResult r = summarize(xs);
  CHECK(r.mean == doctest::Approx(2.5));
  CHECK(r.standard_error == doctest::Approx(std::sqrt((5.0 / 3.0) / 4.0)));
  CHECK(r.trials == 4);
}

TEST_CASE("one complementing step from 0 gives frequency 1/2") {
  const EstimateResult r =
      estimate_symbol_freq(spec(Rule::End, 1, 0, "0"), SimConfig::make(50, 1, 3));
  CHECK(r.mean == 0.5);
  CHECK(r.standard_error == 0.0);
}

TEST_CASE("symbol frequency approaches delta1 / (delta0 + delta1)") {
  for (Rule r : {Rule::End, Rule::Tandem, Rule::Interspersed}) {
    const EstimateResult e =
        estimate_symbol_freq(spec(r, 0.3, 0.1, "01"), SimConfig::make(100, 20000, 17));
    CHECK(std::abs(e.mean - 0.25) < 0.02);
    CHECK(e.standard_error >= 0.0);
  }
}

TEST_CASE("record modes agree in law") {
  const ModelSpec s = spec(Rule::Tandem, 0.3, 0.1, "01");
  const auto counts = estimate_symbol_freq(s, SimConfig::make(200, 2000, 5));
  const auto words =
      estimate_symbol_freq(s, SimConfig::make(200, 2000, 5, RecordMode::FinalWord));
  const auto full =
      estimate_symbol_freq(s, SimConfig::make(200, 2000, 5, RecordMode::FullHistory));
  CHECK(words.mean == full.mean);
  CHECK(std::abs(counts.mean - words.mean) < 0.03);
}

TEST_CASE("convergence improves with the horizon") {
  const ModelSpec s = spec(Rule::End, 0.3, 0.1, "01");
  const double short_err =
      std::abs(estimate_symbol_freq(s, SimConfig::make(200, 1000, 23)).mean - 0.25);
  const double long_err =
      std::abs(estimate_symbol_freq(s, SimConfig::make(200, 100000, 23)).mean - 0.25);
  CHECK(long_err < short_err);
}

TEST_CASE("noiseless end frequencies spread uniformly from seed 01") {
  const auto xs = sample_symbol_freq(spec(Rule::End, 0, 0, "01"), SimConfig::make(500, 10000, 29));
  for (double x : xs) {
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }
  CHECK(ks_uniform(xs) <= 0.05);
}

TEST_CASE("estimates do not depend on the thread count") {
  const ModelSpec s = spec(Rule::Tandem, 0.5, 0.25, "011");
  SimConfig one = SimConfig::make(40, 3000, 99, RecordMode::RunningCounts, 1);
  SimConfig many = one;
  many.threads = 4;
  const auto a = estimate_pair_freqs(s, one);
  const auto b = estimate_pair_freqs(s, many);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a[i].mean == b[i].mean);
    CHECK(a[i].standard_error == b[i].standard_error);
  }
}

TEST_CASE("pair frequencies") {
  const auto half = estimate_pair_freqs(spec(Rule::Tandem, 0.5, 0.5, "0"),
                                        SimConfig::make(30, 100000, 41));
  double sum = 0.0;
  for (const EstimateResult& e : half) {
    CHECK(std::abs(e.mean - 0.25) < 0.01);
    sum += e.mean;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  // The linked-list fast path and a direct count on the final word agree in law.
  const ModelSpec s = spec(Rule::Tandem, 0.2, 0.6, "0110");
  const auto fast = estimate_pair_freqs(s, SimConfig::make(300, 1000, 8));
  const auto slow = estimate_pair_freqs(s, SimConfig::make(300, 1000, 8, RecordMode::FinalWord));
  const PairFreqVector z = limiting_pair_freqs_tandem(s.noise);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(fast[i].mean - slow[i].mean) < 0.02);
    CHECK(std::abs(fast[i].mean - z[i]) < 0.02);
  }
  CHECK_THROWS_AS(estimate_pair_freqs(spec(Rule::End, 1, 1, "0"), SimConfig::make(1, 1, 0)),
                  RuleMismatchError);
  CHECK_THROWS_AS(estimate_pair_freqs(spec(Rule::Tandem, 0, 0, "0"), SimConfig::make(1, 1, 0)),
                  DegenerateNoiseError);
}

TEST_CASE("plug-in entropy") {
  const ModelSpec s = spec(Rule::Tandem, 1, 1, "0");
  const PluginEntropy p = estimate_entropy_plugin(s, SimConfig::make(1000000, 8, 13));
  const double exact = exact_entropy(enumerate_distribution(
      ExactModelSpec::make(Rule::Tandem, ExactNoise::parse("1", "1"), Word::parse("0")), 8));
  CHECK(std::abs(p.estimate.mean - exact) < 0.02);
  CHECK(p.underestimates);
  CHECK(p.distinct_words <= 128);

  const PluginEntropy det =
      estimate_entropy_plugin(spec(Rule::Tandem, 0, 0, "00"), SimConfig::make(1000, 12, 1));
  CHECK(det.estimate.mean == 0.0);
  CHECK(det.distinct_words == 1);

  const PluginEntropy e =
      estimate_entropy_plugin(spec(Rule::End, 1, 1, "01"), SimConfig::make(5000, 10, 2));
  CHECK(e.estimate.mean >= 0.0);
  CHECK(e.estimate.mean <= 10.0);

  CHECK_THROWS_AS(estimate_entropy_plugin(s, SimConfig::make(10, 17, 0)), SupportTooLargeError);
  CHECK_NOTHROW(estimate_entropy_plugin(s, SimConfig::make(10, 17, 0), true));
}

TEST_CASE("empirical law converges to the exact law") {
  const ExactDist exact = enumerate_distribution(
      ExactModelSpec::make(Rule::End, ExactNoise::parse("1/3", "1/4"), Word::parse("01")), 6);
  const auto emp = empirical_distribution(spec(Rule::End, 1.0 / 3.0, 0.25, "01"),
                                          SimConfig::make(1000000, 6, 31));
  CHECK(total_variation(emp, exact) <= 0.02);
}

TEST_CASE("trajectory against the ODE") {
  const ModelSpec s = spec(Rule::End, 1, 1, "0");
  const auto rows = trajectory_vs_ode(s, SimConfig::make(500, 10000, 37));
  REQUIRE(!rows.empty());
  CHECK(rows.front().step == 0);
  CHECK(rows.front().mean_freq.mean == 1.0);
  CHECK(rows.front().ode == 1.0);
  CHECK(rows.back().step == 10000);
  double worst = 0.0;
  for (const OdeRow& r : rows) {
    if (r.step >= 100) worst = std::max(worst, std::abs(r.mean_freq.mean - r.ode));
  }
  CHECK(worst <= 0.02);
  CHECK(std::abs(rows.back().mean_freq.mean - 0.5) < 0.02);

  // Seed frequency above equilibrium: the mean decreases.
  const auto down = trajectory_vs_ode(spec(Rule::End, 0.3, 0.3, "0001"),
                                      SimConfig::make(400, 5000, 43), {0, 10, 100, 1000, 5000});
  for (std::size_t i = 1; i < down.size(); ++i) {
    CHECK(down[i].mean_freq.mean <=
          down[i - 1].mean_freq.mean + 2 * down[i].mean_freq.standard_error);
  }
  CHECK_THROWS_AS(trajectory_vs_ode(spec(Rule::Tandem, 1, 1, "0"), SimConfig::make(1, 1, 0)),
                  RuleMismatchError);
}

TEST_CASE("signature process by uniform reals") {
  const SimConfig c = SimConfig::make(1000000, 1, 47);
  const SignatureEstimate k1 = estimate_signature_conditional(1, c);
  CHECK(std::abs(k1.conditional_entropy.mean - binary_entropy(1.0 / 3.0)) < 0.01);
  const SignatureEstimate k2 = estimate_signature_conditional(2, c);
  CHECK(std::abs(k2.conditional_entropy.mean - 0.9067) < 0.01);
  const double expected[8] = {1, 3, 5, 3, 3, 5, 3, 1};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(std::abs(k2.block_probs[i] - expected[i] / 24.0) < 0.005);
  }
  CHECK(k2.conditional_entropy.standard_error > 0.0);
  CHECK_THROWS_AS(estimate_signature_conditional(0, c), DomainError);
}
