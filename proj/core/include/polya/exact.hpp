#pragma once

// Closed-form capacities, capacity bounds and almost-sure limits of the
// duplication models. Every capacity is returned as a CapacityValue that
// carries whether it is an exact value or a bound, so callers cannot present
// a bound as a capacity by accident.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polya/models.hpp"
#include "polya/word.hpp"

namespace polya {

enum class CapacityKind { Exact, UpperBound, LowerBound, Estimate };

std::string_view kind_name(CapacityKind kind) noexcept;

struct CapacityValue {
  double value = 0.0;
  CapacityKind kind = CapacityKind::Exact;
  std::string source;
  /// Set when a formula's nondegenerate preconditions fail and the value is
  /// the trivial one (e.g. a seed made of a single repeated symbol).
  bool degenerate = false;
};

/// Pair frequencies in the fixed order (00, 01, 10, 11).
struct PairFreqVector {
  std::array<double, 4> z{};

  double operator[](std::size_t i) const noexcept { return z[i]; }
  double sum() const noexcept { return z[0] + z[1] + z[2] + z[3]; }
};

using PairMatrix = std::array<std::array<double, 4>, 4>;

PairFreqVector apply(const PairMatrix& a, const PairFreqVector& z) noexcept;

// End duplication.

/// Noiseless capacity from a seed with t0 zeros and t1 ones, via harmonic
/// numbers: log2(e)/(t0+t1) * ((t0+t1) H_{t0+t1} - t0 H_{t0} - t1 H_{t1}).
/// t0 = 0 or t1 = 0 gives Exact 0 with `degenerate` set.
CapacityValue cap_end_noiseless(unsigned t0, unsigned t1);

/// H2(delta1 / (delta0 + delta1)). Throws DegenerateNoiseError at (0, 0).
CapacityValue cap_end_noisy(const NoiseParams& noise);

/// H2(g(alpha)) with g(x) = x (1 - delta0) + (1 - x) delta1: the capacity
/// implied by an almost-sure limiting zero frequency alpha.
double end_capacity_from_frequency(double alpha, const NoiseParams& noise);

/// delta1 / (delta0 + delta1). Throws DegenerateNoiseError at (0, 0).
double limiting_freq_end(const NoiseParams& noise);

/// Solution of dz/dt = g(z) - z started at fr_0(seed).
double ode_solution_end(double t, const NoiseParams& noise, const Word& seed);

// Interspersed duplication: same capacity as end duplication.

CapacityValue cap_interspersed(const NoiseParams& noise, const Word& seed);

// Tandem duplication.

/// Exact 0.
CapacityValue cap_tandem_noiseless();

/// Number of distinct words reachable by n noiseless tandem steps from a seed
/// with r runs: C(n + r - 1, r - 1). Throws DomainError on overflow.
std::uint64_t tandem_noiseless_reachable(std::size_t runs, std::size_t n);

struct TandemComplementBounds {
  CapacityValue lower;          // (5 log2 e - 2) / 6
  CapacityValue upper;          // H2(1/3)
  CapacityValue refined_upper;  // (1/3) H2(1/4) + (2/3) H2(3/8)
};

/// Bounds for the complementing channel delta0 = delta1 = 1.
TandemComplementBounds cap_tandem_complement_bounds();

/// Upper bound from the limiting pair frequencies:
/// a H2((1 - d0 + d1)/(1 + d0 + d1)) + (1 - a) H2((1 - d1 + d0)/(1 + d0 + d1)),
/// a = d1 / (d0 + d1). Throws DegenerateNoiseError at (0, 0).
CapacityValue cap_tandem_noisy_upper(const NoiseParams& noise);

/// Same bound evaluated as the conditional pair entropy of a pair-frequency
/// vector: -sum z_ab log2(z_ab / (z_a0 + z_a1)).
double pair_conditional_entropy(const PairFreqVector& z);

/// Upper bound H2(2 delta / (1 + 3 delta)) for the comparison system with
/// independent tandem duplications and substitutions. delta in (0, 1].
CapacityValue cap_tsb_upper(double delta);

/// Drift matrix of the cyclic pair frequencies under noisy tandem
/// duplication, pair order (00, 01, 10, 11).
PairMatrix pair_matrix(const NoiseParams& noise);

/// Expected one-step change of the cyclic pair counts given the current pair
/// frequencies: (pair_matrix + I) z.
PairMatrix pair_increment_matrix(const NoiseParams& noise);

/// Closed-form null vector of pair_matrix normalised to sum 1. Throws
/// DegenerateNoiseError at (0, 0); throws Error if the residual
/// ||A z||_inf exceeds kPairResidualTolerance.
PairFreqVector limiting_pair_freqs_tandem(const NoiseParams& noise);

inline constexpr double kPairResidualTolerance = 1e-12;

// Plot-ready grids.

struct GridPoint {
  double delta0 = 0.0;
  double delta1 = 0.0;
  CapacityValue capacity;
};

/// Evaluates the capacity (end, interspersed) or the upper bound (tandem) on
/// the uniform grid {i / (resolution - 1)}^2, skipping the origin.
/// Throws DomainError for resolution < 2.
std::vector<GridPoint> capacity_grid(Rule rule, std::size_t resolution);

struct TsbComparisonRow {
  double delta = 0.0;
  double tandem_upper = 0.0;  // H2(1 / (1 + 2 delta))
  double tsb_upper = 0.0;     // H2(2 delta / (1 + 3 delta))
};

/// Rows for delta = i / (resolution - 1), i = 1 .. resolution - 1.
std::vector<TsbComparisonRow> compare_tsb(std::size_t resolution);

}  // namespace polya
