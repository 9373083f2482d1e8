#include "polya/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polya/error.hpp"
#include "polya/info.hpp"
#include "uint128.hpp"

namespace polya {

std::string_view kind_name(CapacityKind kind) noexcept {
  switch (kind) {
    case CapacityKind::Exact:
      return "Exact";
    case CapacityKind::UpperBound:
      return "UpperBound";
    case CapacityKind::LowerBound:
      return "LowerBound";
    case CapacityKind::Estimate:
      return "Estimate";
  }
  return "?";
}

PairFreqVector apply(const PairMatrix& a, const PairFreqVector& z) noexcept {
  PairFreqVector out;
  for (std::size_t i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) acc += a[i][j] * z.z[j];
    out.z[i] = acc;
  }
  return out;
}

namespace {

constexpr double kLog2e = std::numbers::log2e;

void require_nondegenerate(const NoiseParams& noise, const char* where) {
  if (!(noise.delta0 + noise.delta1 > 0.0)) throw DegenerateNoiseError(where);
}

}  // namespace

CapacityValue cap_end_noiseless(unsigned t0, unsigned t1) {
  if (t0 == 0 || t1 == 0) {
    return {0.0, CapacityKind::Exact,
            "end duplication, noiseless channel: single-symbol seed only reaches "
            "constant words",
            true};
  }
  const unsigned t = t0 + t1;
  const double value = kLog2e / t *
                       (t * harmonic(t) - t0 * harmonic(t0) - t1 * harmonic(t1));
  return {value, CapacityKind::Exact,
          "end duplication, noiseless channel: Beta(t0,t1)-averaged binary entropy "
          "(harmonic-number closed form)"};
}

double limiting_freq_end(const NoiseParams& noise) {
  require_nondegenerate(noise, "limiting_freq_end");
  return noise.delta1 / (noise.delta0 + noise.delta1);
}

CapacityValue cap_end_noisy(const NoiseParams& noise) {
  require_nondegenerate(noise, "cap_end_noisy");
  return {binary_entropy(limiting_freq_end(noise)), CapacityKind::Exact,
          "end duplication, noisy channel: H2 of the almost-sure limiting zero "
          "frequency delta1/(delta0+delta1)"};
}

double end_capacity_from_frequency(double alpha, const NoiseParams& noise) {
  const double g = alpha * (1.0 - noise.delta0) + (1.0 - alpha) * noise.delta1;
  return binary_entropy(g);
}

double ode_solution_end(double t, const NoiseParams& noise, const Word& seed) {
  require_nondegenerate(noise, "ode_solution_end");
  if (seed.empty()) throw EmptyWordError("ode_solution_end");
  if (!(t >= 0.0)) throw DomainError("ode_solution_end: t must be nonnegative");
  const double alpha = limiting_freq_end(noise);
  const double z0 = freq_symbol(seed, Bit::Zero);
  return alpha + (z0 - alpha) * std::exp(-t * (noise.delta0 + noise.delta1));
}

CapacityValue cap_interspersed(const NoiseParams& noise, const Word& seed) {
  if (seed.empty()) throw EmptyWordError("cap_interspersed");
  CapacityValue end;
  if (noise.degenerate()) {
    const SymbolCounts c = symbol_counts(seed);
    end = cap_end_noiseless(static_cast<unsigned>(c.zeros), static_cast<unsigned>(c.ones));
  } else {
    end = cap_end_noisy(noise);
  }
  end.source = "interspersed duplication equals end duplication; " + end.source;
  return end;
}

CapacityValue cap_tandem_noiseless() {
  return {0.0, CapacityKind::Exact,
          "tandem duplication, noiseless channel: runs never split, polynomially many "
          "reachable words"};
}

std::uint64_t tandem_noiseless_reachable(std::size_t runs, std::size_t n) {
  if (runs == 0) throw DomainError("tandem_noiseless_reachable: runs must be >= 1");
  // C(n + r - 1, r - 1) built incrementally; each partial product is itself a
  // binomial coefficient, so the division is exact.
  detail::u128 acc = 1;
  const std::size_t k = runs - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw DomainError("tandem_noiseless_reachable: result overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

TandemComplementBounds cap_tandem_complement_bounds() {
  TandemComplementBounds b;
  b.lower = {(5.0 * kLog2e - 2.0) / 6.0, CapacityKind::LowerBound,
             "tandem duplication, complementing channel: conditioning on the previous "
             "uniform real and signature symbol"};
  b.upper = {binary_entropy(1.0 / 3.0), CapacityKind::UpperBound,
             "tandem duplication, complementing channel: first-order signature "
             "conditional entropy H2(1/3)"};
  b.refined_upper = {2.0 * (1.0 / 6.0) * binary_entropy(2.0 / 8.0) +
                         2.0 * (1.0 / 3.0) * binary_entropy(3.0 / 8.0),
                     CapacityKind::UpperBound,
                     "tandem duplication, complementing channel: second-order signature "
                     "conditional entropy"};
  return b;
}

CapacityValue cap_tandem_noisy_upper(const NoiseParams& noise) {
  require_nondegenerate(noise, "cap_tandem_noisy_upper");
  const double d0 = noise.delta0;
  const double d1 = noise.delta1;
  const double s = d0 + d1;
  const double value = d1 / s * binary_entropy((1.0 - d0 + d1) / (1.0 + s)) +
                       d0 / s * binary_entropy((1.0 - d1 + d0) / (1.0 + s));
  return {value, CapacityKind::UpperBound,
          "tandem duplication, noisy channel: conditional entropy of the limiting cyclic "
          "pair frequencies"};
}

double pair_conditional_entropy(const PairFreqVector& z) {
  double h = 0.0;
  for (std::size_t first = 0; first < 2; ++first) {
    const double row = z[2 * first] + z[2 * first + 1];
    if (row <= 0.0) continue;
    h += row * binary_entropy(std::clamp(z[2 * first] / row, 0.0, 1.0));
  }
  return h;
}

CapacityValue cap_tsb_upper(double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw DomainError("cap_tsb_upper: delta must lie in (0, 1]");
  }
  return {binary_entropy(2.0 * delta / (1.0 + 3.0 * delta)), CapacityKind::UpperBound,
          "tandem duplication with independent substitutions: substring-frequency "
          "entropy bound"};
}

PairMatrix pair_matrix(const NoiseParams& noise) {
  const double d0 = noise.delta0;
  const double d1 = noise.delta1;
  return {{
      {-2.0 * d0, 1.0 - d0, d1, 0.0},
      {d0, -1.0, 0.0, d1},
      {d0, 0.0, -1.0, d1},
      {0.0, d0, 1.0 - d1, -2.0 * d1},
  }};
}

PairMatrix pair_increment_matrix(const NoiseParams& noise) {
  PairMatrix a = pair_matrix(noise);
  for (std::size_t i = 0; i < 4; ++i) a[i][i] += 1.0;
  return a;
}

PairFreqVector limiting_pair_freqs_tandem(const NoiseParams& noise) {
  require_nondegenerate(noise, "limiting_pair_freqs_tandem");
  const double d0 = noise.delta0;
  const double d1 = noise.delta1;
  const double scale = 1.0 / ((1.0 + d0 + d1) * (d0 + d1));
  const PairFreqVector z{{(1.0 - d0 + d1) * d1 * scale, 2.0 * d0 * d1 * scale,
                          2.0 * d0 * d1 * scale, (1.0 - d1 + d0) * d0 * scale}};
  const PairFreqVector residual = polya::apply(pair_matrix(noise), z);
  for (double r : residual.z) {
    if (std::abs(r) > kPairResidualTolerance) {
      throw Error("limiting_pair_freqs_tandem: closed form is not a null vector (residual " +
                  std::to_string(r) + ")");
    }
  }
  return z;
}

std::vector<GridPoint> capacity_grid(Rule rule, std::size_t resolution) {
  if (resolution < 2) throw DomainError("capacity_grid: resolution must be >= 2");
  std::vector<GridPoint> out;
  out.reserve(resolution * resolution - 1);
  const double denom = static_cast<double>(resolution - 1);
  const Word any_seed = Word::parse("01");  // the noisy capacities do not depend on it
  for (std::size_t i = 0; i < resolution; ++i) {
    for (std::size_t j = 0; j < resolution; ++j) {
      if (i == 0 && j == 0) continue;
      const NoiseParams noise{static_cast<double>(i) / denom, static_cast<double>(j) / denom};
      CapacityValue cap;
      switch (rule) {
        case Rule::End:
          cap = cap_end_noisy(noise);
          break;
        case Rule::Tandem:
          cap = cap_tandem_noisy_upper(noise);
          break;
        case Rule::Interspersed:
          cap = cap_interspersed(noise, any_seed);
          break;
      }
      out.push_back({noise.delta0, noise.delta1, std::move(cap)});
    }
  }
  return out;
}

std::vector<TsbComparisonRow> compare_tsb(std::size_t resolution) {
  if (resolution < 2) throw DomainError("compare_tsb: resolution must be >= 2");
  std::vector<TsbComparisonRow> rows;
  rows.reserve(resolution - 1);
  const double denom = static_cast<double>(resolution - 1);
  for (std::size_t i = 1; i < resolution; ++i) {
    const double delta = static_cast<double>(i) / denom;
    rows.push_back({delta, cap_tandem_noisy_upper({delta, delta}).value,
                    cap_tsb_upper(delta).value});
  }
  return rows;
}

}  // namespace polya
