#pragma once

// Symbol statistics on words and the information-theoretic / special-function
// primitives the capacity formulas are built from. All entropies are in bits.

#include <cstddef>
#include <functional>

#include "polya/word.hpp"

namespace polya {

struct SymbolCounts {
  std::size_t zeros = 0;
  std::size_t ones = 0;

  std::size_t total() const noexcept { return zeros + ones; }
  friend bool operator==(const SymbolCounts&, const SymbolCounts&) = default;
};

SymbolCounts symbol_counts(const Word& w) noexcept;

/// |w|_a. Zero for the empty word.
std::size_t count_symbol(const Word& w, Bit a) noexcept;

/// |w|_a / |w|. Throws EmptyWordError for the empty word.
double freq_symbol(const Word& w, Bit a);

enum class SubstringMode { Cyclic, Linear };

/// Occurrences of `u` in `w`. Cyclic mode counts every start position
/// i in [0, |w|) with indices taken modulo |w|; linear mode only counts
/// occurrences that fit without wrapping. Throws LengthError when u is empty
/// or longer than w.
std::size_t count_substring(const Word& w, const Word& u,
                            SubstringMode mode = SubstringMode::Cyclic);

/// Number of maximal constant blocks. Throws EmptyWordError on the empty word.
std::size_t run_count(const Word& w);

/// H2(x) in bits with 0 log 0 = 0. Throws DomainError outside [0, 1].
double binary_entropy(double x);

/// H_m = 1 + 1/2 + ... + 1/m; harmonic(0) = 0.
double harmonic(unsigned m) noexcept;

/// Beta(t0, t1) density at p. Throws DomainError for p outside [0, 1] or
/// t0, t1 < 1.
double beta_pdf(double p, unsigned t0, unsigned t1);

/// Adaptive Simpson quadrature with interval bisection until the Richardson
/// error estimate of every accepted panel is below its share of `abs_tol`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10);

/// Integral over [0, 1] of beta_pdf(p; t0, t1) * H2(p), absolute error <= 1e-10.
double integrate_beta_entropy(unsigned t0, unsigned t1);

}  // namespace polya
