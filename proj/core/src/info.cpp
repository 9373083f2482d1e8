#include "polya/info.hpp"

#include <cmath>
#include <string>

#include "polya/error.hpp"

namespace polya {

SymbolCounts symbol_counts(const Word& w) noexcept {
  const std::size_t ones = w.count(Bit::One);
  return {w.size() - ones, ones};
}

std::size_t count_symbol(const Word& w, Bit a) noexcept { return w.count(a); }

double freq_symbol(const Word& w, Bit a) {
  if (w.empty()) throw EmptyWordError("freq_symbol");
  return static_cast<double>(w.count(a)) / static_cast<double>(w.size());
}

std::size_t count_substring(const Word& w, const Word& u, SubstringMode mode) {
  if (u.empty()) throw LengthError("count_substring: empty pattern");
  if (u.size() > w.size()) {
    throw LengthError("count_substring: pattern of length " + std::to_string(u.size()) +
                      " exceeds word of length " + std::to_string(w.size()));
  }
  const std::size_t n = w.size();
  const std::size_t starts = mode == SubstringMode::Cyclic ? n : n - u.size() + 1;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < starts; ++i) {
    bool match = true;
    for (std::size_t j = 0; j < u.size() && match; ++j) {
      match = w[(i + j) % n] == u[j];
    }
    hits += match ? 1 : 0;
  }
  return hits;
}

std::size_t run_count(const Word& w) {
  if (w.empty()) throw EmptyWordError("run_count");
  std::size_t runs = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] != w[i - 1]) ++runs;
  }
  return runs;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double harmonic(unsigned m) noexcept {
  // Summed from the small terms up to limit rounding growth.
  double sum = 0.0;
  for (unsigned i = m; i >= 1; --i) sum += 1.0 / static_cast<double>(i);
  return sum;
}

double beta_pdf(double p, unsigned t0, unsigned t1) {
  if (t0 < 1 || t1 < 1) throw DomainError("beta_pdf: shape parameters must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("beta_pdf: p outside [0, 1]");
  // (t0+t1-1)! / ((t0-1)! (t1-1)!) = (t0+t1-1) * C(t0+t1-2, t0-1)
  double coeff = static_cast<double>(t0 + t1 - 1);
  for (unsigned i = 1; i < t0; ++i) {
    coeff *= static_cast<double>(t1 - 1 + i) / static_cast<double>(i);
  }
  return coeff * std::pow(p, t0 - 1) * std::pow(1.0 - p, t1 - 1);
}

namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, const Panel& p, double tol,
                int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
         adaptive(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  constexpr int kMaxDepth = 60;
  // Start from a fixed composite of panels so that narrow features are not
  // missed by a single coarse Simpson estimate.
  constexpr int kInitialPanels = 16;
  const double h = (b - a) / kInitialPanels;
  double total = 0.0;
  for (int k = 0; k < kInitialPanels; ++k) {
    const double lo = a + k * h;
    const double hi = k + 1 == kInitialPanels ? b : a + (k + 1) * h;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo);
    const double fmid = f(mid);
    const double fhi = f(hi);
    total += adaptive(f, {lo, mid, hi, flo, fmid, fhi, simpson(lo, hi, flo, fmid, fhi)},
                      abs_tol / kInitialPanels, kMaxDepth);
  }
  return total;
}

double integrate_beta_entropy(unsigned t0, unsigned t1) {
  if (t0 < 1 || t1 < 1) throw DomainError("integrate_beta_entropy: t0, t1 must be >= 1");
  return integrate([t0, t1](double p) { return beta_pdf(p, t0, t1) * binary_entropy(p); },
                   0.0, 1.0, 1e-10);
}

}  // namespace polya
