#include <cmath>
#include <functional>
#include <string>

#include "polya/error.hpp"
#include "polya/info.hpp"
#include "polya/permutations.hpp"
#include "uint128.hpp"

namespace polya {

namespace {

constexpr std::size_t kMaxSignatureCountsM = 20;

// One step of the prefix-rank recurrence: c holds, for a permutation prefix of
// length i, the number of prefixes whose last element has rank j (0-based).
template <typename T>
void extend_ranks(const std::vector<T>& c, Bit s, std::vector<T>& next) {
  const std::size_t i = c.size();
  next.assign(i + 1, T{0});
  if (s == Bit::One) {
    T acc{0};
    for (std::size_t j = 0; j <= i; ++j) {
      next[j] = acc;
      if (j < i) acc += c[j];
    }
  } else {
    T acc{0};
    for (std::size_t j = i + 1; j-- > 0;) {
      if (j < i) acc += c[j];
      next[j] = acc;
    }
  }
}

}  // namespace

BigInt count_signature_dp(const Word& u) {
  std::vector<BigInt> c{BigInt(1)};
  std::vector<BigInt> next;
  for (std::size_t i = 0; i < u.size(); ++i) {
    extend_ranks(c, u[i], next);
    c.swap(next);
  }
  BigInt total = 0;
  for (const BigInt& x : c) total += x;
  return total;
}

BigInt count_signature_recursion(const Word& u, Placement placement) {
  std::map<Word, BigInt> memo;
  std::function<BigInt(const Word&)> count = [&](const Word& v) -> BigInt {
    if (v.empty()) return BigInt(1);
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    const std::size_t n = v.size();
    const TransitionSets sets = transition_sets(v);
    const auto& positions = placement == Placement::Maximum ? sets.t : sets.u;
    BigInt total = 0;
    for (std::size_t i : positions) {
      // Left block holds i - 1 elements with signature v_1..v_{i-2}; right block
      // holds n + 1 - i elements with signature v_{i+1}..v_n.
      const Word left = i >= 2 ? v.substr(0, i - 2) : Word{};
      const Word right = i < n ? v.substr(i, n - i) : Word{};
      total += binomial(n, i - 1) * count(left) * count(right);
    }
    memo.emplace(v, total);
    return total;
  };
  return count(u);
}

std::map<Word, BigInt> signature_counts(std::size_t m) {
  if (m > kMaxSignatureCountsM) {
    throw BudgetExceededError("signature_counts: m = " + std::to_string(m) + " exceeds " +
                              std::to_string(kMaxSignatureCountsM));
  }
  std::map<Word, BigInt> out;
  if (m == 0) return out;
  const std::size_t len = m - 1;
  std::vector<std::vector<std::uint64_t>> levels(len + 1);
  levels[0] = {1};
  Word prefix;
  std::function<void(std::size_t)> dfs = [&](std::size_t d) {
    if (d == len) {
      std::uint64_t total = 0;
      for (std::uint64_t x : levels[d]) total += x;
      out.emplace(prefix, BigInt(static_cast<unsigned long>(total)));
      return;
    }
    for (Bit s : {Bit::Zero, Bit::One}) {
      extend_ranks(levels[d], s, levels[d + 1]);
      prefix.push_back(s);
      dfs(d + 1);
      prefix = prefix.substr(0, d);
    }
  };
  dfs(0);
  return out;
}

Rational prob_tandem_complement(const Word& u) {
  return ratio(count_signature_dp(u), factorial(u.size() + 1));
}

std::vector<BlockEntropyRow> signature_block_entropies(std::size_t m_max,
                                                       const SignatureLimits& limits) {
  if (m_max > limits.max_block) {
    throw BudgetExceededError("signature_block_entropies: m = " + std::to_string(m_max) +
                              " exceeds limit " + std::to_string(limits.max_block));
  }
  if (m_max + 1 > 33) {
    throw BudgetExceededError("signature_block_entropies: counts overflow 128 bits");
  }
  using Count = detail::u128;
  std::vector<long double> entropy(m_max + 1, 0.0L);
  std::vector<long double> fact(m_max + 2, 1.0L);
  for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<long double>(k);

  std::vector<std::vector<Count>> levels(m_max + 1);
  levels[0] = {1};
  std::function<void(std::size_t)> dfs = [&](std::size_t d) {
    for (Bit s : {Bit::Zero, Bit::One}) {
      extend_ranks(levels[d], s, levels[d + 1]);
      Count total = 0;
      for (Count x : levels[d + 1]) total += x;
      const long double p = static_cast<long double>(total) / fact[d + 2];
      if (p > 0.0L) entropy[d + 1] -= p * std::log2(p);
      if (d + 1 < m_max) dfs(d + 1);
    }
  };
  if (m_max > 0) dfs(0);

  std::vector<BlockEntropyRow> rows;
  rows.reserve(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) {
    rows.push_back({m, static_cast<double>(entropy[m]),
                    static_cast<double>(entropy[m] - entropy[m - 1])});
  }
  return rows;
}

CapacityValue markov_upper_bound(std::size_t k, const SignatureLimits& limits) {
  if (k == 0) throw DomainError("markov_upper_bound: k must be >= 1");
  const auto rows = signature_block_entropies(k + 1, limits);
  return {rows[k].increment, CapacityKind::UpperBound,
          "tandem duplication, complementing channel: order-" + std::to_string(k) +
              " conditional entropy of the signature process"};
}

}  // namespace polya
