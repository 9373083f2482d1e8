#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polya {

enum class Bit : std::uint8_t { Zero = 0, One = 1 };

constexpr Bit complement(Bit b) noexcept {
  return b == Bit::Zero ? Bit::One : Bit::Zero;
}

constexpr unsigned to_int(Bit b) noexcept { return static_cast<unsigned>(b); }

constexpr char to_char(Bit b) noexcept { return b == Bit::Zero ? '0' : '1'; }

constexpr Bit bit_from_int(unsigned v) noexcept {
  return v == 0 ? Bit::Zero : Bit::One;
}

// Finite binary string, packed 64 symbols per machine word.
//
// Indexing is 0-based in this class; the model layer converts to the 1-based
// positions used in step records. Appending is amortised O(1), insertion in
// the middle is O(n / 64).
class Word {
 public:
  Word() = default;

  /// Parses a string of '0'/'1' characters. Throws DomainError on any other
  /// character. The empty string yields the empty word.
  static Word parse(std::string_view text);

  /// Word of `length` copies of `b`.
  static Word repeat(Bit b, std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Bit operator[](std::size_t i) const noexcept {
    return static_cast<Bit>((blocks_[i >> 6] >> (i & 63)) & 1U);
  }

  void set(std::size_t i, Bit b) noexcept;
  void push_back(Bit b);
  /// Inserts `b` so that it becomes the symbol at index `pos` (0 <= pos <= size).
  void insert(std::size_t pos, Bit b);
  void reserve(std::size_t n) { blocks_.reserve((n + 63) / 64); }
  void clear() noexcept {
    blocks_.clear();
    size_ = 0;
  }

  /// Number of positions holding `b`; popcount based.
  std::size_t count(Bit b) const noexcept;

  /// Symbols [first, first + length) as a new word.
  Word substr(std::size_t first, std::size_t length) const;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) noexcept;
  /// Lexicographic order over symbols, a proper prefix ordering first.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

Word operator+(const Word& a, const Word& b);

}  // namespace polya

template <>
struct std::hash<polya::Word> {
  std::size_t operator()(const polya::Word& w) const noexcept { return w.hash(); }
};
