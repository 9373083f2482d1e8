#include "polya/word.hpp"

#include <bit>

#include "polya/error.hpp"

namespace polya {

namespace {

constexpr std::uint64_t kOne = 1;

}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c == '0') {
      w.push_back(Bit::Zero);
    } else if (c == '1') {
      w.push_back(Bit::One);
    } else {
      throw DomainError("word: invalid symbol '" + std::string(1, c) +
                        "' (expected 0 or 1)");
    }
  }
  return w;
}

Word Word::repeat(Bit b, std::size_t length) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.push_back(b);
  return w;
}

void Word::set(std::size_t i, Bit b) noexcept {
  const std::uint64_t mask = kOne << (i & 63);
  if (b == Bit::One) {
    blocks_[i >> 6] |= mask;
  } else {
    blocks_[i >> 6] &= ~mask;
  }
}

void Word::push_back(Bit b) {
  if ((size_ & 63) == 0) blocks_.push_back(0);
  ++size_;
  set(size_ - 1, b);
}

void Word::insert(std::size_t pos, Bit b) {
  if (pos == size_) {
    push_back(b);
    return;
  }
  if ((size_ & 63) == 0) blocks_.push_back(0);
  const std::size_t first = pos >> 6;
  // Shift every block above the insertion block up by one bit, carrying the
  // top bit of the block below.
  for (std::size_t k = blocks_.size() - 1; k > first; --k) {
    blocks_[k] = (blocks_[k] << 1) | (blocks_[k - 1] >> 63);
  }
  const unsigned offset = pos & 63;
  const std::uint64_t low_mask = offset == 0 ? 0 : (~std::uint64_t{0} >> (64 - offset));
  const std::uint64_t block = blocks_[first];
  blocks_[first] = (block & low_mask) | ((block & ~low_mask) << 1);
  ++size_;
  set(pos, b);
}

std::size_t Word::count(Bit b) const noexcept {
  std::size_t ones = 0;
  for (std::uint64_t block : blocks_) ones += std::popcount(block);
  // Bits past size_ are always zero: push_back/insert only ever set bits
  // inside the logical range and new blocks start cleared.
  return b == Bit::One ? ones : size_ - ones;
}

Word Word::substr(std::size_t first, std::size_t length) const {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) out.push_back((*this)[first + i]);
  return out;
}

std::string Word::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) s[i] = to_char((*this)[i]);
  return s;
}

bool operator==(const Word& a, const Word& b) noexcept {
  return a.size_ == b.size_ && a.blocks_ == b.blocks_;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  const std::size_t common = a.size_ < b.size_ ? a.size_ : b.size_;
  for (std::size_t i = 0; i < common; ++i) {
    const unsigned x = to_int(a[i]);
    const unsigned y = to_int(b[i]);
    if (x != y) return x <=> y;
  }
  return a.size_ <=> b.size_;
}

std::size_t Word::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (std::uint64_t block : blocks_) {
    h ^= block + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(b[i]);
  return out;
}

}  // namespace polya
