#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kspp {

// Dynamic bitset over 64-bit words. Vertex subsets and adjacency rows use
// this type; bit i corresponds to vertex i.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static DynBitset from_mask(std::uint64_t mask, int nbits) {
    DynBitset b(nbits);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

  int size_bits() const { return nbits_; }
  int word_count() const { return static_cast<int>(words_.size()); }
  std::uint64_t word(int w) const { return words_[w]; }

  // First word; the whole set when nbits <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int find_first() const {
    for (int w = 0; w < word_count(); ++w)
      if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  DynBitset& and_not(const DynBitset& o) {
    for (int w = 0; w < word_count(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  DynBitset& complement() {
    for (int w = 0; w < word_count(); ++w) words_[w] = ~words_[w];
    trim();
    return *this;
  }

  bool intersects(const DynBitset& o) const {
    for (int w = 0; w < word_count(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  int count_and(const DynBitset& o) const {
    int c = 0;
    for (int w = 0; w < word_count(); ++w)
      c += std::popcount(words_[w] & o.words_[w]);
    return c;
  }

  bool operator==(const DynBitset& o) const = default;

  std::vector<int> bits() const {
    std::vector<int> out;
    for (int w = 0; w < word_count(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        out.push_back(w * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }

 private:
  void trim() {
    int r = nbits_ & 63;
    if (r && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kspp
