#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dbw {

// Fixed-size dynamic bitset used for ground-set sides and vertex sets.
// Comparison is lexicographic by element list: the set containing the
// smallest differing element is the smaller one.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : size_(n), words_((n + 63) / 64, 0) {}

  static Bitset of(int n, std::initializer_list<int> idx) {
    Bitset b(n);
    for (int i : idx) b.set(i);
    return b;
  }

  static Bitset from_mask(int n, std::uint64_t mask) {
    Bitset b(n);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

  static Bitset full(int n) {
    Bitset b(n);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(int i, bool v) { v ? set(i) : reset(i); }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const {
    return size_ == o.size_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // true iff *this is lexicographically smaller as a sorted element list
  bool lex_less(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t d = words_[k] ^ o.words_[k];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return words_[k] & low;  // owning the smallest differing element wins
      }
    }
    return false;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  // low 64 bits; only meaningful when size() <= 64
  std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(size_) * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  void trim() {
    int rem = size_ & 63;
    if (rem && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace dbw
