#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace scottq {

// Subset of a fixed finite universe {0, ..., n-1}. The universe size is set
// at construction; binary operations require both operands to agree on it.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int universe)
      : size_(universe), words_(word_count(universe), 0) {}

  static Bits full(int universe) {
    Bits b(universe);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  static Bits singleton(int universe, int i) {
    Bits b(universe);
    b.set(i);
    return b;
  }

  int universe() const { return size_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or -1 when empty.
  int first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  Bits complement() const {
    Bits r(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }

  bool is_subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  bool operator==(const Bits&) const = default;
  auto operator<=>(const Bits&) const = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(size_) * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
    return h;
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + 63) / 64);
  }
  // Clear bits above the universe so equality and complement stay canonical.
  void trim() {
    int tail = size_ & 63;
    if (tail != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace scottq
