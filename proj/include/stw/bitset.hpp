#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace stw {

// Fixed-capacity dynamic bitset. Capacity is set at construction and all
// binary operations require equal capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) {
    assert(0 <= i && i < nbits_);
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(0 <= i && i < nbits_);
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    assert(0 <= i && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  int and_count(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // True when (*this & mask) == mask, i.e. mask is a subset.
  bool contains_all(const Bitset& mask) const {
    assert(nbits_ == mask.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & mask.words_[i]) != mask.words_[i]) return false;
    return true;
  }

  // True when no bit of mask is set in *this.
  bool disjoint_from(const Bitset& mask) const { return !intersects(mask); }

  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& flip_all() {
    for (auto& w : words_) w = ~w;
    trim();
    return *this;
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  uint64_t masked_hash(const Bitset& mask) const {
    assert(nbits_ == mask.nbits_);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < words_.size(); ++i) {
      h ^= words_[i] & mask.words_[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  bool masked_equal(const Bitset& o, const Bitset& mask) const {
    assert(nbits_ == o.nbits_ && nbits_ == mask.nbits_);
    for (size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] ^ o.words_[i]) & mask.words_[i]) return false;
    return true;
  }

  // First set bit at or after i, or -1.
  int next(int i) const {
    if (i >= nbits_) return -1;
    int wi = i >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return (wi << 6) + __builtin_ctzll(w);
      if (++wi >= static_cast<int>(words_.size())) return -1;
      w = words_[wi];
    }
  }

 private:
  void trim() {
    if (nbits_ & 63) words_.back() &= ~uint64_t{0} >> (64 - (nbits_ & 63));
  }

  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace stw
