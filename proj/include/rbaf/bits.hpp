//
// Copyright (c) 2026 rbaf contributors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
// DEALINGS IN THE SOFTWARE.
//
#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace rbaf {

/// Fixed-universe dynamic bitset. All set operations require equal sizes.
class Bits {
public:
  Bits() = default;
  explicit Bits(int size) : words_((size + 63) / 64), size_(size) {}

  int size() const { return size_; }

  bool test(int i) const {
    assert(i >= 0 && i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool intersects(const Bits& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool subsetOf(const Bits& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bits& operator|=(const Bits& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  /// Complement within the universe.
  Bits complement() const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bits& o) const = default;

  /// Arbitrary-but-total order; used only for canonical sorting.
  std::strong_ordering operator<=>(const Bits& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  template <typename F>
  void forEach(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

private:
  void trim() {
    if (int rem = size_ & 63; rem != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::vector<std::uint64_t> words_;
  int size_ = 0;
};

} // namespace rbaf
