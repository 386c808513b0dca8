#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace graphsearch {

// Fixed-universe bitset over vertex ids with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe)
      : universe_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static VertexSet all(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~0ULL;
    if (universe % 64 != 0 && !s.words_.empty())
      s.words_.back() &= (1ULL << (universe % 64)) - 1;
    s.count_ = universe;
    return s;
  }

  static VertexSet none(int universe) { return VertexSet(universe); }

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ULL;
  }

  void insert(int v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = 1ULL << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }

  void erase(int v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    const std::uint64_t bit = 1ULL << (v & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  void intersect_with(const VertexSet& other) {
    assert(universe_ == other.universe_);
    int cnt = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= other.words_[i];
      cnt += std::popcount(words_[i]);
    }
    count_ = cnt;
  }

  void unite_with(const VertexSet& other) {
    assert(universe_ == other.universe_);
    int cnt = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= other.words_[i];
      cnt += std::popcount(words_[i]);
    }
    count_ = cnt;
  }

  int intersection_size(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    int cnt = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      cnt += std::popcount(words_[i] & other.words_[i]);
    return cnt;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int v = static_cast<int>(i * 64) + std::countr_zero(w);
        f(v);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count_));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
  int count_ = 0;
};

}  // namespace graphsearch
