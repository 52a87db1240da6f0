#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace heredenum {

using Vertex = std::uint32_t;

// Subset of 0..universe-1 stored as a bitset. Iteration is ascending.
class VertexSet {
  using Word = std::uint64_t;
  using Storage = boost::container::small_vector<Word, 2>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t word, Word bits)
        : set_(set), word_(word), bits_(bits) {
      settle();
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(bits_));
    }
    const_iterator& operator++() {
      bits_ &= bits_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const {
      return word_ == o.word_ && bits_ == o.bits_;
    }

   private:
    void settle() {
      while (bits_ == 0 && set_ && word_ + 1 < set_->words_.size()) {
        ++word_;
        bits_ = set_->words_[word_];
      }
      if (bits_ == 0 && set_) word_ = set_->words_.size();
    }

    const VertexSet* set_ = nullptr;
    std::size_t word_ = 0;
    Word bits_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, const std::vector<Vertex>& members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  void clear();

  std::size_t size() const;
  bool empty() const;
  // Smallest member; universe() when empty.
  Vertex front() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet with(Vertex v) const {
    VertexSet r = *this;
    r.insert(v);
    return r;
  }
  VertexSet without(Vertex v) const {
    VertexSet r = *this;
    r.erase(v);
    return r;
  }

  // Same members, different universe size. Members must fit.
  VertexSet resized(std::size_t universe) const;

  const_iterator begin() const {
    return words_.empty() ? end() : const_iterator(this, 0, words_[0]);
  }
  const_iterator end() const { return const_iterator(this, words_.size(), 0); }

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  std::size_t hash() const;

  // Lexicographic order on the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  Storage words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

struct LexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    return lex_less(a, b);
  }
};

void sort_canonical(std::vector<VertexSet>& sets);

}  // namespace heredenum

template <>
struct std::hash<heredenum::VertexSet> {
  std::size_t operator()(const heredenum::VertexSet& s) const { return s.hash(); }
};
