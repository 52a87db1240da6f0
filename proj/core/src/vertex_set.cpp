#include "heredenum/vertex_set.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heredenum {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw std::domain_error("vertex id out of range");
    insert(v);
  }
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    if (v >= universe) throw std::domain_error("vertex id out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % 64 != 0 && !s.words_.empty())
    s.words_.back() = (Word{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  for (Word w : words_)
    if (w) return false;
  return true;
}

Vertex VertexSet::front() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
  return static_cast<Vertex>(universe_);
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
  assert(universe_ == o.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

VertexSet VertexSet::resized(std::size_t universe) const {
  VertexSet r(universe);
  for (Vertex v : *this) {
    if (v >= universe) throw std::domain_error("vertex id out of range");
    r.insert(v);
  }
  return r;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

std::size_t VertexSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  // x = smallest element of the symmetric difference; the set holding x is
  // smaller unless the other set has nothing beyond x (then it is a prefix).
  std::size_t words = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < words; ++i) {
    VertexSet::Word wa = i < a.words_.size() ? a.words_[i] : 0;
    VertexSet::Word wb = i < b.words_.size() ? b.words_[i] : 0;
    VertexSet::Word diff = wa ^ wb;
    if (!diff) continue;
    int bit = std::countr_zero(diff);
    bool in_a = (wa >> bit) & 1U;
    const VertexSet& other = in_a ? b : a;
    VertexSet::Word above = bit == 63 ? 0 : ~((VertexSet::Word{2} << bit) - 1);
    bool other_has_more = (i < other.words_.size() && (other.words_[i] & above));
    for (std::size_t j = i + 1; !other_has_more && j < other.words_.size(); ++j)
      other_has_more = other.words_[j] != 0;
    return in_a ? other_has_more : !other_has_more;
  }
  return false;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), LexLess{});
}

}  // namespace heredenum
