#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "forcing_lab/errors.hpp"

namespace forcing_lab {

using Vertex = int;

/// Set of vertex ids drawn from a fixed universe 0..universe()-1, stored as a
/// word-packed bit set. Equality compares universe and members.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= bit(v);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~bit(v);
  }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && (words_[v >> 6] & bit(v)) != 0;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return size() == universe_; }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    return full(universe_) - *this;
  }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const {
    same_universe(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  /// Least member, or -1 when empty.
  Vertex first() const { return next(0); }
  /// Least member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Orders sets of equal universe by their sorted member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    return a.members() < b.members();
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (Vertex v : members()) {
      if (!first_item) s += ",";
      s += std::to_string(v);
      first_item = false;
    }
    return s + "}";
  }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  void check(Vertex v) const {
    if (v < 0 || v >= universe_)
      throw DomainError("vertex id " + std::to_string(v) +
                        " outside 0.." + std::to_string(universe_ - 1));
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw DomainError("vertex sets over different universes");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace forcing_lab
