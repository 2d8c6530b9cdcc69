#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nearring/types.hpp"

namespace nearring {

// Fixed-universe bitset over element indices [0, universe).
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<Elem> members)
      : Subset(universe) {
    for (Elem m : members) insert(m);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }
  static Subset of(std::size_t universe, const std::vector<Elem>& members) {
    Subset s(universe);
    for (Elem m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Elem x) { words_[x >> 6] |= (std::uint64_t{1} << (x & 63)); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Subset& operator&=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }

  Subset complement() const {
    Subset c(universe_);
    for (std::size_t i = 0; i < universe_; ++i)
      if (!contains(static_cast<Elem>(i))) c.insert(static_cast<Elem>(i));
    return c;
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Size first, then lexicographic on the ascending member lists.
  friend bool lattice_less(const Subset& a, const Subset& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  }

  // Strict weak order usable as a map key.
  friend bool operator<(const Subset& a, const Subset& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.words_ < b.words_;
  }

  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nearring
