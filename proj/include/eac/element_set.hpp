#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "eac/errors.hpp"

namespace eac {

// A subset of {1, ..., kMaxGroundSize}, stored as a bitmask with element e at
// bit e-1. Value type; all operations are pure.
class ElemSet {
 public:
  static constexpr int kMaxGroundSize = 20;

  constexpr ElemSet() = default;

  static constexpr ElemSet from_bits(std::uint64_t bits) {
    ElemSet s;
    s.bits_ = bits;
    return s;
  }

  static ElemSet of(std::initializer_list<int> elems) {
    ElemSet s;
    for (int e : elems) s.add(e);
    return s;
  }

  static ElemSet of(const std::vector<int>& elems) {
    ElemSet s;
    for (int e : elems) s.add(e);
    return s;
  }

  // {1, ..., n}.
  static constexpr ElemSet full(int n) {
    return from_bits(n <= 0 ? 0 : (std::uint64_t{1} << n) - 1);
  }

  static constexpr ElemSet single(int e) {
    return from_bits(std::uint64_t{1} << (e - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1u; }

  void add(int e) {
    if (e < 1 || e > kMaxGroundSize)
      fail(Errc::InvalidElement,
           "element " + std::to_string(e) + " outside 1.." +
               std::to_string(kMaxGroundSize));
    bits_ |= std::uint64_t{1} << (e - 1);
  }

  void remove(int e) { bits_ &= ~(std::uint64_t{1} << (e - 1)); }

  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  // Smallest element id, or 0 if empty. This ignores any ground order; use
  // GroundOrder::min for order-aware minima.
  int min_id() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

  // Largest element id, or 0 if empty.
  int max_id() const {
    return bits_ ? 64 - std::countl_zero(bits_) : 0;
  }

  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr bool intersects(ElemSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) {
    return from_bits(a.bits_ | b.bits_);
  }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) {
    return from_bits(a.bits_ & b.bits_);
  }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) {
    return from_bits(a.bits_ & ~b.bits_);
  }
  friend constexpr ElemSet operator^(ElemSet a, ElemSet b) {
    return from_bits(a.bits_ ^ b.bits_);
  }
  ElemSet& operator|=(ElemSet b) { bits_ |= b.bits_; return *this; }
  ElemSet& operator&=(ElemSet b) { bits_ &= b.bits_; return *this; }
  ElemSet& operator-=(ElemSet b) { bits_ &= ~b.bits_; return *this; }

  ElemSet with(int e) const {
    ElemSet s = *this;
    s.add(e);
    return s;
  }
  ElemSet without(int e) const {
    ElemSet s = *this;
    s.remove(e);
    return s;
  }

  friend constexpr bool operator==(ElemSet, ElemSet) = default;

  // Iterates elements in increasing id.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int e : *this) out.push_back(e);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    out += "}";
    return out;
  }

  struct Hash {
    std::size_t operator()(ElemSet s) const {
      return std::hash<std::uint64_t>{}(s.bits());
    }
  };

 private:
  std::uint64_t bits_ = 0;
};

// A linear order on a ground set (a subset of {1..kMaxGroundSize}).
// Comparisons, minima and lexicographic set comparisons are all relative to
// this order, never to raw element ids.
class GroundOrder {
 public:
  GroundOrder() = default;

  // Natural id order on the given ground set.
  static GroundOrder natural(ElemSet ground);

  // Order given as the full sequence of ground elements, smallest first.
  // Fails with InvalidOrder unless the sequence is a permutation of a valid
  // ground set.
  static GroundOrder of_sequence(const std::vector<int>& elems);

  ElemSet ground() const { return ground_; }
  int size() const { return static_cast<int>(sequence_.size()); }

  // Elements from smallest to largest.
  const std::vector<int>& sequence() const { return sequence_; }

  // Position of e in the order, 0-based. Precondition: e in ground.
  int key(int e) const { return key_[static_cast<std::size_t>(e)]; }

  bool less(int a, int b) const { return key(a) < key(b); }

  // Smallest/largest element of s under this order; 0 if s is empty.
  int min(ElemSet s) const;
  int max(ElemSet s) const;

  // Strict lexicographic comparison of subsets of the ground set, comparing
  // the sorted-by-order element sequences (a proper prefix sorts first).
  bool lex_less(ElemSet a, ElemSet b) const;

  // Induced order on a subset of the ground set.
  GroundOrder restricted(ElemSet sub) const;

  friend bool operator==(const GroundOrder& a, const GroundOrder& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  ElemSet ground_;
  std::vector<int> sequence_;
  std::vector<int> key_;  // indexed by element id; -1 outside ground
};

}  // namespace eac
