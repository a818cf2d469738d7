#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eac/activity.hpp"
#include "eac/matroid.hpp"

namespace eac {

enum class OrderKind { Ext, Int, ExtInt };

const char* order_kind_name(OrderKind k);

// The three active quasi-orders on the bases of an ordered matroid. Each
// comparison below is one of several equivalent characterizations; the
// alternates are exposed for cross-testing and must agree everywhere.

// Primary: A <= B iff A is contained in B + EA(B).
bool leq_ext(const OrderedMatroid& m, ElemSet a, ElemSet b);
// A + EA(A) contained in B + EA(B).
bool leq_ext_union(const OrderedMatroid& m, ElemSet a, ElemSet b);
// B is the lex-largest basis contained in A + B.
bool leq_ext_lexmax(const OrderedMatroid& m, ElemSet a, ElemSet b);

// Primary: A <= B iff A - IA(A) is contained in B.
bool leq_int(const OrderedMatroid& m, ElemSet a, ElemSet b);
// A - IA(A) contained in B - IA(B).
bool leq_int_reduced(const OrderedMatroid& m, ElemSet a, ElemSet b);
// A is the lex-smallest basis containing the intersection of A and B.
bool leq_int_lexmin(const OrderedMatroid& m, ElemSet a, ElemSet b);

// A <= B iff IP(A) and EP(B) are disjoint. Extends both orders above.
bool leq_extint(const OrderedMatroid& m, ElemSet a, ElemSet b);

// A finite poset on the bases of a matroid, indexed like
// OrderedMatroid::bases(). Construction verifies reflexivity, antisymmetry
// and transitivity (NotAPartialOrder otherwise).
class BasisPoset {
 public:
  BasisPoset(const OrderedMatroid& m, OrderKind kind);

  OrderKind kind() const { return kind_; }
  int size() const { return static_cast<int>(bases_.size()); }
  const std::vector<ElemSet>& bases() const { return bases_; }

  bool leq(int i, int j) const {
    return leq_[static_cast<std::size_t>(i) * bases_.size() +
                static_cast<std::size_t>(j)] != 0;
  }
  bool strictly_less(int i, int j) const { return i != j && leq(i, j); }

 private:
  OrderKind kind_;
  std::vector<ElemSet> bases_;
  std::vector<char> leq_;
};

inline BasisPoset build_poset(const OrderedMatroid& m, OrderKind kind) {
  return BasisPoset(m, kind);
}

// Cover relations (i covered-by j) as index pairs, sorted by (i, j).
std::vector<std::pair<int, int>> hasse_diagram(const BasisPoset& p);

// True iff ord lists each poset element exactly once (WrongBasisSet
// otherwise) and never places a strictly larger element first.
bool is_linear_extension(const BasisPoset& p, std::span<const int> ord);

// All linear extensions, streamed in a deterministic backtracking order,
// stopping after `cap` results. Returns nullopt if more than `cap` exist.
std::optional<std::vector<std::vector<int>>> enumerate_linear_extensions(
    const BasisPoset& p, std::size_t cap);

// Distinct linear extensions sampled by seeded random topological sorts.
// Deterministic for a fixed (poset, count, seed). May return fewer than
// `count` if the attempt budget is exhausted.
std::vector<std::vector<int>> sample_linear_extensions(const BasisPoset& p,
                                                       std::size_t count,
                                                       std::uint64_t seed);

// Exhaustive list when the poset has at most `limit` linear extensions,
// otherwise `limit` seeded samples.
std::vector<std::vector<int>> linear_extensions(const BasisPoset& p,
                                                std::size_t limit,
                                                std::uint64_t seed);

}  // namespace eac
