#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eac/element_set.hpp"
#include "eac/errors.hpp"

namespace eac {

// A matroid given by its list of bases, together with a linear order on the
// ground set. Immutable after construction; construction validates the basis
// exchange axiom, so every instance is a genuine matroid.
//
// Top-level constructors build matroids on ground set {1..n}. Minors (delete,
// contract) keep the surviving elements' identities, so their ground sets are
// arbitrary subsets of {1..kMaxGroundSize}.
class OrderedMatroid {
 public:
  // Ground {1..n}, natural order.
  static OrderedMatroid from_bases(int n, std::vector<ElemSet> bases);
  static OrderedMatroid from_bases(int n, const GroundOrder& order,
                                   std::vector<ElemSet> bases);
  static OrderedMatroid from_bases(ElemSet ground, const GroundOrder& order,
                                   std::vector<ElemSet> bases);

  // Uniform matroid U(n, k): every k-subset of {1..n} is a basis.
  static OrderedMatroid uniform(int n, int k);

  // Graphic matroid: elements are the edges, numbered 1..edges.size() in list
  // order; bases are the maximal spanning forests. Self-loops become matroid
  // loops, parallel edges are allowed.
  static OrderedMatroid from_graph(
      int vertex_count, const std::vector<std::pair<int, int>>& edges);

  // Same bases, different ground order.
  OrderedMatroid with_order(const GroundOrder& order) const;

  ElemSet ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int rank() const { return rank_; }
  const GroundOrder& order() const { return order_; }

  // Bases sorted lexicographically under the ground order.
  const std::vector<ElemSet>& bases() const { return bases_; }

  // Index of b in bases(), or -1 if b is not a basis.
  int basis_index(ElemSet b) const;

  bool is_independent(ElemSet s) const {
    return independent_[s.bits()] != 0;
  }
  bool is_basis(ElemSet s) const {
    return s.size() == rank_ && is_independent(s);
  }

  // Rank of an arbitrary subset of the ground set.
  int subset_rank(ElemSet s) const;

  // Minimal dependent sets, sorted lexicographically under the ground order.
  const std::vector<ElemSet>& circuits() const { return circuits_; }

  ElemSet loops() const { return loops_; }
  ElemSet coloops() const { return coloops_; }

  // Dual matroid: bases are the complements of this matroid's bases.
  OrderedMatroid dual() const;

  // Deletion of a non-coloop element (DeleteColoop otherwise).
  OrderedMatroid delete_element(int e) const;

  // Contraction of a non-loop element (ContractLoop otherwise).
  OrderedMatroid contract_element(int e) const;

  // The unique circuit contained in b + e, for a basis b and e outside b.
  // Computed as {x : b + e - x is a basis}.
  ElemSet fundamental_circuit(ElemSet b, int e) const;

  // The unique cocircuit contained in (E - b) + i, for a basis b and i in b.
  // Computed as {x : b + x - i is a basis}.
  ElemSet fundamental_cocircuit(ElemSet b, int i) const;

  // True iff some pair of distinct circuits shares an element.
  bool has_intersecting_circuits() const;

  // True iff some minor on three elements is the rank-1 uniform matroid
  // U(3,1). Searched directly over delete/contract splits, independently of
  // circuit intersections.
  bool has_u31_minor() const;

 private:
  OrderedMatroid() = default;
  void init_derived();

  ElemSet ground_;
  GroundOrder order_;
  std::vector<ElemSet> bases_;
  int rank_ = 0;
  std::vector<char> independent_;  // indexed by bitmask over {1..max_id}
  std::vector<ElemSet> circuits_;
  ElemSet loops_;
  ElemSet coloops_;
};

}  // namespace eac
