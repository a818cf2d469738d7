#pragma once

// A fully worked five-element example: the graphic matroid of K4 minus one
// edge, with the edges labeled so that the circuits are {1,2,3}, {1,4,5} and
// {2,3,4,5}. Every quantity below is pinned so the CLI's reproduce command
// can diff a fresh computation against known-good values.

#include <vector>

#include "eac/activity.hpp"
#include "eac/matroid.hpp"

namespace eac::worked_example {

// The matroid, built from its eight bases (all 3-subsets of {1..5} except
// {1,2,3} and {1,4,5}).
OrderedMatroid matroid();

// The same matroid realized as a graph on vertices {1..4} with edges
// 1=12, 2=13, 3=23, 4=14, 5=24 (spanning trees = bases).
OrderedMatroid matroid_from_graph();

// Expected activity of every basis, in canonical (lex) basis order.
const std::vector<BasisActivity>& golden_activities();

// Expected facet data of the external activity complex, again in canonical
// basis order. "reduced" strips the cone points {3, 4, 5, barred 1};
// "restriction" is the restriction set of the lex shelling (all barred).
struct GoldenFacet {
  ElemSet basis;
  ElemSet plain;            // B + EP(B)
  ElemSet barred;           // B + EA(B), to be barred
  ElemSet reduced_plain;
  ElemSet reduced_barred;
  ElemSet restriction_barred;  // barred(IP(B))
};
const std::vector<GoldenFacet>& golden_facets();

ElemSet cone_plain();    // {3,4,5}
ElemSet cone_barred();   // {1}
ElemSet golden_aea();    // {1}
ElemSet golden_aep();    // {3,4,5}

// Minimal non-faces of the activity complex: for each circuit C, the
// order-minimum stays plain and the rest is barred.
struct GoldenNonface {
  ElemSet plain;
  ElemSet barred;
};
const std::vector<GoldenNonface>& golden_nonfaces();

const TuttePolynomial& golden_tutte();

// h-vector shared by the independence complex and (zero-padded) the activity
// complex: (1, 2, 3, 2).
const std::vector<long long>& golden_h();

// Negative-control basis orders.
// Control A extends the ext order but fails to shell the independence
// complex at step 2 (0-based index 1), where facet 135 meets 124 in
// codimension two.
const std::vector<ElemSet>& control_order_ext();
// Control B extends the int order and shells the independence complex, but
// fails on the activity complex at its sixth facet (0-based index 5, basis
// 345), which introduces two minimal new faces.
const std::vector<ElemSet>& control_order_int();

// Positions of a basis order inside matroid().bases().
std::vector<int> as_indices(const OrderedMatroid& m,
                            const std::vector<ElemSet>& order);

}  // namespace eac::worked_example
