#pragma once

// Serial reference implementations, kept deliberately independent of the
// optimized code paths in the main library. Tests compare the two; the
// benchmark target measures the gap. Nothing here is linked into the CLI.

#include <cstdint>
#include <span>
#include <vector>

#include "eac/complexes.hpp"
#include "eac/matroid.hpp"

namespace eac::reference {

// Shelling oracle working straight from the definition of "new faces form an
// interval": at each step, enumerate the subsets of the incoming facet that
// are not contained in any earlier facet, and demand a unique inclusion-
// minimal one (whose interval size must match the new-face count).
struct IntervalShellingResult {
  bool is_shelling = true;
  int failure_index = -1;
  std::vector<std::uint64_t> restriction_sets;
  // Minimal new faces at the failing step (two or more when a step fails
  // because the new faces are no interval).
  std::vector<std::uint64_t> failure_minimal_faces;
};
IntervalShellingResult shelling_check_interval(const SimplicialComplex& k,
                                               std::span<const int> facet_order);

// Minimal non-faces by plain subset search over the universe, smallest
// cardinality first.
std::vector<std::uint64_t> minimal_nonfaces_bruteforce(
    const SimplicialComplex& k);

// Circuits recomputed from scratch: dependent sets are those contained in no
// basis; keep the inclusion-minimal ones.
std::vector<ElemSet> circuits_bruteforce(const OrderedMatroid& m);

// f-vector by per-size subset counting over the whole vertex power set.
std::vector<long long> f_vector_bruteforce(const SimplicialComplex& k);

}  // namespace eac::reference
