#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eac/activity.hpp"
#include "eac/matroid.hpp"

namespace eac {

// A simplicial complex given by its facets, over a fixed vertex universe.
// Vertices live in "slots" (bit positions); each slot carries a label:
// +e for a plain ground element e, -e for its barred copy. Faces and facets
// are bitmasks over slots. The universe is the official vertex set; reduction
// can leave universe slots unused by every facet, and non-faces are judged
// against the universe.
struct SimplicialComplex {
  int slots = 0;
  std::uint64_t universe = 0;
  std::vector<int> labels;           // size == slots
  std::vector<std::uint64_t> facets;  // each a submask of universe

  bool is_face(std::uint64_t mask) const {
    for (std::uint64_t f : facets)
      if ((mask & ~f) == 0) return true;
    return false;
  }

  bool is_pure() const {
    for (std::uint64_t f : facets)
      if (std::popcount(f) != std::popcount(facets.front())) return false;
    return true;
  }

  // Common facet size of a pure complex (dimension + 1).
  int facet_size() const { return std::popcount(facets.front()); }

  // Slot carrying the given vertex label; InvalidElement if absent.
  int slot_of_label(int label) const;
  std::string face_to_string(std::uint64_t mask) const;
};

// Independence complex IN(M): vertices are the non-loop elements, facets are
// the bases. Facet i corresponds to bases()[i].
SimplicialComplex independence_complex(const OrderedMatroid& m);

// External activity complex Act(M): vertices are all plain and barred copies
// of ground elements; the facet for basis B is
//   B + EP(B)  (plain)   together with   barred(B + EA(B)).
// Facet i corresponds to bases()[i]; every facet has n + rank vertices.
SimplicialComplex external_activity_complex(const OrderedMatroid& m);

// Vertices lying in every facet.
std::uint64_t cone_points(const SimplicialComplex& k);

// The complex with all cone points removed from the universe and facets.
SimplicialComplex reduced_complex(const SimplicialComplex& k);

// Inclusion-minimal subsets of the universe that are not faces, sorted by
// mask. Computed as the minimal transversals of the facet complements.
std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& k);

// Checks that the minimal non-faces of Act(M) are exactly the sets
// {min C} + barred(C - min C) over circuits C.
struct StanleyReisnerReport {
  bool ok = true;
  std::vector<std::uint64_t> missing;     // predicted but not found
  std::vector<std::uint64_t> unexpected;  // found but not predicted
};
StanleyReisnerReport verify_stanley_reisner(const OrderedMatroid& m);

// f_vector[i] = number of faces with i vertices (f_vector[0] = 1 for the
// empty face). Enumerates all faces; FaceEnumerationTooLarge beyond the desk
// scale guard.
std::vector<long long> f_vector(const SimplicialComplex& k);

// h-vector of a pure complex via the standard f-to-h transform
//   h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_i,   d = facet size.
std::vector<long long> h_vector(const SimplicialComplex& k);

// Ordinary and reduced Euler characteristics (chi counts nonempty faces with
// alternating signs; chi_reduced = chi - 1).
struct EulerCharacteristic {
  long long chi = 0;
  long long chi_reduced = 0;
};
EulerCharacteristic euler_characteristic(const SimplicialComplex& k);

// Shelling verdict for one facet order. An order is a shelling iff each
// facet, beyond the first, meets the union of its predecessors in a nonempty
// union of codimension-one faces; equivalently iff the new faces added at
// step j form the interval [R_j, F_j], where the restriction set R_j holds
// the vertices x of F_j with F_j - x contained in an earlier facet.
struct ShellingReport {
  bool is_shelling = true;
  int failure_index = -1;  // position in the order of the first bad facet
  std::vector<std::uint64_t> restriction_sets;  // per step, when shelling
};
ShellingReport shelling_check(const SimplicialComplex& k,
                              std::span<const int> facet_order);

// Predicted restriction sets, bypassing the shelling machinery: for IN(M)
// with a basis order extending the int order, step j restricts to IP(B_j);
// for Act(M) with an order extending the extint order, to barred(IP(B_j)).
enum class WhichComplex { Independence, ExternalActivity };
std::vector<std::uint64_t> restriction_sets_predicted(
    const OrderedMatroid& m, std::span<const int> basis_order,
    WhichComplex which);

// h-vector of a shelled complex read off a successful shelling:
// h_i = number of steps with restriction set of size i.
std::vector<long long> h_vector_from_shelling(const SimplicialComplex& k,
                                              const ShellingReport& report);

// Topology of the reduced external activity complex. Whenever two circuits
// intersect the complex is contractible (equivalently, the matroid has a
// U(3,1) minor); with pairwise disjoint circuits it is a sphere whose
// dimension is rank - 1 after ignoring coloops.
enum class TopologyClass { ContractibleU31, Sphere };
struct Topology {
  TopologyClass cls = TopologyClass::ContractibleU31;
  int sphere_dim = 0;  // meaningful for Sphere only
};
Topology classify_topology(const OrderedMatroid& m);

}  // namespace eac
