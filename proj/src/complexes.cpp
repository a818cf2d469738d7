#include "eac/complexes.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "eac/active_orders.hpp"

namespace eac {
namespace {

std::vector<int> slot_map(const OrderedMatroid& m) {
  // slot index of each ground element, by ascending id
  std::vector<int> slot(static_cast<std::size_t>(m.ground().max_id()) + 1, -1);
  int next = 0;
  for (int e : m.ground()) slot[static_cast<std::size_t>(e)] = next++;
  return slot;
}

std::uint64_t to_slots(ElemSet s, const std::vector<int>& slot, int shift) {
  std::uint64_t mask = 0;
  for (int e : s)
    mask |= std::uint64_t{1} << (slot[static_cast<std::size_t>(e)] + shift);
  return mask;
}

void check_facet_permutation(const SimplicialComplex& k,
                             std::span<const int> facet_order) {
  const int count = static_cast<int>(k.facets.size());
  if (static_cast<int>(facet_order.size()) != count)
    fail(Errc::NotAPermutation,
         "facet order has " + std::to_string(facet_order.size()) +
             " entries, complex has " + std::to_string(count) + " facets");
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (int idx : facet_order) {
    if (idx < 0 || idx >= count || seen[static_cast<std::size_t>(idx)])
      fail(Errc::NotAPermutation,
           "facet order is not a permutation of the facets");
    seen[static_cast<std::size_t>(idx)] = 1;
  }
}

}  // namespace

int SimplicialComplex::slot_of_label(int label) const {
  for (int i = 0; i < slots; ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  fail(Errc::InvalidElement,
       "no vertex labeled " + std::to_string(label) + " in this complex");
}

std::string SimplicialComplex::face_to_string(std::uint64_t mask) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < slots; ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) out += ",";
    int lab = labels[static_cast<std::size_t>(i)];
    out += lab > 0 ? std::to_string(lab) : std::to_string(-lab) + "'";
    first = false;
  }
  return out + "}";
}

SimplicialComplex independence_complex(const OrderedMatroid& m) {
  SimplicialComplex k;
  std::vector<int> slot = slot_map(m);
  k.slots = m.n();
  k.labels.reserve(static_cast<std::size_t>(k.slots));
  for (int e : m.ground()) k.labels.push_back(e);
  k.universe = to_slots(m.ground() - m.loops(), slot, 0);
  k.facets.reserve(m.bases().size());
  for (const ElemSet& b : m.bases()) k.facets.push_back(to_slots(b, slot, 0));
  return k;
}

SimplicialComplex external_activity_complex(const OrderedMatroid& m) {
  SimplicialComplex k;
  std::vector<int> slot = slot_map(m);
  const int g = m.n();
  k.slots = 2 * g;
  k.labels.resize(static_cast<std::size_t>(k.slots));
  int pos = 0;
  for (int e : m.ground()) {
    k.labels[static_cast<std::size_t>(pos)] = e;
    k.labels[static_cast<std::size_t>(g + pos)] = -e;
    ++pos;
  }
  k.universe = k.slots == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << k.slots) - 1;
  k.facets.reserve(m.bases().size());
  for (const BasisActivity& act : activity_table(m))
    k.facets.push_back(to_slots(act.basis | act.ep, slot, 0) |
                       to_slots(act.basis | act.ea, slot, g));
  return k;
}

std::uint64_t cone_points(const SimplicialComplex& k) {
  std::uint64_t common = k.universe;
  for (std::uint64_t f : k.facets) common &= f;
  return common;
}

SimplicialComplex reduced_complex(const SimplicialComplex& k) {
  std::uint64_t cone = cone_points(k);
  SimplicialComplex r = k;
  r.universe &= ~cone;
  for (std::uint64_t& f : r.facets) f &= ~cone;
  return r;
}

std::vector<std::uint64_t> minimal_nonfaces(const SimplicialComplex& k) {
  // S is a non-face iff it meets the complement of every facet, so the
  // minimal non-faces are the minimal transversals of those complements.
  // Fold complements in one at a time, keeping the transversal list minimal.
  std::vector<std::uint64_t> trans{0};
  for (std::uint64_t f : k.facets) {
    std::uint64_t comp = k.universe & ~f;
    if (comp == 0) return {};  // the facet covers the universe: no non-faces
    std::vector<std::uint64_t> next;
    for (std::uint64_t t : trans) {
      if (t & comp) {
        next.push_back(t);
        continue;
      }
      for (std::uint64_t rest = comp; rest;) {
        std::uint64_t low = rest & (~rest + 1);
        next.push_back(t | low);
        rest ^= low;
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::stable_sort(next.begin(), next.end(),
                     [](std::uint64_t a, std::uint64_t b) {
                       return std::popcount(a) < std::popcount(b);
                     });
    trans.clear();
    for (std::uint64_t cand : next) {
      bool minimal = true;
      for (std::uint64_t kept : trans) {
        if ((kept & ~cand) == 0) {
          minimal = false;
          break;
        }
      }
      if (minimal) trans.push_back(cand);
    }
  }
  std::sort(trans.begin(), trans.end());
  return trans;
}

StanleyReisnerReport verify_stanley_reisner(const OrderedMatroid& m) {
  SimplicialComplex act = external_activity_complex(m);
  std::vector<int> slot = slot_map(m);
  const int g = m.n();

  std::vector<std::uint64_t> predicted;
  for (const ElemSet& circ : m.circuits()) {
    int head = m.order().min(circ);
    predicted.push_back(to_slots(ElemSet::single(head), slot, 0) |
                        to_slots(circ.without(head), slot, g));
  }
  std::sort(predicted.begin(), predicted.end());

  std::vector<std::uint64_t> found = minimal_nonfaces(act);

  StanleyReisnerReport report;
  std::set_difference(predicted.begin(), predicted.end(), found.begin(),
                      found.end(), std::back_inserter(report.missing));
  std::set_difference(found.begin(), found.end(), predicted.begin(),
                      predicted.end(), std::back_inserter(report.unexpected));
  report.ok = report.missing.empty() && report.unexpected.empty();
  return report;
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
  if (k.facets.empty()) fail(Errc::Internal, "complex has no facets");
  // Desk-scale guard: enumerating faces costs sum over facets of 2^|F|.
  std::uint64_t budget = 0;
  for (std::uint64_t f : k.facets) {
    budget += std::uint64_t{1} << std::popcount(f);
    if (budget > (std::uint64_t{1} << 24))
      fail(Errc::FaceEnumerationTooLarge,
           "face enumeration would exceed 2^24 steps");
  }
  std::unordered_set<std::uint64_t> faces;
  faces.reserve(static_cast<std::size_t>(budget));
  for (std::uint64_t f : k.facets) {
    for (std::uint64_t s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  int max_size = 0;
  for (std::uint64_t f : k.facets) max_size = std::max(max_size, std::popcount(f));
  std::vector<long long> f_vec(static_cast<std::size_t>(max_size) + 1, 0);
  for (std::uint64_t face : faces) ++f_vec[static_cast<std::size_t>(std::popcount(face))];
  return f_vec;
}

std::vector<long long> h_vector(const SimplicialComplex& k) {
  if (!k.is_pure()) fail(Errc::NonPure, "h-vector requires a pure complex");
  std::vector<long long> f = f_vector(k);
  const int d = k.facet_size();
  // binomials up to d
  std::vector<std::vector<long long>> choose(
      static_cast<std::size_t>(d) + 1,
      std::vector<long long>(static_cast<std::size_t>(d) + 1, 0));
  for (int a = 0; a <= d; ++a) {
    choose[static_cast<std::size_t>(a)][0] = 1;
    for (int b = 1; b <= a; ++b)
      choose[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          choose[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
  }
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (int kk = 0; kk <= d; ++kk) {
    long long acc = 0;
    for (int i = 0; i <= kk; ++i) {
      long long term =
          choose[static_cast<std::size_t>(d - i)][static_cast<std::size_t>(kk - i)] *
          f[static_cast<std::size_t>(i)];
      acc += ((kk - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(kk)] = acc;
  }
  return h;
}

EulerCharacteristic euler_characteristic(const SimplicialComplex& k) {
  std::vector<long long> f = f_vector(k);
  EulerCharacteristic out;
  for (std::size_t i = 1; i < f.size(); ++i)
    out.chi += (i % 2 == 1) ? f[i] : -f[i];
  out.chi_reduced = out.chi - 1;
  return out;
}

ShellingReport shelling_check(const SimplicialComplex& k,
                              std::span<const int> facet_order) {
  if (k.facets.empty()) fail(Errc::Internal, "complex has no facets");
  if (!k.is_pure()) fail(Errc::NonPure, "shelling requires a pure complex");
  check_facet_permutation(k, facet_order);

  ShellingReport report;
  const std::size_t count = facet_order.size();
  report.restriction_sets.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t fj = k.facets[static_cast<std::size_t>(facet_order[j])];
    // Restriction set: vertices x of F_j such that F_j - x lies in an
    // earlier facet.
    std::uint64_t restriction = 0;
    for (std::uint64_t rest = fj; rest;) {
      std::uint64_t low = rest & (~rest + 1);
      rest ^= low;
      const std::uint64_t fm = fj & ~low;
      for (std::size_t i = 0; i < j; ++i) {
        if ((fm & ~k.facets[static_cast<std::size_t>(facet_order[i])]) == 0) {
          restriction |= low;
          break;
        }
      }
    }
    // Step j is a shelling step iff no earlier facet contains the whole
    // restriction set; then the new faces are exactly [restriction, F_j].
    for (std::size_t i = 0; i < j; ++i) {
      if ((restriction & ~k.facets[static_cast<std::size_t>(facet_order[i])]) ==
          0) {
        report.is_shelling = false;
        report.failure_index = static_cast<int>(j);
        report.restriction_sets.clear();
        return report;
      }
    }
    report.restriction_sets.push_back(restriction);
  }
  return report;
}

std::vector<std::uint64_t> restriction_sets_predicted(
    const OrderedMatroid& m, std::span<const int> basis_order,
    WhichComplex which) {
  const int count = static_cast<int>(m.bases().size());
  if (static_cast<int>(basis_order.size()) != count)
    fail(Errc::NotAPermutation, "basis order size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  for (int idx : basis_order) {
    if (idx < 0 || idx >= count || seen[static_cast<std::size_t>(idx)])
      fail(Errc::NotAPermutation,
           "basis order is not a permutation of the bases");
    seen[static_cast<std::size_t>(idx)] = 1;
  }

  const OrderKind required =
      which == WhichComplex::Independence ? OrderKind::Int : OrderKind::ExtInt;
  BasisPoset poset(m, required);
  if (!is_linear_extension(poset, basis_order))
    fail(Errc::NotALinearExtension,
         std::string("basis order does not extend the ") +
             order_kind_name(required) + " order");

  std::vector<int> slot = slot_map(m);
  const int g = m.n();
  std::vector<BasisActivity> table = activity_table(m);
  std::vector<std::uint64_t> out;
  out.reserve(basis_order.size());
  for (int idx : basis_order) {
    const BasisActivity& act = table[static_cast<std::size_t>(idx)];
    out.push_back(which == WhichComplex::Independence
                      ? to_slots(act.ip, slot, 0)
                      : to_slots(act.ip, slot, g));
  }
  return out;
}

std::vector<long long> h_vector_from_shelling(const SimplicialComplex& k,
                                              const ShellingReport& report) {
  if (!report.is_shelling)
    fail(Errc::Internal, "h-vector from a failed shelling");
  std::vector<long long> h(static_cast<std::size_t>(k.facet_size()) + 1, 0);
  for (std::uint64_t r : report.restriction_sets)
    ++h[static_cast<std::size_t>(std::popcount(r))];
  return h;
}

Topology classify_topology(const OrderedMatroid& m) {
  const int coloop_count = m.coloops().size();
  const int reduced_rank = m.rank() - coloop_count;
  Topology topo;
  if (m.has_intersecting_circuits()) {
    topo.cls = TopologyClass::ContractibleU31;
    return topo;
  }
  topo.cls = TopologyClass::Sphere;
  topo.sphere_dim = reduced_rank - 1;

  // Consistency: with pairwise disjoint circuits every non-coloop is
  // absolutely active or passive, which pins the reduced dimension to
  // n + rank - 1 - |absolutes| - 2 * #coloops = reduced_rank - 1.
  AbsoluteElements abs = absolute_elements(m);
  const int reduced_dim = m.n() + m.rank() - 1 - abs.aea.size() -
                          abs.aep.size() - 2 * coloop_count;
  if (reduced_dim != topo.sphere_dim)
    fail(Errc::Internal,
         "sphere dimension " + std::to_string(topo.sphere_dim) +
             " disagrees with reduced complex dimension " +
             std::to_string(reduced_dim));
  return topo;
}

}  // namespace eac
