#include "reference.hpp"

#include <algorithm>
#include <bit>

namespace eac::reference {

IntervalShellingResult shelling_check_interval(
    const SimplicialComplex& k, std::span<const int> facet_order) {
  IntervalShellingResult result;
  for (std::size_t j = 0; j < facet_order.size(); ++j) {
    const std::uint64_t fj = k.facets[static_cast<std::size_t>(facet_order[j])];
    auto seen_before = [&](std::uint64_t face) {
      for (std::size_t i = 0; i < j; ++i)
        if ((face & ~k.facets[static_cast<std::size_t>(facet_order[i])]) == 0)
          return true;
      return false;
    };

    std::uint64_t new_count = 0;
    std::vector<std::uint64_t> minimal_new;
    for (std::uint64_t s = fj;; s = (s - 1) & fj) {
      if (!seen_before(s)) {
        ++new_count;
        bool minimal = true;
        for (std::uint64_t rest = s; rest && minimal;) {
          std::uint64_t low = rest & (~rest + 1);
          rest ^= low;
          if (!seen_before(s & ~low)) minimal = false;
        }
        if (minimal) minimal_new.push_back(s);
      }
      if (s == 0) break;
    }

    const bool interval =
        minimal_new.size() == 1 &&
        new_count == (std::uint64_t{1}
                      << (std::popcount(fj) - std::popcount(minimal_new[0])));
    if (!interval) {
      result.is_shelling = false;
      result.failure_index = static_cast<int>(j);
      result.restriction_sets.clear();
      std::sort(minimal_new.begin(), minimal_new.end());
      result.failure_minimal_faces = std::move(minimal_new);
      return result;
    }
    result.restriction_sets.push_back(minimal_new[0]);
  }
  return result;
}

std::vector<std::uint64_t> minimal_nonfaces_bruteforce(
    const SimplicialComplex& k) {
  std::vector<std::uint64_t> found;
  auto contains_known = [&found](std::uint64_t s) {
    for (std::uint64_t f : found)
      if ((f & ~s) == 0) return true;
    return false;
  };
  // Ascending cardinality, so supersets of found non-faces are never minimal.
  for (int size = 0; size <= std::popcount(k.universe); ++size) {
    for (std::uint64_t s = 0;; s = (s - k.universe) & k.universe) {
      if (std::popcount(s) == size && !k.is_face(s) && !contains_known(s))
        found.push_back(s);
      if (s == k.universe) break;
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<ElemSet> circuits_bruteforce(const OrderedMatroid& m) {
  const std::uint64_t ground = m.ground().bits();
  auto dependent = [&m](std::uint64_t s) {
    for (const ElemSet& b : m.bases())
      if ((s & ~b.bits()) == 0) return false;
    return true;
  };
  std::vector<std::uint64_t> found;
  for (int size = 1; size <= m.n(); ++size) {
    for (std::uint64_t s = 0;; s = (s - ground) & ground) {
      if (std::popcount(s) == size && dependent(s)) {
        bool minimal = true;
        for (std::uint64_t f : found)
          if ((f & ~s) == 0) {
            minimal = false;
            break;
          }
        if (minimal) found.push_back(s);
      }
      if (s == ground) break;
    }
  }
  std::vector<ElemSet> out;
  out.reserve(found.size());
  for (std::uint64_t f : found) out.push_back(ElemSet::from_bits(f));
  std::sort(out.begin(), out.end(), [&m](ElemSet a, ElemSet b) {
    return m.order().lex_less(a, b);
  });
  return out;
}

std::vector<long long> f_vector_bruteforce(const SimplicialComplex& k) {
  int max_size = 0;
  for (std::uint64_t f : k.facets) max_size = std::max(max_size, std::popcount(f));
  std::vector<long long> f_vec(static_cast<std::size_t>(max_size) + 1, 0);
  for (std::uint64_t s = 0;; s = (s - k.universe) & k.universe) {
    if (k.is_face(s)) ++f_vec[static_cast<std::size_t>(std::popcount(s))];
    if (s == k.universe) break;
  }
  return f_vec;
}

}  // namespace eac::reference
