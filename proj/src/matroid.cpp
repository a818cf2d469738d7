#include "eac/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace eac {
namespace {

// Union-find on a handful of vertices; used for forest tests.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  // Returns false if a and b were already connected (adding the edge would
  // close a cycle).
  bool unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
    return true;
  }
};

}  // namespace

OrderedMatroid OrderedMatroid::from_bases(int n, std::vector<ElemSet> bases) {
  if (n < 0 || n > ElemSet::kMaxGroundSize)
    fail(Errc::GroundTooLarge,
         "ground size " + std::to_string(n) + " outside 0.." +
             std::to_string(ElemSet::kMaxGroundSize));
  ElemSet ground = ElemSet::full(n);
  return from_bases(ground, GroundOrder::natural(ground), std::move(bases));
}

OrderedMatroid OrderedMatroid::from_bases(int n, const GroundOrder& order,
                                          std::vector<ElemSet> bases) {
  if (n < 0 || n > ElemSet::kMaxGroundSize)
    fail(Errc::GroundTooLarge,
         "ground size " + std::to_string(n) + " outside 0.." +
             std::to_string(ElemSet::kMaxGroundSize));
  return from_bases(ElemSet::full(n), order, std::move(bases));
}

OrderedMatroid OrderedMatroid::from_bases(ElemSet ground,
                                          const GroundOrder& order,
                                          std::vector<ElemSet> bases) {
  if (bases.empty()) fail(Errc::EmptyBases, "a matroid has at least one basis");
  for (const ElemSet& b : bases)
    if (!b.subset_of(ground))
      fail(Errc::InvalidElement,
           "basis " + b.to_string() + " not contained in ground set " +
               ground.to_string());
  int size = bases.front().size();
  for (const ElemSet& b : bases)
    if (b.size() != size)
      fail(Errc::UnequalSizes, "bases " + bases.front().to_string() + " and " +
                                   b.to_string() + " have different sizes");
  if (order.ground() != ground)
    fail(Errc::InvalidOrder, "order is not a permutation of the ground set");

  OrderedMatroid m;
  m.ground_ = ground;
  m.order_ = order;
  m.rank_ = size;
  std::sort(bases.begin(), bases.end(), [&order](ElemSet a, ElemSet b) {
    return order.lex_less(a, b);
  });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  m.bases_ = std::move(bases);
  m.init_derived();

  // Basis exchange: for all bases A, B and a in A - B there is b in B - A
  // with A - a + b again a basis.
  for (const ElemSet& a : m.bases_) {
    for (const ElemSet& b : m.bases_) {
      for (int x : a - b) {
        bool ok = false;
        for (int y : b - a) {
          if (m.is_basis(a.without(x).with(y))) {
            ok = true;
            break;
          }
        }
        if (!ok)
          fail(Errc::ExchangeAxiomViolated,
               "bases A=" + a.to_string() + ", B=" + b.to_string() +
                   " admit no exchange for element " + std::to_string(x));
      }
    }
  }
  return m;
}

void OrderedMatroid::init_derived() {
  const int max_id = ground_.max_id();
  const std::size_t table_size = std::size_t{1} << max_id;
  independent_.assign(table_size, 0);
  for (const ElemSet& b : bases_) independent_[b.bits()] = 1;
  // Downward closure: every subset of an independent set is independent.
  // Clearing a bit decreases the mask, so a descending scan sees supersets
  // before their subsets.
  for (std::uint64_t mask = table_size; mask-- > 0;) {
    if (!independent_[mask]) continue;
    for (std::uint64_t rest = mask; rest;) {
      std::uint64_t low = rest & (~rest + 1);
      independent_[mask & ~low] = 1;
      rest ^= low;
    }
  }

  circuits_.clear();
  for (std::uint64_t mask = 0; mask < table_size; ++mask) {
    ElemSet s = ElemSet::from_bits(mask);
    if (!s.subset_of(ground_) || independent_[mask]) continue;
    bool minimal = true;
    for (int e : s) {
      if (!independent_[s.without(e).bits()]) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits_.push_back(s);
  }
  std::sort(circuits_.begin(), circuits_.end(), [this](ElemSet a, ElemSet b) {
    return order_.lex_less(a, b);
  });

  loops_ = ElemSet();
  for (int e : ground_)
    if (!independent_[ElemSet::single(e).bits()]) loops_.add(e);
  coloops_ = ground_;
  for (const ElemSet& b : bases_) coloops_ &= b;
}

OrderedMatroid OrderedMatroid::uniform(int n, int k) {
  if (n < 0 || n > ElemSet::kMaxGroundSize)
    fail(Errc::GroundTooLarge,
         "ground size " + std::to_string(n) + " outside 0.." +
             std::to_string(ElemSet::kMaxGroundSize));
  if (k < 0 || k > n)
    fail(Errc::InvalidRank, "uniform matroid needs 0 <= k <= n, got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  std::vector<ElemSet> bases;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < top; ++mask)
    if (std::popcount(mask) == k) bases.push_back(ElemSet::from_bits(mask));
  return from_bases(n, std::move(bases));
}

OrderedMatroid OrderedMatroid::from_graph(
    int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0)
    fail(Errc::ParseError, "negative vertex count");
  if (edges.size() > ElemSet::kMaxGroundSize)
    fail(Errc::GroundTooLarge,
         "more than " + std::to_string(ElemSet::kMaxGroundSize) + " edges");
  for (const auto& [a, b] : edges)
    if (a < 1 || a > vertex_count || b < 1 || b > vertex_count)
      fail(Errc::InvalidElement,
           "edge endpoint outside 1.." + std::to_string(vertex_count));

  const int n = static_cast<int>(edges.size());
  UnionFind all(vertex_count);
  int rank = 0;
  for (const auto& [a, b] : edges)
    if (all.unite(a - 1, b - 1)) ++rank;

  std::vector<ElemSet> bases;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (std::popcount(mask) != rank) continue;
    UnionFind uf(vertex_count);
    bool forest = true;
    for (int e : ElemSet::from_bits(mask)) {
      const auto& [a, b] = edges[static_cast<std::size_t>(e - 1)];
      if (!uf.unite(a - 1, b - 1)) {
        forest = false;
        break;
      }
    }
    if (forest) bases.push_back(ElemSet::from_bits(mask));
  }
  return from_bases(n, std::move(bases));
}

OrderedMatroid OrderedMatroid::with_order(const GroundOrder& order) const {
  return from_bases(ground_, order, bases_);
}

int OrderedMatroid::basis_index(ElemSet b) const {
  auto it = std::lower_bound(
      bases_.begin(), bases_.end(), b,
      [this](ElemSet x, ElemSet y) { return order_.lex_less(x, y); });
  if (it != bases_.end() && *it == b)
    return static_cast<int>(it - bases_.begin());
  return -1;
}

int OrderedMatroid::subset_rank(ElemSet s) const {
  ElemSet cur;
  for (int e : s)
    if (independent_[cur.with(e).bits()]) cur.add(e);
  return cur.size();
}

OrderedMatroid OrderedMatroid::dual() const {
  std::vector<ElemSet> co;
  co.reserve(bases_.size());
  for (const ElemSet& b : bases_) co.push_back(ground_ - b);
  return from_bases(ground_, order_, std::move(co));
}

OrderedMatroid OrderedMatroid::delete_element(int e) const {
  if (!ground_.contains(e))
    fail(Errc::InvalidElement,
         "element " + std::to_string(e) + " not in the ground set");
  if (coloops_.contains(e))
    fail(Errc::DeleteColoop,
         "element " + std::to_string(e) + " is a coloop; deletion would drop the rank");
  std::vector<ElemSet> kept;
  for (const ElemSet& b : bases_)
    if (!b.contains(e)) kept.push_back(b);
  ElemSet g = ground_.without(e);
  return from_bases(g, order_.restricted(g), std::move(kept));
}

OrderedMatroid OrderedMatroid::contract_element(int e) const {
  if (!ground_.contains(e))
    fail(Errc::InvalidElement,
         "element " + std::to_string(e) + " not in the ground set");
  if (loops_.contains(e))
    fail(Errc::ContractLoop,
         "element " + std::to_string(e) + " is a loop and cannot be contracted");
  std::vector<ElemSet> kept;
  for (const ElemSet& b : bases_)
    if (b.contains(e)) kept.push_back(b.without(e));
  ElemSet g = ground_.without(e);
  return from_bases(g, order_.restricted(g), std::move(kept));
}

ElemSet OrderedMatroid::fundamental_circuit(ElemSet b, int e) const {
  if (!is_basis(b)) fail(Errc::NotABasis, b.to_string() + " is not a basis");
  if (!ground_.contains(e))
    fail(Errc::InvalidElement,
         "element " + std::to_string(e) + " not in the ground set");
  if (b.contains(e))
    fail(Errc::ElementInBasis,
         "element " + std::to_string(e) + " lies in the basis");
  ElemSet be = b.with(e);
  ElemSet circ;
  for (int x : be)
    if (is_basis(be.without(x))) circ.add(x);
  return circ;
}

ElemSet OrderedMatroid::fundamental_cocircuit(ElemSet b, int i) const {
  if (!is_basis(b)) fail(Errc::NotABasis, b.to_string() + " is not a basis");
  if (!b.contains(i))
    fail(Errc::ElementNotInBasis,
         "element " + std::to_string(i) + " is not in the basis");
  ElemSet cocirc;
  const ElemSet without_i = b.without(i);
  for (int x : (ground_ - b).with(i))
    if (is_basis(without_i.with(x))) cocirc.add(x);
  return cocirc;
}

bool OrderedMatroid::has_intersecting_circuits() const {
  for (std::size_t i = 0; i < circuits_.size(); ++i)
    for (std::size_t j = i + 1; j < circuits_.size(); ++j)
      if (circuits_[i].intersects(circuits_[j])) return true;
  return false;
}

bool OrderedMatroid::has_u31_minor() const {
  if (n() < 3) return false;
  // A minor is determined by the disjoint split (contract C, delete D,
  // keep S); the operation order does not matter. The minor on S is U(3,1)
  // iff in M/C every singleton of S is independent and every pair is
  // dependent.
  std::vector<int> elems = ground_.elements();
  const int nn = static_cast<int>(elems.size());
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b)
      for (int c = b + 1; c < nn; ++c) {
        ElemSet s = ElemSet::of({elems[static_cast<std::size_t>(a)],
                                 elems[static_cast<std::size_t>(b)],
                                 elems[static_cast<std::size_t>(c)]});
        ElemSet rest = ground_ - s;
        std::vector<int> rest_elems = rest.elements();
        const std::uint64_t top = std::uint64_t{1} << rest_elems.size();
        for (std::uint64_t cm = 0; cm < top; ++cm) {
          ElemSet contract;
          for (std::size_t t = 0; t < rest_elems.size(); ++t)
            if ((cm >> t) & 1) contract.add(rest_elems[t]);
          // Greedy maximal independent subset of the contracted part.
          ElemSet base;
          for (int e : contract)
            if (independent_[base.with(e).bits()]) base.add(e);
          bool ok = true;
          for (int e : s)
            if (!independent_[base.with(e).bits()]) {
              ok = false;
              break;
            }
          if (!ok) continue;
          std::vector<int> se = s.elements();
          for (std::size_t i = 0; i < se.size() && ok; ++i)
            for (std::size_t j = i + 1; j < se.size() && ok; ++j)
              if (independent_[base.with(se[i]).with(se[j]).bits()]) ok = false;
          if (ok) return true;
        }
      }
  return false;
}

}  // namespace eac
