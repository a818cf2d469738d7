#include "support/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <utility>

namespace eac::corpus {
namespace {

// Identical ground size and basis list means identical ordered matroid.
using Signature = std::pair<int, std::vector<std::uint64_t>>;

Signature signature(const OrderedMatroid& m) {
  std::vector<std::uint64_t> bits;
  bits.reserve(m.bases().size());
  for (const ElemSet& b : m.bases()) bits.push_back(b.bits());
  return {m.n(), std::move(bits)};
}

void dedup(std::vector<OrderedMatroid>& ms) {
  std::set<Signature> seen;
  std::vector<OrderedMatroid> kept;
  for (OrderedMatroid& m : ms)
    if (seen.insert(signature(m)).second) kept.push_back(std::move(m));
  ms = std::move(kept);
}

}  // namespace

OrderedMatroid running_example() {
  std::vector<ElemSet> bases;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b)
      for (int c = b + 1; c <= 5; ++c) {
        ElemSet s = ElemSet::of({a, b, c});
        if (s == ElemSet::of({1, 2, 3}) || s == ElemSet::of({1, 4, 5}))
          continue;
        bases.push_back(s);
      }
  return OrderedMatroid::from_bases(5, std::move(bases));
}

std::vector<OrderedMatroid> uniforms(int max_n) {
  std::vector<OrderedMatroid> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) out.push_back(OrderedMatroid::uniform(n, k));
  return out;
}

std::vector<OrderedMatroid> graphic_small() {
  std::vector<OrderedMatroid> out;
  for (int v = 1; v <= 4; ++v) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 1; a <= v; ++a)
      for (int b = a; b <= v; ++b) slots.emplace_back(a, b);

    auto connected = [v, &slots](const std::vector<int>& pick) {
      std::vector<int> parent(static_cast<std::size_t>(v) + 1);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x
                   ? x
                   : parent[static_cast<std::size_t>(x)] =
                         find(parent[static_cast<std::size_t>(x)]);
      };
      for (int s : pick)
        parent[static_cast<std::size_t>(find(
            slots[static_cast<std::size_t>(s)].first))] =
            find(slots[static_cast<std::size_t>(s)].second);
      for (int a = 2; a <= v; ++a)
        if (find(a) != find(1)) return false;
      return true;
    };

    // Multisets of up to six edge slots, as nondecreasing index sequences.
    std::vector<int> pick;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
      if (!pick.empty() && connected(pick)) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(pick.size());
        for (int s : pick) edges.push_back(slots[static_cast<std::size_t>(s)]);
        out.push_back(OrderedMatroid::from_graph(v, edges));
      }
      if (pick.size() == 6) return;
      for (std::size_t s = start; s < slots.size(); ++s) {
        pick.push_back(static_cast<int>(s));
        extend(s);
        pick.pop_back();
      }
    };
    extend(0);
  }
  dedup(out);
  return out;
}

std::vector<OrderedMatroid> random_linear(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OrderedMatroid> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int dim = 2 + static_cast<int>(rng() % 3);
    std::vector<std::uint32_t> cols(static_cast<std::size_t>(n));
    bool any = false;
    for (std::uint32_t& c : cols) {
      c = static_cast<std::uint32_t>(rng() & ((1u << dim) - 1));
      any = any || c != 0;
    }
    if (!any) continue;

    // Gaussian elimination by leading bit.
    auto independent = [&cols, dim](ElemSet s) {
      std::uint32_t rows[5] = {0, 0, 0, 0, 0};
      for (int e : s) {
        std::uint32_t v = cols[static_cast<std::size_t>(e - 1)];
        bool claimed = false;
        for (int bit = dim - 1; bit >= 0; --bit) {
          if (!((v >> bit) & 1u)) continue;
          if (!rows[bit]) {
            rows[bit] = v;
            claimed = true;
            break;
          }
          v ^= rows[bit];
        }
        if (!claimed) return false;  // zero column, or reduced to zero
      }
      return true;
    };

    ElemSet greedy;
    for (int e = 1; e <= n; ++e)
      if (independent(greedy.with(e))) greedy.add(e);
    const int rank = greedy.size();

    std::vector<ElemSet> bases;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElemSet s = ElemSet::from_bits(mask);
      if (s.size() == rank && independent(s)) bases.push_back(s);
    }
    out.push_back(OrderedMatroid::from_bases(n, std::move(bases)));
  }
  return out;
}

std::vector<OrderedMatroid> quick() {
  std::vector<OrderedMatroid> out;
  out.push_back(running_example());
  out.push_back(OrderedMatroid::uniform(3, 1));  // three parallel elements
  out.push_back(OrderedMatroid::uniform(3, 2));  // a circle
  out.push_back(OrderedMatroid::uniform(4, 2));
  out.push_back(OrderedMatroid::uniform(3, 3));  // free
  out.push_back(OrderedMatroid::uniform(2, 0));  // loops only
  // loop 3 and coloop 4 alongside the parallel pair {1, 2}
  out.push_back(
      OrderedMatroid::from_bases(4, {ElemSet::of({1, 4}), ElemSet::of({2, 4})}));
  // complete graph on four vertices
  out.push_back(OrderedMatroid::from_graph(
      4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
  // running example plus a bridge: a coloop among intersecting circuits
  out.push_back(OrderedMatroid::from_graph(
      5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {4, 5}}));
  // double edge plus two self-loops: disjoint circuits {1,2}, {3}, {4}
  out.push_back(
      OrderedMatroid::from_graph(2, {{1, 2}, {1, 2}, {1, 1}, {2, 2}}));
  return out;
}

std::vector<OrderedMatroid> full() {
  std::vector<OrderedMatroid> out;
  out.push_back(running_example());
  for (auto& family :
       {quick(), uniforms(6), graphic_small(), random_linear(50, 0x5eac0de5)})
    for (const OrderedMatroid& m : family) out.push_back(m);
  dedup(out);
  return out;
}

}  // namespace eac::corpus
