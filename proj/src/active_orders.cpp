#include "eac/active_orders.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace eac {

const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::Ext: return "ext";
    case OrderKind::Int: return "int";
    case OrderKind::ExtInt: return "extint";
  }
  return "unknown";
}

bool leq_ext(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  return a.subset_of(b | basis_activity(m, b).ea);
}

bool leq_ext_union(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  return (a | basis_activity(m, a).ea)
      .subset_of(b | basis_activity(m, b).ea);
}

bool leq_ext_lexmax(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  ElemSet pool = a | b;
  ElemSet best;
  bool found = false;
  for (const ElemSet& c : m.bases()) {
    if (!c.subset_of(pool)) continue;
    if (!found || m.order().lex_less(best, c)) {
      best = c;
      found = true;
    }
  }
  return found && best == b;
}

bool leq_int(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  return basis_activity(m, a).ip.subset_of(b);
}

bool leq_int_reduced(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  return basis_activity(m, a).ip.subset_of(basis_activity(m, b).ip);
}

bool leq_int_lexmin(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  ElemSet core = a & b;
  ElemSet best;
  bool found = false;
  for (const ElemSet& c : m.bases()) {
    if (!core.subset_of(c)) continue;
    if (!found || m.order().lex_less(c, best)) {
      best = c;
      found = true;
    }
  }
  return found && best == a;
}

bool leq_extint(const OrderedMatroid& m, ElemSet a, ElemSet b) {
  return !basis_activity(m, a).ip.intersects(basis_activity(m, b).ep);
}

BasisPoset::BasisPoset(const OrderedMatroid& m, OrderKind kind)
    : kind_(kind), bases_(m.bases()) {
  const std::size_t k = bases_.size();
  std::vector<BasisActivity> table = activity_table(m);
  leq_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      bool le = false;
      switch (kind) {
        case OrderKind::Ext:
          le = bases_[i].subset_of(bases_[j] | table[j].ea);
          break;
        case OrderKind::Int:
          le = table[i].ip.subset_of(bases_[j]);
          break;
        case OrderKind::ExtInt:
          le = !table[i].ip.intersects(table[j].ep);
          break;
      }
      leq_[i * k + j] = le ? 1 : 0;
    }
  }

  for (std::size_t i = 0; i < k; ++i)
    if (!leq_[i * k + i])
      fail(Errc::NotAPartialOrder,
           "relation is not reflexive at " + bases_[i].to_string());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && leq_[i * k + j] && leq_[j * k + i])
        fail(Errc::NotAPartialOrder,
             "antisymmetry fails between " + bases_[i].to_string() + " and " +
                 bases_[j].to_string());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!leq_[i * k + j]) continue;
      for (std::size_t l = 0; l < k; ++l)
        if (leq_[j * k + l] && !leq_[i * k + l])
          fail(Errc::NotAPartialOrder,
               "transitivity fails through " + bases_[j].to_string());
    }
}

std::vector<std::pair<int, int>> hasse_diagram(const BasisPoset& p) {
  const int k = p.size();
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!p.strictly_less(i, j)) continue;
      bool cover = true;
      for (int mid = 0; mid < k && cover; ++mid)
        if (p.strictly_less(i, mid) && p.strictly_less(mid, j)) cover = false;
      if (cover) covers.emplace_back(i, j);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool is_linear_extension(const BasisPoset& p, std::span<const int> ord) {
  const int k = p.size();
  if (static_cast<int>(ord.size()) != k)
    fail(Errc::WrongBasisSet, "order has " + std::to_string(ord.size()) +
                                  " entries, poset has " + std::to_string(k));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  for (int idx : ord) {
    if (idx < 0 || idx >= k || seen[static_cast<std::size_t>(idx)])
      fail(Errc::WrongBasisSet,
           "order is not a permutation of the poset's bases");
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  for (std::size_t a = 0; a < ord.size(); ++a)
    for (std::size_t b = a + 1; b < ord.size(); ++b)
      if (p.strictly_less(ord[b], ord[a])) return false;
  return true;
}

namespace {

// Shared backtracking state for extension enumeration.
struct Enumerator {
  const BasisPoset& p;
  std::size_t cap;
  std::vector<std::vector<int>>& out;
  std::vector<int> prefix;
  std::vector<int> missing_preds;  // unplaced predecessors per element
  std::vector<char> placed;
  bool overflow = false;

  Enumerator(const BasisPoset& poset, std::size_t cap_limit,
             std::vector<std::vector<int>>& sink)
      : p(poset), cap(cap_limit), out(sink) {
    const int k = p.size();
    missing_preds.assign(static_cast<std::size_t>(k), 0);
    placed.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (p.strictly_less(j, i)) ++missing_preds[static_cast<std::size_t>(i)];
    prefix.reserve(static_cast<std::size_t>(k));
  }

  void place(int v) {
    placed[static_cast<std::size_t>(v)] = 1;
    prefix.push_back(v);
    for (int w = 0; w < p.size(); ++w)
      if (p.strictly_less(v, w)) --missing_preds[static_cast<std::size_t>(w)];
  }

  void unplace(int v) {
    placed[static_cast<std::size_t>(v)] = 0;
    prefix.pop_back();
    for (int w = 0; w < p.size(); ++w)
      if (p.strictly_less(v, w)) ++missing_preds[static_cast<std::size_t>(w)];
  }

  void run() {
    if (overflow) return;
    if (prefix.size() == static_cast<std::size_t>(p.size())) {
      if (out.size() == cap) {
        overflow = true;
        return;
      }
      out.push_back(prefix);
      return;
    }
    for (int v = 0; v < p.size(); ++v) {
      if (placed[static_cast<std::size_t>(v)] ||
          missing_preds[static_cast<std::size_t>(v)] != 0)
        continue;
      place(v);
      run();
      unplace(v);
      if (overflow) return;
    }
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> enumerate_linear_extensions(
    const BasisPoset& p, std::size_t cap) {
  std::vector<std::vector<int>> out;
  Enumerator en(p, cap, out);
  en.run();
  if (en.overflow) return std::nullopt;
  return out;
}

std::vector<std::vector<int>> sample_linear_extensions(const BasisPoset& p,
                                                       std::size_t count,
                                                       std::uint64_t seed) {
  const int k = p.size();
  std::mt19937_64 rng(seed);
  std::set<std::vector<int>> distinct;
  // Random topological sorts; each draw picks uniformly among the currently
  // available elements. Bounded attempts keep this terminating even when the
  // poset has fewer extensions than requested.
  const std::size_t max_attempts = count * 100 + 100;
  for (std::size_t attempt = 0;
       attempt < max_attempts && distinct.size() < count; ++attempt) {
    std::vector<int> missing(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (p.strictly_less(j, i)) ++missing[static_cast<std::size_t>(i)];
    std::vector<int> avail;
    for (int i = 0; i < k; ++i)
      if (missing[static_cast<std::size_t>(i)] == 0) avail.push_back(i);
    std::vector<int> ord;
    ord.reserve(static_cast<std::size_t>(k));
    while (!avail.empty()) {
      std::size_t pick = static_cast<std::size_t>(
          rng() % static_cast<std::uint64_t>(avail.size()));
      int v = avail[pick];
      avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pick));
      ord.push_back(v);
      for (int w = 0; w < k; ++w)
        if (p.strictly_less(v, w) &&
            --missing[static_cast<std::size_t>(w)] == 0)
          avail.push_back(w);
    }
    distinct.insert(std::move(ord));
  }
  return std::vector<std::vector<int>>(distinct.begin(), distinct.end());
}

std::vector<std::vector<int>> linear_extensions(const BasisPoset& p,
                                                std::size_t limit,
                                                std::uint64_t seed) {
  if (auto all = enumerate_linear_extensions(p, limit)) return *all;
  return sample_linear_extensions(p, limit, seed);
}

}  // namespace eac
