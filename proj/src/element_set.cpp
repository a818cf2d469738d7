#include "eac/element_set.hpp"

#include <algorithm>

namespace eac {

GroundOrder GroundOrder::natural(ElemSet ground) {
  GroundOrder o;
  o.ground_ = ground;
  o.sequence_ = ground.elements();
  o.key_.assign(static_cast<std::size_t>(ground.max_id()) + 1, -1);
  for (std::size_t pos = 0; pos < o.sequence_.size(); ++pos)
    o.key_[static_cast<std::size_t>(o.sequence_[pos])] =
        static_cast<int>(pos);
  return o;
}

GroundOrder GroundOrder::of_sequence(const std::vector<int>& elems) {
  ElemSet ground;
  for (int e : elems) {
    if (e < 1 || e > ElemSet::kMaxGroundSize)
      fail(Errc::InvalidOrder,
           "order mentions element " + std::to_string(e) + " outside 1.." +
               std::to_string(ElemSet::kMaxGroundSize));
    if (ground.contains(e))
      fail(Errc::InvalidOrder,
           "order repeats element " + std::to_string(e));
    ground.add(e);
  }
  GroundOrder o;
  o.ground_ = ground;
  o.sequence_ = elems;
  o.key_.assign(static_cast<std::size_t>(ground.max_id()) + 1, -1);
  for (std::size_t pos = 0; pos < elems.size(); ++pos)
    o.key_[static_cast<std::size_t>(elems[pos])] = static_cast<int>(pos);
  return o;
}

int GroundOrder::min(ElemSet s) const {
  int best = 0;
  int best_key = INT32_MAX;
  for (int e : s) {
    int k = key(e);
    if (k < best_key) {
      best_key = k;
      best = e;
    }
  }
  return best;
}

int GroundOrder::max(ElemSet s) const {
  int best = 0;
  int best_key = -1;
  for (int e : s) {
    int k = key(e);
    if (k > best_key) {
      best_key = k;
      best = e;
    }
  }
  return best;
}

bool GroundOrder::lex_less(ElemSet a, ElemSet b) const {
  ElemSet diff = a ^ b;
  if (diff.empty()) return false;
  int m = min(diff);
  // Elements ordered below m are common to both sides, so the sorted
  // sequences share a prefix and the side containing m continues with the
  // smaller entry -- unless the other side is exhausted there, in which case
  // that side is a proper prefix and sorts first.
  auto runs_past = [this, m](ElemSet s) {
    for (int x : s)
      if (key(x) > key(m)) return true;
    return false;
  };
  if (a.contains(m)) return runs_past(b);
  return !runs_past(a);
}

GroundOrder GroundOrder::restricted(ElemSet sub) const {
  std::vector<int> elems;
  elems.reserve(static_cast<std::size_t>(sub.size()));
  for (int e : sequence_)
    if (sub.contains(e)) elems.push_back(e);
  return of_sequence(elems);
}

}  // namespace eac
