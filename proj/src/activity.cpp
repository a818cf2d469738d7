#include "eac/activity.hpp"

#include <algorithm>
#include <map>

namespace eac {

BasisActivity basis_activity(const OrderedMatroid& m, ElemSet b) {
  if (!m.is_basis(b)) fail(Errc::NotABasis, b.to_string() + " is not a basis");
  BasisActivity act;
  act.basis = b;
  for (int e : m.ground() - b) {
    ElemSet circ = m.fundamental_circuit(b, e);
    if (m.order().min(circ) == e)
      act.ea.add(e);
    else
      act.ep.add(e);
  }
  for (int i : b) {
    ElemSet cocirc = m.fundamental_cocircuit(b, i);
    if (m.order().min(cocirc) == i)
      act.ia.add(i);
    else
      act.ip.add(i);
  }
  return act;
}

std::vector<BasisActivity> activity_table(const OrderedMatroid& m) {
  std::vector<BasisActivity> table;
  table.reserve(m.bases().size());
  for (const ElemSet& b : m.bases()) table.push_back(basis_activity(m, b));
  return table;
}

TuttePolynomial::TuttePolynomial(std::vector<Term> terms)
    : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.i != b.i) return a.i > b.i;
    return a.j < b.j;
  });
}

long long TuttePolynomial::coeff(int i, int j) const {
  for (const Term& t : terms_)
    if (t.i == i && t.j == j) return t.c;
  return 0;
}

long long TuttePolynomial::eval(long long x, long long y) const {
  long long total = 0;
  for (const Term& t : terms_) {
    long long v = t.c;
    for (int p = 0; p < t.i; ++p) v *= x;
    for (int p = 0; p < t.j; ++p) v *= y;
    total += v;
  }
  return total;
}

std::vector<long long> TuttePolynomial::x_marginal() const {
  int deg = 0;
  for (const Term& t : terms_) deg = std::max(deg, t.i);
  std::vector<long long> out(static_cast<std::size_t>(deg) + 1, 0);
  for (const Term& t : terms_) out[static_cast<std::size_t>(t.i)] += t.c;
  return out;
}

TuttePolynomial tutte_polynomial(const OrderedMatroid& m) {
  std::map<std::pair<int, int>, long long> counts;
  for (const BasisActivity& act : activity_table(m))
    ++counts[{act.ia.size(), act.ea.size()}];
  std::vector<TuttePolynomial::Term> terms;
  terms.reserve(counts.size());
  for (const auto& [ij, c] : counts) terms.push_back({ij.first, ij.second, c});
  return TuttePolynomial(std::move(terms));
}

CrapoReport crapo_partition_check(const OrderedMatroid& m) {
  struct Interval {
    std::uint64_t lo, hi;
  };
  std::vector<Interval> full, indep;
  for (const BasisActivity& act : activity_table(m)) {
    full.push_back({(act.basis - act.ia).bits(), (act.basis | act.ea).bits()});
    indep.push_back({(act.basis - act.ia).bits(), act.basis.bits()});
  }

  const std::uint64_t ground = m.ground().bits();
  CrapoReport report;
  // Walk subsets of the ground set only. With a contiguous ground set this is
  // every mask below 2^n; sparse grounds (minors) skip foreign bits.
  for (std::uint64_t mask = 0;; mask = (mask - ground) & ground) {
    int cover = 0;
    for (const Interval& iv : full)
      if ((iv.lo & ~mask) == 0 && (mask & ~iv.hi) == 0) ++cover;
    if (cover != 1) {
      report.ok = false;
      report.witness =
          CrapoWitness{ElemSet::from_bits(mask), cover, false};
      return report;
    }
    if (m.is_independent(ElemSet::from_bits(mask))) {
      cover = 0;
      for (const Interval& iv : indep)
        if ((iv.lo & ~mask) == 0 && (mask & ~iv.hi) == 0) ++cover;
      if (cover != 1) {
        report.ok = false;
        report.witness =
            CrapoWitness{ElemSet::from_bits(mask), cover, true};
        return report;
      }
    }
    if (mask == ground) break;
  }
  return report;
}

AbsoluteElements absolute_elements(const OrderedMatroid& m) {
  std::vector<BasisActivity> table = activity_table(m);
  AbsoluteElements abs;
  for (int e : m.ground() - m.coloops()) {
    bool always_active = true, always_passive = true;
    for (const BasisActivity& act : table) {
      if (act.basis.contains(e)) continue;
      if (act.ea.contains(e))
        always_passive = false;
      else
        always_active = false;
    }
    if (always_active) abs.aea.add(e);
    if (always_passive) abs.aep.add(e);
  }
  return abs;
}

}  // namespace eac
