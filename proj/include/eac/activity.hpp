#pragma once

#include <optional>
#include <vector>

#include "eac/matroid.hpp"

namespace eac {

// Activity data of one basis. For e outside b, e is externally active iff it
// is the order-minimum of the fundamental circuit of (b, e); internally
// active elements are defined dually via fundamental cocircuits. Loops are
// externally active for every basis, coloops internally active for every
// basis.
struct BasisActivity {
  ElemSet basis;
  ElemSet ea;  // externally active:   e not in b, e = min circuit(b, e)
  ElemSet ep;  // externally passive:  the rest of E - b
  ElemSet ia;  // internally active:   i in b, i = min cocircuit(b, i)
  ElemSet ip;  // internally passive:  the rest of b
};

// Activity of a single basis (NotABasis otherwise).
BasisActivity basis_activity(const OrderedMatroid& m, ElemSet b);

// Activities of all bases, in the canonical (lex) basis order.
std::vector<BasisActivity> activity_table(const OrderedMatroid& m);

// Tutte polynomial, stored sparsely as terms c * x^i * y^j with c > 0.
// Computed as the activity generating function over bases; the result is
// independent of the ground order.
class TuttePolynomial {
 public:
  struct Term {
    int i, j;
    long long c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit TuttePolynomial(std::vector<Term> terms);

  // Terms sorted by descending i, then ascending j.
  const std::vector<Term>& terms() const { return terms_; }

  long long coeff(int i, int j) const;
  long long eval(long long x, long long y) const;

  // Coefficients of T(x, 1) as a dense vector indexed by the power of x.
  std::vector<long long> x_marginal() const;

  friend bool operator==(const TuttePolynomial&, const TuttePolynomial&) =
      default;

 private:
  std::vector<Term> terms_;
};

TuttePolynomial tutte_polynomial(const OrderedMatroid& m);

// Exhaustive check that the intervals [b - IA(b), b + EA(b)] over all bases b
// partition the whole subset lattice 2^E, and that the intervals
// [b - IA(b), b] partition the independent sets. Exponential in n; intended
// for small ground sets.
struct CrapoWitness {
  ElemSet subset;
  int cover_count = 0;
  bool independent_part = false;  // witness violates the second partition
};
struct CrapoReport {
  bool ok = true;
  std::optional<CrapoWitness> witness;
};
CrapoReport crapo_partition_check(const OrderedMatroid& m);

// Absolutely active/passive elements. An element is absolutely externally
// active (passive) if it is externally active (passive) for every basis not
// containing it. Coloops are reported in neither set; loops are absolutely
// externally active.
struct AbsoluteElements {
  ElemSet aea;
  ElemSet aep;
};
AbsoluteElements absolute_elements(const OrderedMatroid& m);

}  // namespace eac
