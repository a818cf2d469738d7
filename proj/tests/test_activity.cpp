#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "eac/activity.hpp"
#include "eac/errors.hpp"
#include "eac/matroid.hpp"
#include "eac/worked_example.hpp"
#include "support/corpus.hpp"

using namespace eac;

namespace {

std::vector<GroundOrder> shuffled_orders(const OrderedMatroid& m, int count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> seq = m.order().sequence();
  std::vector<GroundOrder> orders;
  for (int i = 0; i < count; ++i) {
    std::shuffle(seq.begin(), seq.end(), rng);
    orders.push_back(GroundOrder::of_sequence(seq));
  }
  return orders;
}

}  // namespace

TEST_CASE("running example: per-basis activity table") {
  OrderedMatroid m = corpus::running_example();
  std::vector<BasisActivity> table = activity_table(m);
  const auto& golden = worked_example::golden_activities();
  REQUIRE(table.size() == golden.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CAPTURE(table[i].basis.to_string());
    CHECK(table[i].basis == golden[i].basis);
    CHECK(table[i].ea == golden[i].ea);
    CHECK(table[i].ep == golden[i].ep);
    CHECK(table[i].ia == golden[i].ia);
    CHECK(table[i].ip == golden[i].ip);
  }

  SUBCASE("spot values") {
    BasisActivity act = basis_activity(m, ElemSet::of({2, 3, 5}));
    CHECK(act.ea == ElemSet::of({1}));
    CHECK(act.ep == ElemSet::of({4}));
    CHECK(act.ia == ElemSet::of({}));
    CHECK(act.ip == ElemSet::of({2, 3, 5}));
    CHECK_THROWS_AS(basis_activity(m, ElemSet::of({1, 2, 3})), Error);
  }
}

TEST_CASE("activity partitions the ground set per basis") {
  for (const OrderedMatroid& m : corpus::quick()) {
    for (const BasisActivity& act : activity_table(m)) {
      CHECK((act.ia | act.ip) == act.basis);
      CHECK((act.ea | act.ep) == m.ground() - act.basis);
      CHECK((act.ia & act.ip).empty());
      CHECK((act.ea & act.ep).empty());
      // Loops are always externally active, coloops internally active.
      CHECK(m.loops().subset_of(act.ea));
      CHECK(m.coloops().subset_of(act.ia));
    }
  }
}

TEST_CASE("internal activity is external activity in the dual") {
  for (const OrderedMatroid& m : corpus::quick()) {
    OrderedMatroid d = m.dual();
    for (const ElemSet& b : m.bases()) {
      BasisActivity primal = basis_activity(m, b);
      BasisActivity co = basis_activity(d, m.ground() - b);
      CHECK(primal.ia == co.ea);
      CHECK(primal.ip == co.ep);
      CHECK(primal.ea == co.ia);
      CHECK(primal.ep == co.ip);
    }
  }
}

TEST_CASE("running example: Tutte polynomial") {
  OrderedMatroid m = corpus::running_example();
  TuttePolynomial t = tutte_polynomial(m);
  CHECK(t == worked_example::golden_tutte());

  // x^3 + 2x^2 + x + 2xy + y + y^2
  CHECK(t.coeff(3, 0) == 1);
  CHECK(t.coeff(2, 0) == 2);
  CHECK(t.coeff(1, 0) == 1);
  CHECK(t.coeff(1, 1) == 2);
  CHECK(t.coeff(0, 1) == 1);
  CHECK(t.coeff(0, 2) == 1);
  CHECK(t.coeff(2, 2) == 0);

  CHECK(t.eval(1, 1) == 8);   // bases
  CHECK(t.eval(2, 1) == 24);  // independent sets
  CHECK(t.eval(1, 2) == 14);  // spanning sets
  CHECK(t.eval(2, 2) == 32);  // all subsets

  // Marginal in x: coefficients of T(x, 1) by ascending power.
  CHECK(t.x_marginal() == std::vector<long long>{2, 3, 2, 1});
}

TEST_CASE("Tutte evaluations count independent and spanning sets") {
  for (const OrderedMatroid& m : corpus::quick()) {
    TuttePolynomial t = tutte_polynomial(m);
    long long independent = 0, spanning = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.n()); ++mask) {
      ElemSet s = ElemSet::from_bits(mask);
      if (m.is_independent(s)) ++independent;
      if (m.subset_rank(s) == m.rank()) ++spanning;
    }
    CHECK(t.eval(1, 1) == static_cast<long long>(m.bases().size()));
    CHECK(t.eval(2, 1) == independent);
    CHECK(t.eval(1, 2) == spanning);
    CHECK(t.eval(2, 2) == (std::int64_t{1} << m.n()));
  }
}

TEST_CASE("the Tutte polynomial does not depend on the ground order") {
  for (const OrderedMatroid& m : corpus::quick()) {
    TuttePolynomial t = tutte_polynomial(m);
    for (const GroundOrder& ord : shuffled_orders(m, 6, 0xabcd1234)) {
      CAPTURE(ord.sequence());
      CHECK(tutte_polynomial(m.with_order(ord)) == t);
    }
  }
}

TEST_CASE("activity intervals partition the subsets and independent sets") {
  for (const OrderedMatroid& m : corpus::quick()) {
    CAPTURE(m.n());
    CrapoReport report = crapo_partition_check(m);
    CHECK(report.ok);
    CHECK_FALSE(report.witness.has_value());
  }
  CrapoReport r = crapo_partition_check(corpus::running_example());
  CHECK(r.ok);
}

TEST_CASE("always-active and always-passive elements") {
  OrderedMatroid m = corpus::running_example();
  AbsoluteElements abs = absolute_elements(m);
  CHECK(abs.aea == worked_example::golden_aea());
  CHECK(abs.aep == worked_example::golden_aep());

  SUBCASE("coloops are in neither class, loops are always active") {
    OrderedMatroid lc = OrderedMatroid::from_bases(
        4, {ElemSet::of({1, 4}), ElemSet::of({2, 4})});
    AbsoluteElements a = absolute_elements(lc);
    CHECK_FALSE(a.aea.contains(4));
    CHECK_FALSE(a.aep.contains(4));
    CHECK(a.aea == ElemSet::of({1, 3}));
    CHECK(a.aep == ElemSet::of({2}));
  }

  SUBCASE("definition check across the quick corpus") {
    for (const OrderedMatroid& q : corpus::quick()) {
      AbsoluteElements a = absolute_elements(q);
      CHECK((a.aea & a.aep).empty());
      CHECK((a.aea | a.aep).subset_of(q.ground() - q.coloops()));
      CHECK(q.loops().subset_of(a.aea));
      for (int e : q.ground() - q.coloops()) {
        bool always_active = true, always_passive = true;
        for (const BasisActivity& act : activity_table(q)) {
          if (act.basis.contains(e)) continue;
          if (act.ea.contains(e)) always_passive = false;
          if (act.ep.contains(e)) always_active = false;
        }
        CHECK(a.aea.contains(e) == always_active);
        CHECK(a.aep.contains(e) == always_passive);
      }
    }
  }
}
