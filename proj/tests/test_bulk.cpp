#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "eac/active_orders.hpp"
#include "eac/bulk.hpp"
#include "eac/complexes.hpp"
#include "eac/matroid.hpp"
#include "eac/worked_example.hpp"
#include "support/corpus.hpp"

using namespace eac;

namespace {

std::vector<std::vector<int>> shuffled_orders(std::size_t count, int facets,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> ord(static_cast<std::size_t>(facets));
  std::iota(ord.begin(), ord.end(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(ord.begin(), ord.end(), rng);
    out.push_back(ord);
  }
  return out;
}

}  // namespace

TEST_CASE("serial and parallel bulk checks return identical results") {
  for (const OrderedMatroid& m : corpus::quick()) {
    CAPTURE(m.n());
    for (const SimplicialComplex& k :
         {independence_complex(m), external_activity_complex(m)}) {
      auto orders =
          shuffled_orders(40, static_cast<int>(k.facets.size()), 0xbee5);
      bulk::OrdersCheckResult serial = bulk::check_orders_serial(k, orders);
      bulk::OrdersCheckResult parallel =
          bulk::check_orders_parallel(k, orders);
      CHECK(serial == parallel);
      CHECK(serial.orders_checked == 40);

      // Repeat runs are deterministic.
      CHECK(bulk::check_orders_parallel(k, orders) == parallel);
    }
  }
}

TEST_CASE("bulk verdicts match the single-order checker") {
  OrderedMatroid m = corpus::running_example();
  SimplicialComplex act = external_activity_complex(m);
  auto orders = shuffled_orders(60, static_cast<int>(act.facets.size()),
                                0xdead01);
  bulk::OrdersCheckResult result = bulk::check_orders(act, orders);
  CHECK(result.orders_checked == 60);

  int first_bad = -1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    ShellingReport rep = shelling_check(act, orders[i]);
    if (!rep.is_shelling && first_bad < 0) {
      first_bad = static_cast<int>(i);
      CHECK_FALSE(result.all_shellings);
      CHECK(result.first_failure_order == first_bad);
      CHECK(result.failure_index == rep.failure_index);
    }
  }
  if (first_bad < 0) CHECK(result.all_shellings);
}

TEST_CASE("the reported failure is the earliest order in list position") {
  OrderedMatroid m = corpus::running_example();
  SimplicialComplex act = external_activity_complex(m);
  SimplicialComplex in = independence_complex(m);

  std::vector<int> good(act.facets.size());
  std::iota(good.begin(), good.end(), 0);
  std::vector<int> bad_act =
      worked_example::as_indices(m, worked_example::control_order_int());
  std::vector<int> bad_in =
      worked_example::as_indices(m, worked_example::control_order_ext());

  using OrderList = std::vector<std::vector<int>>;

  SUBCASE("single failing order") {
    bulk::OrdersCheckResult r =
        bulk::check_orders(act, OrderList{good, bad_act, good});
    CHECK_FALSE(r.all_shellings);
    CHECK(r.orders_checked == 3);
    CHECK(r.first_failure_order == 1);
    CHECK(r.failure_index == 5);
  }

  SUBCASE("several failing orders report the first") {
    bulk::OrdersCheckResult r = bulk::check_orders(
        act, OrderList{good, bad_act, bad_act, good, bad_act});
    CHECK(r.first_failure_order == 1);
    bulk::OrdersCheckResult r2 =
        bulk::check_orders(in, OrderList{bad_in, bad_in});
    CHECK(r2.first_failure_order == 0);
    CHECK(r2.failure_index == 1);
  }

  SUBCASE("all good") {
    bulk::OrdersCheckResult r = bulk::check_orders(act, OrderList{good, good});
    CHECK(r.all_shellings);
    CHECK(r.first_failure_order == -1);
    CHECK(r.failure_index == -1);
  }

  SUBCASE("empty order list") {
    bulk::OrdersCheckResult r = bulk::check_orders(act, OrderList{});
    CHECK(r.all_shellings);
    CHECK(r.orders_checked == 0);
  }
}

TEST_CASE("bulk checks compose with sampled linear extensions") {
  for (const OrderedMatroid& m : corpus::quick()) {
    CAPTURE(m.n());
    SimplicialComplex act = external_activity_complex(m);
    BasisPoset poset(m, OrderKind::ExtInt);
    auto orders = linear_extensions(poset, 30, 0x5eed);
    bulk::OrdersCheckResult r = bulk::check_orders(act, orders);
    CHECK(r.orders_checked == orders.size());
    CHECK(r.all_shellings);
  }
}
