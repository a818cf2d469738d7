// Timing comparison between the OpenMP-parallel bulk shelling kernel and the
// serial one, and between the fast ridge-based shelling check and the
// interval-definition reference checker. Prints one line per configuration.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "eac/bulk.hpp"
#include "eac/complexes.hpp"
#include "eac/matroid.hpp"
#include "reference/reference.hpp"

namespace {

using namespace eac;
using Clock = std::chrono::steady_clock;

std::vector<std::vector<int>> shuffled_orders(std::size_t count,
                                              std::size_t facets,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(facets);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> orders;
  orders.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    orders.push_back(order);
  }
  return orders;
}

template <typename Body>
double time_seconds(Body&& body) {
  const auto start = Clock::now();
  body();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_matroid(const char* name, const OrderedMatroid& m,
                   std::size_t order_count, std::uint64_t seed) {
  const SimplicialComplex act = external_activity_complex(m);
  const auto orders = shuffled_orders(order_count, act.facets.size(), seed);

  bulk::OrdersCheckResult serial, parallel;
  const double t_serial =
      time_seconds([&] { serial = bulk::check_orders_serial(act, orders); });
  const double t_parallel = time_seconds(
      [&] { parallel = bulk::check_orders_parallel(act, orders); });
  if (!(serial == parallel)) {
    std::fprintf(stderr, "%s: serial and parallel kernels disagree\n", name);
    std::exit(1);
  }

  // Single-order comparison: fast ridge check vs interval reference.
  const auto& order = orders.front();
  double t_fast = 0, t_interval = 0;
  bool fast_ok = false, interval_ok = false;
  t_fast += time_seconds([&] {
    for (std::size_t i = 0; i < orders.size(); ++i)
      fast_ok = shelling_check(act, orders[i]).is_shelling;
  });
  t_interval += time_seconds([&] {
    interval_ok = reference::shelling_check_interval(act, order).is_shelling;
  });
  (void)fast_ok;
  (void)interval_ok;

  std::printf(
      "%-24s facets=%3zu orders=%4zu | bulk serial %8.3fms, parallel "
      "%8.3fms (x%.2f) | per-order fast %8.3fus, interval reference "
      "%8.3fus\n",
      name, act.facets.size(), orders.size(), t_serial * 1e3,
      t_parallel * 1e3, t_serial / std::max(t_parallel, 1e-9),
      t_fast * 1e6 / static_cast<double>(orders.size()), t_interval * 1e6);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t order_count = 400;
  std::uint64_t seed = 0xbe9c5eedULL;
  if (argc > 1) order_count = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) seed = std::strtoull(argv[2], nullptr, 10);

  bench_matroid("five-element example",
                OrderedMatroid::from_graph(
                    4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}),
                order_count, seed);
  bench_matroid("uniform U(7,3)", OrderedMatroid::uniform(7, 3), order_count,
                seed);
  bench_matroid("uniform U(8,4)", OrderedMatroid::uniform(8, 4), order_count,
                seed);
  bench_matroid("complete graph K4",
                OrderedMatroid::from_graph(
                    4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
                order_count, seed);
  return 0;
}
