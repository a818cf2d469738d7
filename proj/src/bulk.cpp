#include "eac/bulk.hpp"

#include <cstdint>

namespace eac::bulk {
namespace {

// Failure step of one order, or -1 if it shells. Pure; safe to call from
// parallel workers.
int failure_step(const SimplicialComplex& k, const std::vector<int>& order) {
  ShellingReport report = shelling_check(k, order);
  return report.is_shelling ? -1 : report.failure_index;
}

OrdersCheckResult gather(std::span<const std::vector<int>> orders,
                         const std::vector<int>& step_results) {
  OrdersCheckResult result;
  result.orders_checked = orders.size();
  for (std::size_t t = 0; t < step_results.size(); ++t) {
    if (step_results[t] >= 0) {
      result.all_shellings = false;
      result.first_failure_order = static_cast<std::ptrdiff_t>(t);
      result.failure_index = step_results[t];
      break;
    }
  }
  return result;
}

}  // namespace

OrdersCheckResult check_orders_serial(
    const SimplicialComplex& k, std::span<const std::vector<int>> orders) {
  std::vector<int> steps(orders.size(), -1);
  for (std::size_t t = 0; t < orders.size(); ++t)
    steps[t] = failure_step(k, orders[t]);
  return gather(orders, steps);
}

OrdersCheckResult check_orders_parallel(
    const SimplicialComplex& k, std::span<const std::vector<int>> orders) {
  std::vector<int> steps(orders.size(), -1);
  const std::int64_t count = static_cast<std::int64_t>(orders.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t t = 0; t < count; ++t)
    steps[static_cast<std::size_t>(t)] =
        failure_step(k, orders[static_cast<std::size_t>(t)]);
  return gather(orders, steps);
}

}  // namespace eac::bulk
