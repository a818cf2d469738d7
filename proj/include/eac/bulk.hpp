#pragma once

// Bulk verification kernels: check many facet orders against one complex.
// This is the hot loop when sweeping thousands of sampled linear extensions,
// so an OpenMP variant is provided next to the serial one. Both check every
// order and report the first failure by position, so their results are
// identical and deterministic.

#include <cstddef>
#include <span>
#include <vector>

#include "eac/complexes.hpp"

namespace eac::bulk {

struct OrdersCheckResult {
  std::size_t orders_checked = 0;
  bool all_shellings = true;
  std::ptrdiff_t first_failure_order = -1;  // index into the orders list
  int failure_index = -1;                   // failing step inside that order

  friend bool operator==(const OrdersCheckResult&,
                         const OrdersCheckResult&) = default;
};

OrdersCheckResult check_orders_serial(
    const SimplicialComplex& k, std::span<const std::vector<int>> orders);

// Same contract, parallelized over orders with OpenMP when available
// (falls back to the serial loop otherwise).
OrdersCheckResult check_orders_parallel(
    const SimplicialComplex& k, std::span<const std::vector<int>> orders);

inline OrdersCheckResult check_orders(const SimplicialComplex& k,
                                      std::span<const std::vector<int>> orders) {
  return check_orders_parallel(k, orders);
}

}  // namespace eac::bulk
