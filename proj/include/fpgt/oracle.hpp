#ifndef FPGT_ORACLE_HPP
#define FPGT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpgt/ternary.hpp"
#include "fpgt/window.hpp"

namespace fpgt {

/// Ground truth produced by exhaustive enumeration.
struct OracleResult {
  std::map<Itemset, std::size_t> frequent;
  std::set<Itemset> closed;
};

/// Reference miner: enumerates every non-empty itemset over the
/// snapshot's items and counts containment slot by slot. Supports are
/// derived from raw per-slot membership, never through the vector
/// combine path, so the two routes stay independent.
///
/// Refuses universes larger than `max_items` (2^m enumeration).
inline OracleResult oracle_mine(const WindowSnapshot& snap,
                                std::size_t threshold,
                                std::size_t max_items = 20) {
  const Itemset& items = snap.item_order();
  const std::size_t m = items.size();
  if (m > max_items || max_items > 24)
    throw std::invalid_argument(
        "oracle: refusing enumeration over " + std::to_string(m) +
        " items (bound " + std::to_string(max_items) + ", hard cap 24)");

  // one membership bitmask per occupied slot
  std::vector<std::uint32_t> slots(snap.occupied(), 0);
  for (std::size_t j = 0; j < m; ++j) {
    const TernaryVector& v = snap.item_vector(items[j]);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (v.bit(s) == TernaryBit::One) slots[s] |= std::uint32_t{1} << j;
  }

  const std::uint32_t total = std::uint32_t{1} << m;
  std::vector<std::uint32_t> support(total, 0);
  for (std::uint32_t slot : slots) {
    // walk every non-empty subset of the slot's transaction
    for (std::uint32_t sub = slot; sub != 0; sub = (sub - 1) & slot)
      ++support[sub];
  }

  OracleResult result;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    if (support[mask] < threshold) continue;
    Itemset itemset;
    for (std::size_t j = 0; j < m; ++j)
      if (mask >> j & 1) itemset.push_back(items[j]);
    bool closed = true;
    for (std::size_t j = 0; j < m && closed; ++j)
      if (!(mask >> j & 1) &&
          support[mask | (std::uint32_t{1} << j)] == support[mask])
        closed = false;
    result.frequent.emplace(itemset, support[mask]);
    if (closed) result.closed.insert(std::move(itemset));
  }
  return result;
}

}  // namespace fpgt

#endif  // FPGT_ORACLE_HPP
