#ifndef FPGT_WINDOW_HPP
#define FPGT_WINDOW_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpgt/ternary.hpp"

namespace fpgt {

using Item = std::string;

/// Itemset in canonical order: lexicographic byte order, no duplicates.
using Itemset = std::vector<Item>;

/// Window geometry. `capacity` is the number of transactions kept;
/// `slide` is the mining cadence in arrivals once the window has filled.
struct WindowConfig {
  std::size_t capacity = 0;
  std::size_t slide = 1;

  void validate() const {
    if (capacity < 1)
      throw std::invalid_argument("window capacity must be at least 1");
    if (slide < 1 || slide > capacity)
      throw std::invalid_argument("slide must lie in [1, capacity]");
  }
};

/// One stream element. Items are kept sorted and deduplicated; an empty
/// transaction is valid and still occupies a window slot.
class Transaction {
 public:
  Transaction() = default;

  Transaction(std::uint64_t seq, Itemset items)
      : seq_(seq), items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::uint64_t seq() const noexcept { return seq_; }
  const Itemset& items() const noexcept { return items_; }

  bool contains(const Item& item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
  }

  friend bool operator==(const Transaction&, const Transaction&) = default;

 private:
  std::uint64_t seq_ = 0;
  Itemset items_;
};

/// Immutable copy of the window state handed to miners. Later pushes on
/// the originating window do not affect it.
class WindowSnapshot {
 public:
  WindowSnapshot() = default;

  WindowSnapshot(std::size_t occupied, std::uint64_t window_end_seq,
                 std::map<Item, TernaryVector> vectors)
      : occupied_(occupied),
        end_seq_(window_end_seq),
        vectors_(std::move(vectors)) {
    item_order_.reserve(vectors_.size());
    for (const auto& [item, vec] : vectors_) {
      if (vec.length() < occupied_ ||
          vec.length() != vectors_.begin()->second.length())
        throw std::invalid_argument("snapshot vectors disagree on length");
      item_order_.push_back(item);
    }
  }

  std::size_t occupied() const noexcept { return occupied_; }
  std::uint64_t window_end_seq() const noexcept { return end_seq_; }

  /// All registered items in canonical order.
  const Itemset& item_order() const noexcept { return item_order_; }

  const TernaryVector& item_vector(const Item& item) const {
    auto it = vectors_.find(item);
    if (it == vectors_.end())
      throw std::out_of_range("item not registered in window: " + item);
    return it->second;
  }

  friend bool operator==(const WindowSnapshot&, const WindowSnapshot&) = default;

 private:
  std::size_t occupied_ = 0;
  std::uint64_t end_seq_ = 0;
  Itemset item_order_;
  std::map<Item, TernaryVector> vectors_;
};

/// The n most recent transactions, held as one ternary vector per item.
/// State is O(items x capacity) bits regardless of stream length; raw
/// transactions are not retained.
///
/// A window has a single owner performing pushes. Snapshots may be mined
/// concurrently with later pushes.
class SlidingWindow {
 public:
  explicit SlidingWindow(WindowConfig config) : config_(config) {
    config_.validate();
  }

  const WindowConfig& config() const noexcept { return config_; }
  std::size_t occupied() const noexcept { return occupied_; }
  std::uint64_t last_seq() const noexcept { return last_seq_; }
  std::uint64_t arrivals() const noexcept { return arrivals_; }
  std::size_t item_count() const noexcept { return vectors_.size(); }

  /// Arrivals not yet covered by a mine trigger; a non-zero value at
  /// end-of-stream means a final flush is due.
  std::size_t pending_arrivals() const noexcept {
    return arrivals_since_trigger_;
  }

  /// Ingest the next transaction. Returns true when a mining pass is
  /// due: when the window fills for the first time, and every `slide`
  /// arrivals thereafter.
  bool push(const Transaction& txn) {
    if (arrivals_ > 0 && txn.seq() != last_seq_ + 1)
      throw std::invalid_argument(
          "stream corruption: expected seq " + std::to_string(last_seq_ + 1) +
          ", got " + std::to_string(txn.seq()));

    const bool full = occupied_ == config_.capacity;

    // First-seen items backfill known-absent: every occupied slot was
    // fully observed and did not contain them.
    for (const Item& item : txn.items())
      vectors_.try_emplace(
          item, TernaryVector::known_zeros(config_.capacity, occupied_));

    for (auto& [item, vec] : vectors_) {
      const bool present = txn.contains(item);
      vec = full ? vec.shifted(present) : vec.with_slot(occupied_, present);
    }

    if (!full) ++occupied_;
    last_seq_ = txn.seq();
    ++arrivals_;
    ++arrivals_since_trigger_;

    const bool fire = triggered_once_
                          ? arrivals_since_trigger_ >= config_.slide
                          : occupied_ == config_.capacity;
    if (fire) {
      triggered_once_ = true;
      arrivals_since_trigger_ = 0;
    }
    return fire;
  }

  WindowSnapshot snapshot() const {
    return WindowSnapshot(occupied_, last_seq_, vectors_);
  }

 private:
  WindowConfig config_;
  std::map<Item, TernaryVector> vectors_;
  std::size_t occupied_ = 0;
  std::uint64_t last_seq_ = 0;
  std::uint64_t arrivals_ = 0;
  std::size_t arrivals_since_trigger_ = 0;
  bool triggered_once_ = false;
};

}  // namespace fpgt

#endif  // FPGT_WINDOW_HPP
