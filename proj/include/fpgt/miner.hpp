#ifndef FPGT_MINER_HPP
#define FPGT_MINER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fpgt/ternary.hpp"
#include "fpgt/window.hpp"

namespace fpgt {

/// Minimum-support requirement: either an absolute count or a fraction
/// resolved per snapshot against the occupied window size.
class SupportSpec {
 public:
  static SupportSpec absolute(std::size_t count) {
    if (count < 1)
      throw std::invalid_argument("absolute support must be at least 1");
    SupportSpec s;
    s.absolute_ = count;
    return s;
  }

  static SupportSpec fraction(double f) {
    if (!(f > 0.0) || f > 1.0)
      throw std::invalid_argument("support fraction must lie in (0, 1]");
    SupportSpec s;
    s.fraction_ = f;
    return s;
  }

  /// Parse a command-line value: "3" is an absolute count, "0.2" a
  /// fraction.
  static SupportSpec parse(const std::string& text) {
    if (text.empty())
      throw std::invalid_argument("empty support specification");
    if (text.find_first_not_of("0123456789") == std::string::npos)
      return absolute(std::stoull(text));
    std::size_t pos = 0;
    double f = 0.0;
    try {
      f = std::stod(text, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse support value: " + text);
    }
    if (pos != text.size())
      throw std::invalid_argument("cannot parse support value: " + text);
    return fraction(f);
  }

  bool is_fraction() const noexcept { return fraction_.has_value(); }

  /// Absolute threshold for a window with `occupied` filled slots; a
  /// fraction resolves to max(1, ceil(fraction * occupied)).
  std::size_t resolve(std::size_t occupied) const {
    if (absolute_) return *absolute_;
    const double scaled = *fraction_ * static_cast<double>(occupied);
    // nudge below the representation error so 0.2 * 5 resolves to 1
    const auto t = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
    return std::max<std::size_t>(1, t);
  }

 private:
  SupportSpec() = default;
  std::optional<std::size_t> absolute_;
  std::optional<double> fraction_;
};

struct MinerConfig {
  SupportSpec min_support = SupportSpec::fraction(0.2);
  std::size_t k = 10;
};

/// DEAD nodes are infrequent: excluded from joins and from output.
/// NOT_CLOSED nodes are frequent but subsumed by an equal-support
/// superset: excluded from output, retained as join parents.
enum class NodeStatus : std::uint8_t { Live, Dead, NotClosed };

struct PatternNode {
  Itemset itemset;
  TernaryVector vector;
  std::size_t support = 0;
  NodeStatus status = NodeStatus::Live;
};

/// One mined itemset. `closed` is false when some superset over the same
/// window has equal support.
struct MinedPattern {
  Itemset itemset;
  std::size_t support = 0;
  bool closed = true;

  friend bool operator==(const MinedPattern&, const MinedPattern&) = default;
};

/// Report order: support descending, then itemset size ascending, then
/// lexicographic.
inline bool pattern_order(const MinedPattern& a, const MinedPattern& b) {
  if (a.support != b.support) return a.support > b.support;
  if (a.itemset.size() != b.itemset.size())
    return a.itemset.size() < b.itemset.size();
  return a.itemset < b.itemset;
}

/// Level-wise itemset tree over one window snapshot. Level i holds
/// i-itemsets in lexicographic order; candidates at level i+1 join two
/// same-level nodes sharing all but their last item, which for level 1
/// degenerates to every right-sibling pair.
class FPGTree {
 public:
  FPGTree(const WindowSnapshot& snap, const MinerConfig& config)
      : threshold_(config.min_support.resolve(snap.occupied())) {
    std::vector<PatternNode> roots;
    roots.reserve(snap.item_order().size());
    for (const Item& item : snap.item_order()) {
      PatternNode node;
      node.itemset = {item};
      node.vector = snap.item_vector(item);
      node.support = node.vector.support();
      node.status =
          node.support < threshold_ ? NodeStatus::Dead : NodeStatus::Live;
      roots.push_back(std::move(node));
    }
    levels_.push_back(std::move(roots));
  }

  std::size_t threshold() const noexcept { return threshold_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  /// Nodes holding i-itemsets (levels are 1-based).
  const std::vector<PatternNode>& level(std::size_t i) const {
    check_level(i);
    return levels_[i - 1];
  }

  /// Generate level i+1 candidates from the non-DEAD nodes of level i.
  /// Returns the number of nodes created; zero means the tree is done.
  std::size_t expand_level(std::size_t i) {
    check_level(i);
    if (i != levels_.size())
      throw std::invalid_argument("expand_level: level already expanded");
    const auto& cur = levels_[i - 1];
    std::vector<PatternNode> next;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (cur[a].status == NodeStatus::Dead) continue;
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        if (cur[b].status == NodeStatus::Dead) continue;
        // same-prefix nodes are contiguous in lexicographic order
        if (!std::equal(cur[a].itemset.begin(), cur[a].itemset.end() - 1,
                        cur[b].itemset.begin(), cur[b].itemset.end() - 1))
          break;
        PatternNode node;
        node.itemset = cur[a].itemset;
        node.itemset.push_back(cur[b].itemset.back());
        node.vector = combine(cur[a].vector, cur[b].vector);
        node.support = node.vector.support();
        node.status =
            node.support < threshold_ ? NodeStatus::Dead : NodeStatus::Live;
        next.push_back(std::move(node));
      }
    }
    const std::size_t created = next.size();
    if (created > 0) levels_.push_back(std::move(next));
    return created;
  }

  /// Mark level-i nodes subsumed by an equal-support superset at level
  /// i+1 as NOT_CLOSED. Returns the number of nodes newly marked.
  std::size_t prune_nonclosed(std::size_t i) {
    check_level(i);
    check_level(i + 1);
    std::size_t marked = 0;
    for (PatternNode& sub : levels_[i - 1]) {
      if (sub.status != NodeStatus::Live) continue;
      for (const PatternNode& super : levels_[i]) {
        if (super.status == NodeStatus::Dead ||
            super.support != sub.support)
          continue;
        if (std::includes(super.itemset.begin(), super.itemset.end(),
                          sub.itemset.begin(), sub.itemset.end())) {
          sub.status = NodeStatus::NotClosed;
          ++marked;
          break;
        }
      }
    }
    return marked;
  }

  /// Every frequent node as a pattern, in report order. Closed means the
  /// node survived every prune pass.
  std::vector<MinedPattern> patterns() const {
    std::vector<MinedPattern> out;
    for (const auto& level : levels_)
      for (const PatternNode& node : level) {
        if (node.status == NodeStatus::Dead) continue;
        out.push_back(MinedPattern{node.itemset, node.support,
                                   node.status == NodeStatus::Live});
      }
    std::sort(out.begin(), out.end(), pattern_order);
    return out;
  }

 private:
  void check_level(std::size_t i) const {
    if (i < 1 || i > levels_.size())
      throw std::invalid_argument("no such tree level: " + std::to_string(i));
  }

  std::vector<std::vector<PatternNode>> levels_;
  std::size_t threshold_ = 1;
};

/// Grow the tree to fixpoint and return every frequent pattern (closed
/// and not) in report order. Pure function of snapshot and config.
inline std::vector<MinedPattern> mine(const WindowSnapshot& snap,
                                      const MinerConfig& config) {
  FPGTree tree(snap, config);
  for (std::size_t i = 1; tree.expand_level(i) > 0; ++i)
    tree.prune_nonclosed(i);
  return tree.patterns();
}

/// First k closed patterns under the report order; fewer than k yields
/// all of them.
inline std::vector<MinedPattern> top_k(std::vector<MinedPattern> patterns,
                                       std::size_t k) {
  if (k == 0) throw std::invalid_argument("top-k count must be at least 1");
  std::sort(patterns.begin(), patterns.end(), pattern_order);
  std::vector<MinedPattern> out;
  for (MinedPattern& p : patterns) {
    if (!p.closed) continue;
    out.push_back(std::move(p));
    if (out.size() == k) break;
  }
  return out;
}

}  // namespace fpgt

#endif  // FPGT_MINER_HPP
