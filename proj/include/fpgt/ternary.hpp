#ifndef FPGT_TERNARY_HPP
#define FPGT_TERNARY_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpgt {

/// One slot of a window vector: item present, item absent, or no
/// information (the slot is not occupied yet, or both operands of a
/// combination were absent).
enum class TernaryBit : std::uint8_t { Zero, One, Unknown };

/// Bitwise combiner. ONE only where both operands are ONE; a pair of
/// known-absent bits carries no information about the pair of items, so
/// it collapses to UNKNOWN, as does any UNKNOWN operand.
constexpr TernaryBit combine_bit(TernaryBit a, TernaryBit b) noexcept {
  if (a == TernaryBit::Unknown || b == TernaryBit::Unknown)
    return TernaryBit::Unknown;
  if (a == TernaryBit::One && b == TernaryBit::One) return TernaryBit::One;
  if (a == TernaryBit::Zero && b == TernaryBit::Zero)
    return TernaryBit::Unknown;
  return TernaryBit::Zero;
}

constexpr char to_char(TernaryBit b) noexcept {
  switch (b) {
    case TernaryBit::Zero: return '0';
    case TernaryBit::One: return '1';
    default: return 'U';
  }
}

/// Fixed-length ternary vector, one position per window slot, oldest
/// first. Stored as two parallel bit rows: `presence` (item in slot) and
/// `known` (slot carries information). Presence is normalized to 0
/// wherever known is 0, so support is a plain popcount of the presence
/// row and equality works on the raw words.
///
/// Values are immutable through the public interface; every operation
/// returns a fresh vector.
class TernaryVector {
 public:
  TernaryVector() = default;

  /// All positions UNKNOWN.
  static TernaryVector unknown(std::size_t length) {
    return TernaryVector(length);
  }

  /// First `occupied` positions known-absent, the rest UNKNOWN.
  static TernaryVector known_zeros(std::size_t length, std::size_t occupied) {
    if (occupied > length)
      throw std::invalid_argument("known_zeros: occupied exceeds length");
    TernaryVector v(length);
    for (std::size_t i = 0; i < occupied; ++i) v.set_slot(i, false);
    return v;
  }

  /// Build from per-slot memberships: positions [0, occupied) are known
  /// with the given presence, positions beyond `occupied` are UNKNOWN.
  static TernaryVector from_memberships(const std::vector<bool>& present,
                                        std::size_t occupied) {
    if (occupied > present.size())
      throw std::invalid_argument(
          "from_memberships: occupied exceeds membership count");
    TernaryVector v(present.size());
    for (std::size_t i = 0; i < occupied; ++i) v.set_slot(i, present[i]);
    return v;
  }

  std::size_t length() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  TernaryBit bit(std::size_t i) const {
    check_index(i);
    if (!get(known_, i)) return TernaryBit::Unknown;
    return get(presence_, i) ? TernaryBit::One : TernaryBit::Zero;
  }

  /// Number of ONE positions.
  std::size_t support() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : presence_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Number of positions carrying information (ONE or ZERO).
  std::size_t known_count() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : known_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Copy with slot `i` made known and set to `present`.
  TernaryVector with_slot(std::size_t i, bool present) const {
    check_index(i);
    TernaryVector v(*this);
    v.set_slot(i, present);
    return v;
  }

  /// Copy with the oldest slot evicted, the remaining slots moved down
  /// one position, and the newest slot appended as known with `present`.
  TernaryVector shifted(bool present) const {
    TernaryVector v(*this);
    if (len_ == 0) return v;
    for (std::size_t w = 0; w + 1 < v.presence_.size(); ++w) {
      v.presence_[w] = (v.presence_[w] >> 1) | (v.presence_[w + 1] << 63);
      v.known_[w] = (v.known_[w] >> 1) | (v.known_[w + 1] << 63);
    }
    v.presence_.back() >>= 1;
    v.known_.back() >>= 1;
    v.set_slot(len_ - 1, present);
    return v;
  }

  friend bool operator==(const TernaryVector&, const TernaryVector&) = default;

  friend TernaryVector combine(const TernaryVector& x, const TernaryVector& y);

 private:
  explicit TernaryVector(std::size_t length)
      : len_(length),
        presence_((length + 63) / 64, 0),
        known_((length + 63) / 64, 0) {}

  void check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("TernaryVector: slot out of range");
  }

  static bool get(const std::vector<std::uint64_t>& row, std::size_t i) noexcept {
    return (row[i >> 6] >> (i & 63)) & 1;
  }

  void set_slot(std::size_t i, bool present) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    known_[i >> 6] |= mask;
    if (present)
      presence_[i >> 6] |= mask;
    else
      presence_[i >> 6] &= ~mask;
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> presence_;
  std::vector<std::uint64_t> known_;
};

/// Positionwise combine of two equal-length vectors. The result is ONE
/// exactly where both inputs are ONE, so its support is the number of
/// slots whose transaction contains both itemsets.
inline TernaryVector combine(const TernaryVector& x, const TernaryVector& y) {
  if (x.len_ != y.len_)
    throw std::invalid_argument(
        "combine: vectors belong to different window shapes");
  TernaryVector r = TernaryVector::unknown(x.len_);
  for (std::size_t w = 0; w < r.presence_.size(); ++w) {
    r.presence_[w] = x.presence_[w] & y.presence_[w];
    // known where both are known and at least one is present; a (0,0)
    // pair degrades to UNKNOWN
    r.known_[w] = x.known_[w] & y.known_[w] & (x.presence_[w] | y.presence_[w]);
  }
  return r;
}

inline std::size_t support(const TernaryVector& v) noexcept {
  return v.support();
}

/// Oldest-first rendering, one char per slot: '1', '0' or 'U'.
inline std::string to_string(const TernaryVector& v) {
  std::string s;
  s.reserve(v.length());
  for (std::size_t i = 0; i < v.length(); ++i) s.push_back(to_char(v.bit(i)));
  return s;
}

}  // namespace fpgt

#endif  // FPGT_TERNARY_HPP
