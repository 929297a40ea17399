#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fpgt/ternary.hpp"
#include "support/test_helpers.hpp"

using fpgt::TernaryBit;
using fpgt::TernaryVector;
using fpgt::combine;
using fpgt::combine_bit;
using fpgt::to_string;
using fpgt::testing::random_vector;

namespace {

constexpr TernaryBit kZero = TernaryBit::Zero;
constexpr TernaryBit kOne = TernaryBit::One;
constexpr TernaryBit kUnknown = TernaryBit::Unknown;

TernaryVector vec(std::string_view bits) {
  TernaryVector v = TernaryVector::unknown(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] != 'U') v = v.with_slot(i, bits[i] == '1');
  return v;
}

}  // namespace

TEST_CASE("combine_bit covers the full ternary table") {
  // All nine input pairs.
  CHECK(combine_bit(kOne, kOne) == kOne);
  CHECK(combine_bit(kZero, kOne) == kZero);
  CHECK(combine_bit(kOne, kZero) == kZero);
  CHECK(combine_bit(kZero, kZero) == kUnknown);
  CHECK(combine_bit(kZero, kUnknown) == kUnknown);
  CHECK(combine_bit(kUnknown, kZero) == kUnknown);
  CHECK(combine_bit(kUnknown, kUnknown) == kUnknown);
  CHECK(combine_bit(kOne, kUnknown) == kUnknown);
  CHECK(combine_bit(kUnknown, kOne) == kUnknown);
}

TEST_CASE("vector combine applies the bit table positionwise") {
  CHECK(to_string(combine(vec("10100"), vec("11111"))) == "10100");

  const TernaryVector ad = combine(vec("10100"), vec("01001"));
  CHECK(to_string(ad) == "000U0");
  CHECK(ad.support() == 0);

  const TernaryVector all_unknown = TernaryVector::unknown(5);
  CHECK(combine(vec("10100"), all_unknown) == all_unknown);
  CHECK(combine(all_unknown, all_unknown) == all_unknown);
}

TEST_CASE("combine rejects mismatched lengths") {
  CHECK_THROWS_AS(combine(vec("101"), vec("10")), std::invalid_argument);
}

TEST_CASE("support counts ONE positions only") {
  CHECK(vec("11111").support() == 5);
  CHECK(vec("10100").support() == 2);
  CHECK(TernaryVector::unknown(5).support() == 0);
  CHECK(vec("0U0U0").support() == 0);
  CHECK(fpgt::support(vec("10100")) == 2);
}

TEST_CASE("from_memberships marks occupied slots known") {
  const TernaryVector a =
      TernaryVector::from_memberships({true, false, true, false, false}, 5);
  CHECK(to_string(a) == "10100");
  CHECK(a.support() == 2);
  CHECK(a.known_count() == 5);

  const TernaryVector empty = TernaryVector::from_memberships({}, 0);
  CHECK(empty.length() == 0);
  CHECK(empty.support() == 0);

  const TernaryVector partial = TernaryVector::from_memberships(
      {true, false, false, false, false}, 3);
  CHECK(to_string(partial) == "100UU");
  CHECK(partial.support() == 1);
  CHECK(partial.known_count() == 3);

  CHECK_THROWS_AS(TernaryVector::from_memberships({true}, 2),
                  std::invalid_argument);
}

TEST_CASE("slot access and bounds") {
  const TernaryVector v = vec("10U");
  CHECK(v.bit(0) == kOne);
  CHECK(v.bit(1) == kZero);
  CHECK(v.bit(2) == kUnknown);
  CHECK_THROWS_AS(v.bit(3), std::out_of_range);
  CHECK_THROWS_AS(v.with_slot(3, true), std::out_of_range);
}

TEST_CASE("shifted evicts the oldest slot and appends the newest") {
  CHECK(to_string(vec("10100").shifted(true)) == "01001");
  CHECK(to_string(vec("1UUUU").shifted(false)) == "UUUU0");
  // boundary: lengths at and around the word size
  TernaryVector wide = TernaryVector::known_zeros(64, 64).with_slot(0, true);
  wide = wide.shifted(true);
  CHECK(wide.length() == 64);
  CHECK(wide.bit(0) == kZero);
  CHECK(wide.bit(63) == kOne);
  CHECK(wide.support() == 1);

  TernaryVector wider = TernaryVector::known_zeros(65, 65).with_slot(64, true);
  wider = wider.shifted(false);
  CHECK(wider.bit(63) == kOne);
  CHECK(wider.bit(64) == kZero);
  CHECK(wider.support() == 1);
}

TEST_CASE("combine is commutative") {
  std::mt19937 rng(7101);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 130);
    const TernaryVector x = random_vector(rng, len);
    const TernaryVector y = random_vector(rng, len);
    REQUIRE(combine(x, y) == combine(y, x));
  }
}

TEST_CASE("combined support never exceeds either operand's") {
  std::mt19937 rng(7102);
  for (int i = 0; i < 500; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 130);
    const TernaryVector x = random_vector(rng, len);
    const TernaryVector y = random_vector(rng, len);
    REQUIRE(combine(x, y).support() <= std::min(x.support(), y.support()));
  }
}

TEST_CASE("combined support equals the both-ONE position count") {
  std::mt19937 rng(7103);
  for (int i = 0; i < 300; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 90);
    const TernaryVector x = random_vector(rng, len);
    const TernaryVector y = random_vector(rng, len);
    std::size_t both = 0;
    for (std::size_t p = 0; p < len; ++p)
      if (x.bit(p) == kOne && y.bit(p) == kOne) ++both;
    REQUIRE(combine(x, y).support() == both);
  }
}

TEST_CASE("vector combine equals the bit combiner at every position") {
  std::mt19937 rng(7105);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 90);
    const TernaryVector x = random_vector(rng, len);
    const TernaryVector y = random_vector(rng, len);
    const TernaryVector combined = combine(x, y);
    for (std::size_t p = 0; p < len; ++p)
      REQUIRE(combined.bit(p) == combine_bit(x.bit(p), y.bit(p)));
  }
}

TEST_CASE("self-combine preserves support on fully known vectors") {
  std::mt19937 rng(7104);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = 1 + static_cast<std::size_t>(rng() % 70);
    std::vector<bool> present(len);
    for (std::size_t p = 0; p < len; ++p) present[p] = rng() & 1;
    const TernaryVector x = TernaryVector::from_memberships(present, len);
    REQUIRE(combine(x, x).support() == x.support());
  }
}
