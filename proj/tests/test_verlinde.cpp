#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "verlab/closed_forms.hpp"
#include "verlab/errors.hpp"
#include "verlab/verlinde.hpp"

using namespace verlab;

namespace {

long double as_ld(const Integer& z) { return static_cast<long double>(z.get_d()); }

bool close(const Integer& exact, long double approx) {
  return std::fabs(as_ld(exact) - approx) <= 1e-6L * std::max(1.0L, std::fabs(approx));
}

}  // namespace

TEST_CASE("SL values") {
  CHECK(verlinde_sl(4, 1, 2) == 16);
  CHECK(verlinde_sl(4, 2, 2) == 140);
  CHECK(verlinde_sl(2, 1, 2) == 4);
  CHECK(verlinde_sl(2, 2, 2) == 10);
  for (int g = 1; g <= 6; ++g) {
    CHECK(verlinde_sl(4, 1, g) == closed_form::n1_sl4(g));
    CHECK(verlinde_sl(4, 2, g) == closed_form::n2_sl4(g));
    CHECK(verlinde_sl(2, 2, g) == closed_form::n2_sl2(g));
  }
}

TEST_CASE("spin values") {
  CHECK(verlinde_spin(5, 1, 2) == SplitNumber{2, 8});
  CHECK(verlinde_spin(5, 2, 2) == SplitNumber{8, 50});
  CHECK(verlinde_spin(8, 2, 2).minus == 32);
  CHECK(verlinde_spin(5, 1, 2).total() == 10);
  CHECK_THROWS_AS(verlinde_spin(4, 1, 2), ValidityError);
}

TEST_CASE("spin3 formal sum") {
  CHECK(verlinde_spin3(1, 2) == SplitNumber{2, 8});
  CHECK(verlinde_spin3(2, 2) == SplitNumber{8, 27});
  CHECK(verlinde_spin3(0, 3) == SplitNumber{0, 1});
  for (int l = 0; l <= 4; ++l)
    for (int g = 1; g <= 4; ++g) CHECK(verlinde_spin3(l, g).total() == verlinde_sl(2, 2 * l, g));
}

TEST_CASE("genus one counts weights") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 0; l <= 4; ++l) CHECK(verlinde_sl(n, l, 1) == weight_count(GroupSpec::sl(n), l).total);
  for (int m = 5; m <= 10; ++m) {
    for (int l = 0; l <= 3; ++l) {
      const auto s = verlinde_spin(m, l, 1);
      const auto c = weight_count(GroupSpec::spin(m), l);
      CHECK(s.plus == c.plus);
      CHECK(s.minus == c.minus);
    }
  }
}

TEST_CASE("section counts") {
  CHECK(theta_sections(5, 1, 2) == 58);
  CHECK(theta_sections(4, 1, 2) == 100);
  CHECK(theta_sections(6, 1, 2) == 140);
  CHECK(theta_sections(3, 1, 2) == 35);
  CHECK(twisted_sections(3, 1, 2) == 19);
  CHECK(twisted_sections(5, 1, 2) == 42);
  CHECK(twisted_sections(4, 1, 2) == 36);
  CHECK(twisted_sections(6, 1, 2) == 76);
  CHECK(thaddeus_twisted(1, 2) == 6);
  CHECK(thaddeus_twisted(2, 3) == 265);
}

TEST_CASE("level map") {
  CHECK(level_map(3).dynkin_index == 4);
  CHECK(level_map(5).dynkin_index == 2);
  CHECK(level_map(12).dynkin_index == 2);
  CHECK_THROWS_AS(level_map(4), ValidityError);
}

TEST_CASE("product factors") {
  const GroupSpec odd = GroupSpec::spin(5);
  auto a = as_rational(product_factor(odd, WeightSet({HalfInt::from_int(1), HalfInt::from_int(2)}), 4));
  REQUIRE(a);
  CHECK(*a == 32);
  auto b = as_rational(
      product_factor(odd, WeightSet({HalfInt::from_doubled(1), HalfInt::from_doubled(3)}), 4));
  REQUIRE(b);
  CHECK(*b == 16);
}

TEST_CASE("agreement with the long-double sine formula") {
  for (int n = 2; n <= 5; ++n)
    for (int l = 0; l <= 4; ++l)
      for (int g = 2; g <= 4; ++g) CHECK(close(verlinde_sl(n, l, g), oracle::sl_sum(n, l, g)));
  for (int m = 5; m <= 9; ++m) {
    for (int l = 0; l <= 3; ++l) {
      for (int g = 2; g <= 3; ++g) {
        const auto exact = verlinde_spin(m, l, g);
        const auto approx = oracle::spin_sum(m, l, g);
        CHECK(close(exact.plus, approx.plus));
        CHECK(close(exact.minus, approx.minus));
      }
    }
  }
}

TEST_CASE("Spin_6 and SL_4") {
  for (int l = 0; l <= 3; ++l)
    for (int g = 1; g <= 4; ++g) CHECK(verlinde_spin(6, l, g).total() == verlinde_sl(4, l, g));
  for (int g = 2; g <= 5; ++g) CHECK(theta_sections(6, 1, g) == verlinde_sl(4, 2, g));
}

TEST_CASE("float enclosure") {
  const auto iv = verlinde_float(GroupSpec::sl(4), 2, 2, 128);
  CHECK(iv.contains(140));
  CHECK(iv.width() < Rational(1, 1000000));
  const auto sp = verlinde_float(GroupSpec::spin(7), 2, 3, 128);
  CHECK(sp.contains(verlinde_spin(7, 2, 3).total()));
}

TEST_CASE("threads do not change results") {
  EvalOptions many;
  many.threads = 4;
  for (int m : {7, 8, 10}) CHECK(verlinde_spin(m, 2, 4) == verlinde_spin(m, 2, 4, many));
  CHECK(verlinde_sl(5, 3, 3) == verlinde_sl(5, 3, 3, many));
  EvalOptions automatic;
  automatic.threads = 0;
  CHECK(verlinde_spin(12, 2, 5) == verlinde_spin(12, 2, 5, automatic));
}
