#include <doctest.h>

#include "oracles.hpp"
#include "verlab/errors.hpp"
#include "verlab/interval.hpp"

using namespace verlab;

namespace {

Rational from_decimal(const char* digits) {
  mpf_class f(digits, 256);
  return Rational(f);
}

}  // namespace

TEST_CASE("float_eval of rational elements is exact") {
  const auto four = CycloElement::constant(make_field(7), 4);
  for (unsigned bits : {32U, 64U, 128U}) {
    const auto iv = float_eval(four, bits);
    CHECK(iv.contains(Rational(4)));
    CHECK(iv.width() == 0);
  }
}

TEST_CASE("float_eval of 4 sin^2(pi/8)") {
  // 2 - sqrt(2) to 40 digits, from an independent evaluation
  const Rational lo = from_decimal("0.5857864376269049511983112757903019214303");
  const Rational hi = from_decimal("0.5857864376269049511983112757903019214304");
  const auto iv = float_eval(f_value(4, HalfInt::from_doubled(1)), 128);
  CHECK(iv.lo <= hi);
  CHECK(iv.hi >= lo);
  CHECK(iv.width() < Rational(1, mpz_class("1000000000000000000000000000000")));
  // enclosure shrinks with precision
  CHECK(float_eval(f_value(4, HalfInt::from_doubled(1)), 256).width() < iv.width());
}

TEST_CASE("float_eval of f_6(1) f_6(2)") {
  const auto prod = f_value(6, HalfInt::from_int(1)) * f_value(6, HalfInt::from_int(2));
  CHECK(float_eval(prod, 64).contains(Rational(3)));
}

TEST_CASE("float_eval rejects non-real elements") {
  CHECK_THROWS_AS(float_eval(CycloElement::zeta_power(make_field(5), 1), 64), DomainError);
}

TEST_CASE("float_eval contains the rational value of random real products") {
  for (std::uint32_t k = 2; k <= 20; ++k) {
    CycloElement p = CycloElement::constant(make_field(2 * k), 1);
    for (std::int64_t r = 1; r < k; ++r) {
      p *= f_value(k, HalfInt::from_int(r));
      const auto iv = float_eval(p, 96);
      if (auto q = as_rational(p)) CHECK(iv.contains(*q));
    }
    CHECK(float_eval(p, 96).contains(Rational(k * k)));
  }
}

TEST_CASE("f_interval encloses the sine") {
  for (std::uint32_t k = 1; k <= 12; ++k) {
    for (std::int64_t d = -4 * k; d <= 4 * static_cast<std::int64_t>(k); ++d) {
      const auto iv = f_interval(k, HalfInt::from_doubled(d), 80).to_rational();
      const double approx = static_cast<double>(oracle::f(static_cast<int>(k), d));
      CHECK(iv.lo.get_d() <= approx + 1e-15);
      CHECK(iv.hi.get_d() >= approx - 1e-15);
    }
  }
}

TEST_CASE("MpInterval arithmetic") {
  MpInterval a(64, Rational(1, 3));
  MpInterval b(64, Rational(2, 3));
  CHECK((a + b).to_rational().contains(Rational(1)));
  CHECK((a * b).to_rational().contains(Rational(2, 9)));
  CHECK((b - a).to_rational().contains(Rational(1, 3)));
  CHECK(a.reciprocal().to_rational().contains(Rational(3)));
  CHECK(b.pow(5).to_rational().contains(Rational(32, 243)));
  CHECK_THROWS_AS((a - a).reciprocal(), PrecisionError);
}
