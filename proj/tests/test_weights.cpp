#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "verlab/errors.hpp"
#include "verlab/weights.hpp"

using namespace verlab;

namespace {

std::vector<HalfInt> doubled(std::initializer_list<std::int64_t> d) {
  std::vector<HalfInt> out;
  for (auto x : d) out.push_back(HalfInt::from_doubled(x));
  return out;
}

WeightSet ws(std::initializer_list<std::int64_t> d) { return WeightSet(doubled(d)); }

std::vector<std::string> names(const std::vector<WeightSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

// Brute-force spin alcove over the full doubled window, no pruning.
SplitSets brute_spin(bool odd, int n, int l) {
  const int k = odd ? l + 2 * n - 1 : l + 2 * n - 2;
  SplitSets out;
  oracle::increasing_tuples(n, -2 * k, 2 * k, [&](const std::vector<std::int64_t>& u) {
    const bool ok = odd ? (u[0] > 0 && u[n - 2] + u[n - 1] < 2 * k)
                        : (u[0] + u[1] > 0 && u[n - 2] + u[n - 1] < 2 * k);
    if (!ok) return;
    std::vector<HalfInt> e;
    for (auto d : u) e.push_back(HalfInt::from_doubled(d));
    (u[0] % 2 == 0 ? out.plus : out.minus).emplace_back(e);
  });
  return out;
}

}  // namespace

TEST_CASE("HalfInt") {
  CHECK(HalfInt::from_doubled(5).to_string() == "5/2");
  CHECK(HalfInt::from_doubled(-1).to_string() == "-1/2");
  CHECK(HalfInt::from_int(3).to_string() == "3");
  CHECK(HalfInt::from_doubled(4).is_integral());
  CHECK_FALSE(HalfInt::from_doubled(3).is_integral());
}

TEST_CASE("WeightSet invariants") {
  CHECK(ws({1, 3, 5}).parity() == Parity::half_integral);
  CHECK(ws({0, 2}).parity() == Parity::integral);
  CHECK_THROWS_AS(ws({2, 2}), DomainError);
  CHECK_THROWS_AS(ws({1, 2}), DomainError);
  CHECK(ws({-1, 3, 5}).to_string() == "{-1/2,3/2,5/2}");
}

TEST_CASE("enum_sl") {
  CHECK(names(enum_sl(2, 0)) == std::vector<std::string>{"{0,1}"});
  CHECK(names(enum_sl(4, 1)) == std::vector<std::string>{"{0,1,2,3}", "{0,1,2,4}", "{0,1,3,4}", "{0,2,3,4}"});
  CHECK(enum_sl(4, 2).size() == 10);
  CHECK(names(enum_sl(2, 2)) == std::vector<std::string>{"{0,1}", "{0,2}", "{0,3}"});
  for (int n = 2; n <= 6; ++n) {
    for (int l = 0; l <= 6; ++l) {
      const auto sets = enum_sl(n, l);
      CHECK(static_cast<long long>(sets.size()) == oracle::binomial(l + n - 1, n - 1));
      CHECK(std::is_sorted(sets.begin(), sets.end()));
      for (const auto& s : sets) CHECK(in_alcove(GroupSpec::sl(n), l, s.entries()));
    }
  }
  CHECK_THROWS_AS(enum_sl(1, 0), ValidityError);
}

TEST_CASE("enum_spin_odd") {
  auto s = enum_spin_odd(2, 1);
  CHECK(names(s.plus) == std::vector<std::string>{"{1,2}"});
  CHECK(names(s.minus) == std::vector<std::string>{"{1/2,3/2}", "{1/2,5/2}"});
  s = enum_spin_odd(2, 0);
  CHECK(s.plus.empty());
  CHECK(names(s.minus) == std::vector<std::string>{"{1/2,3/2}"});

  for (int n = 2; n <= 4; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const auto got = enum_spin_odd(n, l);
      const auto want = brute_spin(true, n, l);
      CHECK(got.plus == want.plus);
      CHECK(got.minus == want.minus);
      const GroupSpec spec{Family::SpinOdd, n};
      for (const auto& u : got.plus) {
        CHECK(u.parity() == Parity::integral);
        CHECK(in_alcove(spec, l, u.entries()));
      }
      for (const auto& u : got.minus) {
        CHECK(u.parity() == Parity::half_integral);
        CHECK(in_alcove(spec, l, u.entries()));
      }
    }
  }
}

TEST_CASE("enum_spin_even") {
  const auto s = enum_spin_even(3, 2);
  CHECK(s.plus.size() == 6);
  CHECK(s.minus.size() == 4);
  CHECK(names(s.minus) ==
        std::vector<std::string>{"{-1/2,3/2,5/2}", "{-1/2,3/2,7/2}", "{1/2,3/2,5/2}", "{1/2,3/2,7/2}"});
  for (int n = 3; n <= 8; ++n) {
    const auto c = enum_spin_even(n, 2);
    CHECK(c.plus.size() == static_cast<std::size_t>(n + 3));
    CHECK(c.minus.size() == 4);
  }
  for (int n = 3; n <= 4; ++n) {
    for (int l = 0; l <= 4; ++l) {
      const auto got = enum_spin_even(n, l);
      const auto want = brute_spin(false, n, l);
      CHECK(got.plus == want.plus);
      CHECK(got.minus == want.minus);
    }
  }
  CHECK_THROWS_AS(enum_spin_even(2, 1), ValidityError);
  CHECK(enum_spin_even(4, 1).plus == enum_spin_even(4, 1).plus);
}

TEST_CASE("reflect") {
  CHECK(reflect(ws({1, 3, 5}), 6, Reflection::flip_low) == ws({-1, 3, 5}));
  CHECK(reflect(ws({0, 2, 4}), 6, Reflection::flip_high) == ws({0, 2, 8}));
  for (int n = 3; n <= 6; ++n) {
    const int k = 2 * n;
    const auto sets = enum_spin_even(n, 2);
    for (const auto* family : {&sets.plus, &sets.minus}) {
      for (const auto& u : *family) {
        for (auto gen : {Reflection::flip_low, Reflection::flip_high}) {
          const auto v = reflect(u, k, gen);
          CHECK(reflect(v, k, gen) == u);
          CHECK(std::find(family->begin(), family->end(), v) != family->end());
        }
        CHECK(reflect(reflect(u, k, Reflection::flip_low), k, Reflection::flip_high) ==
              reflect(reflect(u, k, Reflection::flip_high), k, Reflection::flip_low));
      }
    }
  }
  // an image outside the alcove is reported, not returned
  CHECK_THROWS_AS(reflect(ws({0, 2, 10}), 6, Reflection::flip_high), DomainError);
}

TEST_CASE("weight_count") {
  CHECK(weight_count(GroupSpec::sl(4), 1).total == 4);
  const auto even = weight_count(GroupSpec::spin(10), 2);
  CHECK(even.plus == 8);
  CHECK(even.minus == 4);
  const auto odd = weight_count(GroupSpec::spin(5), 1);
  CHECK(odd.plus == 1);
  CHECK(odd.minus == 2);
  CHECK(odd.total == 3);
}

TEST_CASE("GroupSpec") {
  CHECK(GroupSpec::spin(7) == GroupSpec{Family::SpinOdd, 3});
  CHECK(GroupSpec::spin(8) == GroupSpec{Family::SpinEven, 4});
  CHECK_THROWS_AS(GroupSpec::spin(4), ValidityError);
  CHECK_THROWS_AS(GroupSpec::spin(3), ValidityError);
  CHECK(GroupSpec::spin(8).shifted_level(2) == 8);
  CHECK(GroupSpec::spin(9).shifted_level(1) == 8);
  CHECK(GroupSpec::sl(4).shifted_level(1) == 5);
  CHECK(GroupSpec::spin(12).to_string() == "spin:12");
}
