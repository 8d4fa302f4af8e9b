#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "verlab/cyclotomic.hpp"
#include "verlab/errors.hpp"

using namespace verlab;

namespace {

// Phi_N = prod_{d | N} (x^d - 1)^mu(N/d), evaluated as (prod over mu=+1) / (prod over mu=-1).
int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<long long> poly_div(std::vector<long long> a, const std::vector<long long>& b) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  std::vector<long long> q(static_cast<std::size_t>(da - db + 1), 0);
  for (int i = da; i >= db; --i) {
    const long long c = a[i] / b[db];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<long long> mobius_cyclotomic(int n) {
  std::vector<long long> num{1}, den{1};
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::vector<long long> xd(d + 1, 0);
    xd[0] = -1;
    xd[d] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = poly_mul(num, xd);
    if (mu == -1) den = poly_mul(den, xd);
  }
  return poly_div(num, den);
}

CycloElement random_element(const FieldPtr& field, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(field->degree());
  for (auto& x : c) x = Rational(coef(rng), den(rng));
  return CycloElement::from_coeffs(field, c);
}

long double numeric_real(const CycloElement& a) {
  long double s = 0;
  const auto n = a.field().order();
  for (std::size_t e = 0; e < a.field().degree(); ++e) {
    s += static_cast<long double>(a.coeff(e).get_d()) * std::cos(2 * oracle::pi() * e / n);
  }
  return s;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(make_field(1)->minimal_poly() == std::vector<Integer>{-1, 1});
  CHECK(make_field(4)->minimal_poly() == std::vector<Integer>{1, 0, 1});
  CHECK(make_field(12)->minimal_poly() == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(make_field(1)->degree() == 1);

  for (int n = 1; n <= 60; ++n) {
    const auto expected = mobius_cyclotomic(n);
    const auto& got = make_field(static_cast<std::uint32_t>(n))->minimal_poly();
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Integer(static_cast<long>(expected[i])));
  }
  CHECK(make_field(5) == make_field(5));
}

TEST_CASE("arith basics") {
  auto q4 = make_field(4);
  const auto i = CycloElement::zeta_power(q4, 1);
  CHECK((i * i).coeffs() == std::vector<Rational>{-1, 0});
  CHECK(arith(i, CycloElement(q4), ArithOp::add) == i);
  CHECK(arith(i, i, ArithOp::sub).is_zero());

  auto q5 = make_field(5);
  CycloElement prod = CycloElement::constant(q5, 1);
  for (int e = 1; e <= 4; ++e) prod *= CycloElement::constant(q5, 1) - CycloElement::zeta_power(q5, e);
  CHECK(as_rational(prod) == Rational(5));

  CHECK_THROWS_AS(arith(i, CycloElement::constant(q5, 1), ArithOp::mul), UsageError);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(1234);
  for (std::uint32_t n = 1; n <= 24; ++n) {
    auto field = make_field(n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_element(field, rng);
      const auto b = random_element(field, rng);
      const auto c = random_element(field, rng);
      const auto one = CycloElement::constant(field, 1);
      const auto zero = CycloElement(field);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a * one == a);
      CHECK(a + zero == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK(a * invert(a) == one);
    }
  }
}

TEST_CASE("invert") {
  auto q1 = make_field(1);
  CHECK(as_rational(invert(CycloElement::constant(q1, 2))) == Rational(1, 2));
  auto q4 = make_field(4);
  CHECK(invert(CycloElement::zeta_power(q4, 1)) == -CycloElement::zeta_power(q4, 1));
  const auto f = f_value(4, HalfInt::from_doubled(1));
  CHECK(invert(f) * f == CycloElement::constant(f.field_ptr(), 1));
  CHECK_THROWS_AS(invert(CycloElement(q4)), DivisionByZero);
}

TEST_CASE("pow") {
  std::mt19937 rng(7);
  auto field = make_field(9);
  CHECK(pow(random_element(field, rng), 0) == CycloElement::constant(field, 1));
  CHECK(as_rational(pow(CycloElement::constant(field, 2), 10)) == Rational(1024));
  // (2 - sqrt 2)^2 = 6 - 4 sqrt 2, sqrt 2 = zeta_8 - zeta_8^3
  const auto sq = pow(f_value(4, HalfInt::from_doubled(1)), 2);
  CHECK(sq.coeffs() == std::vector<Rational>{6, -4, 0, 4});
  CHECK(numeric_real(sq) == doctest::Approx(0.343146).epsilon(1e-6));
  const auto a = random_element(field, rng);
  CHECK(pow(a, 5) == a * a * a * a * a);
}

TEST_CASE("f values") {
  CHECK(as_rational(f_value(4, HalfInt::from_int(2))) == Rational(4));
  CHECK(as_rational(f_value(4, HalfInt::from_int(1))) == Rational(2));
  const auto half = f_value(4, HalfInt::from_doubled(1));
  CHECK(half.field().order() == 8);
  CHECK(half.coeffs() == std::vector<Rational>{2, -1, 0, 1});
  CHECK(numeric_real(half) == doctest::Approx(static_cast<double>(oracle::f(4, 1))).epsilon(1e-12));
  CHECK_FALSE(as_rational(CycloElement::zeta_power(make_field(8), 1)).has_value());

  CycloElement prod = CycloElement::constant(make_field(10), 1);
  for (int r = 1; r <= 4; ++r) prod *= f_value(5, HalfInt::from_int(r));
  CHECK(as_rational(prod) == Rational(25));
}

TEST_CASE("f identities for k in [2, 40]") {
  for (std::uint32_t k = 2; k <= 40; ++k) {
    const auto one = CycloElement::constant(make_field(2 * k), 1);
    CycloElement full = one;
    for (std::int64_t d = -2 * static_cast<std::int64_t>(k); d <= 2 * static_cast<std::int64_t>(k); ++d) {
      const HalfInt r = HalfInt::from_doubled(d);
      const auto fr = f_value(k, r);
      REQUIRE(fr == f_value(k, -r));
      REQUIRE(fr == f_value(k, HalfInt::from_int(k) - r));
      REQUIRE(f_value(k, r + r) == fr * f_value(k, HalfInt::from_doubled(k) - r));
      REQUIRE(fr.is_real());
    }
    for (std::int64_t r = 1; r < k; ++r) full *= f_value(k, HalfInt::from_int(r));
    CHECK(as_rational(full) == Rational(k * k));

    auto prod = [&](long hi, long (*e)(long)) {
      CycloElement p = one;
      for (long r = 1; r <= hi; ++r) p *= pow(f_value(k, HalfInt::from_int(r)), static_cast<std::uint64_t>(e(r)));
      return as_rational(p);
    };
    auto unit = [](long) { return 1L; };
    auto fl = [](long r) { return r / 2; };
    auto cl = [](long r) { return (r + 1) / 2; };
    if (k % 2 == 1) {
      const long n = (k - 1) / 2;
      CHECK(prod(n, unit) == Rational(2 * n + 1));
      mpz_class expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(2 * n + 1), static_cast<unsigned long>(n));
      CHECK(prod(2 * n, fl) == Rational(expect));
    } else {
      const long n = k / 2;
      mpz_class nn;
      mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
      CHECK(prod(n - 1, unit) == Rational(n));
      CHECK(prod(2 * n - 1, fl) == Rational(mpz_class(nn << static_cast<mp_bitcnt_t>(n - 1))));
      CHECK(prod(2 * n - 1, cl) == Rational(mpz_class(nn << static_cast<mp_bitcnt_t>(n + 1))));
    }
  }
}

TEST_CASE("conjugation and reality") {
  auto q8 = make_field(8);
  const auto z = CycloElement::zeta_power(q8, 1);
  CHECK(z.conjugate() == CycloElement::zeta_power(q8, 7));
  CHECK_FALSE(z.is_real());
  CHECK((z + z.conjugate()).is_real());
}
