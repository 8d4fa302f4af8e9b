#include "verlab/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <utility>

#include "verlab/errors.hpp"

namespace verlab {
namespace {

// mpfr_get_q is exact for finite values.
Rational to_q(mpfr_srcptr x) {
  Rational out;
  mpfr_get_q(out.get_mpq_t(), x);
  return out;
}

}  // namespace

std::string RealInterval::to_string(int digits) const {
  auto show = [digits](const Rational& q, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, 256);
    mpfr_set_q(x, q.get_mpq_t(), rnd);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*R*g", digits, rnd, x);
    std::string s(buf);
    mpfr_free_str(buf);
    mpfr_clear(x);
    return s;
  };
  return "[" + show(lo, MPFR_RNDD) + ", " + show(hi, MPFR_RNDU) + "]";
}

MpInterval::MpInterval(mpfr_prec_t precision) : prec_(precision) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

MpInterval::MpInterval(mpfr_prec_t precision, const Rational& value) : MpInterval(precision) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

MpInterval::MpInterval(const MpInterval& other) : MpInterval(other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

MpInterval::MpInterval(MpInterval&& other) noexcept : MpInterval(other.prec_) { swap(*this, other); }

MpInterval& MpInterval::operator=(MpInterval other) noexcept {
  swap(*this, other);
  return *this;
}

MpInterval::~MpInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void swap(MpInterval& a, MpInterval& b) noexcept {
  std::swap(a.prec_, b.prec_);
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
}

MpInterval MpInterval::cos_pi(mpfr_prec_t precision, std::int64_t p, std::int64_t q) {
  if (q <= 0) {
    throw UsageError("cos_pi: denominator must be positive");
  }
  const std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q == 1) {
    // exact extremum, cos(j pi) = +-1
    return MpInterval(precision, Rational(p % 2 == 0 ? 1 : -1));
  }
  // Reduce to an angle in (0, pi) via symmetry; cos is decreasing there.
  std::int64_t r = p % (2 * q);
  if (r < 0) {
    r += 2 * q;
  }
  if (r > q) {
    r = 2 * q - r;
  }
  MpInterval out(precision);
  mpfr_t pi_lo, pi_hi, a_lo, a_hi;
  mpfr_inits2(precision + 16, pi_lo, pi_hi, a_lo, a_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_mul_si(a_lo, pi_lo, static_cast<long>(r), MPFR_RNDD);
  mpfr_div_si(a_lo, a_lo, static_cast<long>(q), MPFR_RNDD);
  mpfr_mul_si(a_hi, pi_hi, static_cast<long>(r), MPFR_RNDU);
  mpfr_div_si(a_hi, a_hi, static_cast<long>(q), MPFR_RNDU);
  // The enclosure [a_lo, a_hi] of r pi / q lies strictly inside (0, pi)
  // since its width is far below pi / q.
  mpfr_cos(out.lo_, a_hi, MPFR_RNDD);
  mpfr_cos(out.hi_, a_lo, MPFR_RNDU);
  mpfr_clears(pi_lo, pi_hi, a_lo, a_hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

MpInterval& MpInterval::operator+=(const MpInterval& rhs) {
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

MpInterval& MpInterval::operator-=(const MpInterval& rhs) {
  mpfr_t tmp;
  mpfr_init2(tmp, prec_);
  mpfr_sub(tmp, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo_, tmp);
  mpfr_clear(tmp);
  return *this;
}

MpInterval operator*(const MpInterval& a, const MpInterval& b) {
  MpInterval out(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) {
        mpfr_set(out.lo_, t, MPFR_RNDD);
      }
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) {
        mpfr_set(out.hi_, t, MPFR_RNDU);
      }
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

MpInterval MpInterval::reciprocal() const {
  if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0) {
    throw PrecisionError("reciprocal of an interval containing zero");
  }
  MpInterval out(prec_);
  mpfr_ui_div(out.lo_, 1, hi_, MPFR_RNDD);
  mpfr_ui_div(out.hi_, 1, lo_, MPFR_RNDU);
  return out;
}

MpInterval MpInterval::pow(std::uint64_t exponent) const {
  MpInterval result(prec_, Rational(1));
  MpInterval base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

RealInterval MpInterval::to_rational() const { return RealInterval{to_q(lo_), to_q(hi_)}; }

RealInterval float_eval(const CycloElement& a, unsigned precision_bits) {
  if (!a.is_real()) {
    throw DomainError("float_eval: element is not in the real subfield");
  }
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  const auto n = static_cast<std::int64_t>(a.field().order());
  MpInterval sum(prec);
  const auto coeffs = a.coeffs();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) {
      continue;
    }
    // Re(zeta_N^e) = cos(2 pi e / N); the imaginary parts cancel for real a.
    sum += MpInterval(prec, coeffs[e]) * MpInterval::cos_pi(prec, 2 * static_cast<std::int64_t>(e), n);
  }
  return sum.to_rational();
}

MpInterval f_interval(std::uint32_t k, HalfInt r, unsigned precision_bits) {
  // 4 sin^2(x) = 2 - 2 cos(2x) with 2x = pi * (2r) / k.
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  MpInterval c = MpInterval::cos_pi(prec, r.doubled(), static_cast<std::int64_t>(k));
  return MpInterval(prec, Rational(2)) - MpInterval(prec, Rational(2)) * c;
}

}  // namespace verlab
