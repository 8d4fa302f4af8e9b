#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "verlab/cyclotomic.hpp"

namespace verlab {

// Closed interval with exact rational endpoints.
struct RealInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  std::string to_string(int digits = 20) const;
};

/// Outward-rounded interval over MPFR floats at a fixed precision.
class MpInterval {
 public:
  explicit MpInterval(mpfr_prec_t precision);
  MpInterval(mpfr_prec_t precision, const Rational& value);
  MpInterval(const MpInterval& other);
  MpInterval(MpInterval&& other) noexcept;
  MpInterval& operator=(MpInterval other) noexcept;
  ~MpInterval();

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  /// cos(pi * p / q); q > 0.
  static MpInterval cos_pi(mpfr_prec_t precision, std::int64_t p, std::int64_t q);

  MpInterval& operator+=(const MpInterval& rhs);
  MpInterval& operator-=(const MpInterval& rhs);
  friend MpInterval operator+(MpInterval a, const MpInterval& b) { return a += b; }
  friend MpInterval operator-(MpInterval a, const MpInterval& b) { return a -= b; }
  friend MpInterval operator*(const MpInterval& a, const MpInterval& b);

  /// 1/x for an interval strictly away from zero.
  MpInterval reciprocal() const;
  MpInterval pow(std::uint64_t exponent) const;
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }

  RealInterval to_rational() const;

  friend void swap(MpInterval& a, MpInterval& b) noexcept;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Certified enclosure of a real cyclotomic element. Throws DomainError if
/// the element is not fixed by complex conjugation.
RealInterval float_eval(const CycloElement& a, unsigned precision_bits);

/// Enclosure of 4 sin^2(r pi / k) computed directly from the sine, without
/// passing through the cyclotomic representation.
MpInterval f_interval(std::uint32_t k, HalfInt r, unsigned precision_bits);

}  // namespace verlab
