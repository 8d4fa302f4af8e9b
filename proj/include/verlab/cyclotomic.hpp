#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "verlab/half_int.hpp"

namespace verlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// The cyclotomic field Q(zeta_N), zeta_N = exp(2 pi i / N), presented as
/// Q[x] / Phi_N(x). Elements are stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1).
///
/// Fields are interned: make_field(N) returns the same instance for equal N,
/// so element compatibility is a pointer comparison.
class CycloField {
 public:
  explicit CycloField(std::uint32_t order);

  std::uint32_t order() const { return order_; }
  std::size_t degree() const { return minimal_poly_.size() - 1; }

  /// Coefficients of Phi_N, lowest degree first; monic.
  const std::vector<Integer>& minimal_poly() const { return minimal_poly_; }

  /// Reduced coordinates of zeta^e. Integral because Phi_N is monic.
  const std::vector<Integer>& power(std::int64_t e) const;

 private:
  std::uint32_t order_;
  std::vector<Integer> minimal_poly_;
  std::vector<std::vector<Integer>> powers_;  // zeta^e for e in [0, N)
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Φ_N computed by exact division of x^N - 1 by Φ_d over proper divisors d.
std::vector<Integer> cyclotomic_polynomial(std::uint32_t order);

/// Returns the interned field Q(zeta_N). Thread-safe.
FieldPtr make_field(std::uint32_t order);

/// Element of Q(zeta_N) in canonical reduced form. Coefficients share a single
/// positive denominator; the pair is kept in lowest terms so that equality is
/// coefficientwise.
class CycloElement {
 public:
  explicit CycloElement(FieldPtr field);

  static CycloElement constant(FieldPtr field, const Rational& value);
  static CycloElement zeta_power(FieldPtr field, std::int64_t exponent);
  /// Reduces an arbitrary-length coefficient vector modulo Phi_N.
  static CycloElement from_coeffs(FieldPtr field, const std::vector<Rational>& coeffs);

  const CycloField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  /// Image under zeta -> zeta^-1 (complex conjugation).
  CycloElement conjugate() const;
  bool is_real() const { return conjugate() == *this; }

  CycloElement& operator+=(const CycloElement& rhs);
  CycloElement& operator-=(const CycloElement& rhs);
  CycloElement& operator*=(const CycloElement& rhs);
  CycloElement& operator*=(const Rational& rhs);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const Rational& b) { return a *= b; }
  CycloElement operator-() const;

  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// e.g. "[2, 0, -1, 0]" or "[1/2, 3]"
  std::string to_string() const;

 private:
  CycloElement(FieldPtr field, std::vector<Integer> num, Integer den);
  void require_same_field(const CycloElement& other) const;
  void normalize();

  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

enum class ArithOp { add, sub, mul };

/// Exact a (op) b; throws UsageError if the fields differ.
CycloElement arith(const CycloElement& a, const CycloElement& b, ArithOp op);

/// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
/// Throws DivisionByZero on zero input.
CycloElement invert(const CycloElement& a);

CycloElement pow(const CycloElement& a, std::uint64_t exponent);

/// f_k(r) = 4 sin^2(r pi / k) = (1 - zeta_2k^(2r)) (1 - zeta_2k^(-2r)), in Q(zeta_2k).
CycloElement f_value(std::uint32_t k, HalfInt r);

/// The rational value if every non-constant coordinate vanishes.
std::optional<Rational> as_rational(const CycloElement& a);

}  // namespace verlab
