#include "verlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "verlab/errors.hpp"

namespace verlab {
namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) {
    p.pop_back();
  }
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

// Exact quotient of a by a monic b; the remainder must vanish.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    throw IntegrityError("cyclotomic division: dividend degree too small");
  }
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) {
      continue;
    }
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] -= c * b[j];
    }
  }
  for (const auto& r : a) {
    if (r != 0) {
      throw IntegrityError("cyclotomic division left a remainder");
    }
  }
  return q;
}

// (q, r) with a = q b + r, deg r < deg b; b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) {
    return {RatPoly{}, std::move(a)};
  }
  RatPoly q(a.size() - db);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) {
      continue;
    }
    Rational c = a[i] / lead;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      a[i - db + j] -= c * b[j];
    }
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) {
    a.resize(b.size());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] -= b[i];
  }
  trim(a);
  return a;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(std::uint32_t order) {
  if (order == 0) {
    throw UsageError("cyclotomic order must be positive");
  }
  IntPoly num(order + 1, 0);
  num[0] = -1;
  num[order] = 1;
  for (std::uint32_t d = 1; d < order; ++d) {
    if (order % d == 0) {
      num = divide_exact(std::move(num), make_field(d)->minimal_poly());
    }
  }
  trim(num);
  return num;
}

CycloField::CycloField(std::uint32_t order) : order_(order), minimal_poly_(cyclotomic_polynomial(order)) {
  const std::size_t deg = degree();
  powers_.reserve(order_);
  std::vector<Integer> cur(deg, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e < order_; ++e) {
    powers_.push_back(cur);
    // multiply by x, then eliminate x^deg using the monic minimal polynomial
    Integer carry = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) {
      cur[i] = cur[i - 1];
    }
    cur[0] = 0;
    if (carry != 0) {
      for (std::size_t i = 0; i < deg; ++i) {
        cur[i] -= carry * minimal_poly_[i];
      }
    }
  }
}

const std::vector<Integer>& CycloField::power(std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(order_);
  std::int64_t r = e % n;
  if (r < 0) {
    r += n;
  }
  return powers_[static_cast<std::size_t>(r)];
}

FieldPtr make_field(std::uint32_t order) {
  if (order == 0) {
    throw UsageError("cyclotomic order must be positive");
  }
  static std::recursive_mutex mutex;
  static std::map<std::uint32_t, FieldPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(order); it != cache.end()) {
    return it->second;
  }
  auto field = std::make_shared<const CycloField>(order);
  cache.emplace(order, field);
  return field;
}

// ---------------------------------------------------------------------------

CycloElement::CycloElement(FieldPtr field) : field_(std::move(field)), num_(field_->degree(), 0) {}

CycloElement::CycloElement(FieldPtr field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycloElement CycloElement::constant(FieldPtr field, const Rational& value) {
  CycloElement out(std::move(field));
  out.num_[0] = value.get_num();
  out.den_ = value.get_den();
  return out;
}

CycloElement CycloElement::zeta_power(FieldPtr field, std::int64_t exponent) {
  auto num = field->power(exponent);
  return CycloElement(std::move(field), std::move(num), 1);
}

CycloElement CycloElement::from_coeffs(FieldPtr field, const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num(field->degree(), 0);
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) {
      continue;
    }
    const Integer scaled = coeffs[e].get_num() * (den / coeffs[e].get_den());
    const auto& p = field->power(static_cast<std::int64_t>(e));
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (p[i] != 0) {
        num[i] += scaled * p[i];
      }
    }
  }
  return CycloElement(std::move(field), std::move(num), std::move(den));
}

void CycloElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) {
      c = -c;
    }
  }
  if (den_ == 1) {
    return;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) {
      break;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

void CycloElement::require_same_field(const CycloElement& other) const {
  if (field_ != other.field_ && field_->order() != other.field_->order()) {
    throw UsageError("cyclotomic operands live in different fields: Q(zeta_" +
                     std::to_string(field_->order()) + ") vs Q(zeta_" +
                     std::to_string(other.field_->order()) + ")");
  }
}

Rational CycloElement::coeff(std::size_t i) const {
  Rational out(num_.at(i), den_);
  out.canonicalize();
  return out;
}

std::vector<Rational> CycloElement::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out.push_back(coeff(i));
  }
  return out;
}

bool CycloElement::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

CycloElement CycloElement::conjugate() const {
  std::vector<Integer> num(num_.size(), 0);
  for (std::size_t e = 0; e < num_.size(); ++e) {
    if (num_[e] == 0) {
      continue;
    }
    const auto& p = field_->power(-static_cast<std::int64_t>(e));
    for (std::size_t i = 0; i < num.size(); ++i) {
      if (p[i] != 0) {
        num[i] += num_[e] * p[i];
      }
    }
  }
  return CycloElement(field_, std::move(num), den_);
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
  require_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] += rhs.num_[i];
    }
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] = num_[i] * rhs.den_ + rhs.num_[i] * den_;
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) { return *this += -rhs; }

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.num_) {
    c = -c;
  }
  return out;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  a.require_same_field(b);
  const std::size_t deg = a.num_.size();
  // Product in Z[x]/(x^N - 1) first, then reduce each power of zeta.
  std::vector<Integer> wide(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.num_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < deg; ++j) {
      if (b.num_[j] != 0) {
        mpz_addmul(wide[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
  }
  std::vector<Integer> num(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(deg));
  for (std::size_t e = deg; e < wide.size(); ++e) {
    if (wide[e] == 0) {
      continue;
    }
    const auto& p = a.field_->power(static_cast<std::int64_t>(e));
    for (std::size_t i = 0; i < deg; ++i) {
      if (p[i] != 0) {
        mpz_addmul(num[i].get_mpz_t(), wide[e].get_mpz_t(), p[i].get_mpz_t());
      }
    }
  }
  return CycloElement(a.field_, std::move(num), a.den_ * b.den_);
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) { return *this = *this * rhs; }

CycloElement& CycloElement::operator*=(const Rational& rhs) {
  for (auto& c : num_) {
    c *= rhs.get_num();
  }
  den_ *= rhs.get_den();
  normalize();
  return *this;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.field_->order() == b.field_->order() && a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycloElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i) {
      os << ", ";
    }
    os << coeff(i).get_str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

CycloElement arith(const CycloElement& a, const CycloElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
  }
  throw UsageError("unknown arithmetic operation");
}

CycloElement invert(const CycloElement& a) {
  if (a.is_zero()) {
    throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(a.field().order()) + ")");
  }
  const FieldPtr& field = a.field_ptr();
  RatPoly r0(field->minimal_poly().begin(), field->minimal_poly().end());
  RatPoly r1 = a.coeffs();
  trim(r1);
  RatPoly s0;
  RatPoly s1{Rational(1)};
  // Invariant: s_i * a == r_i (mod Phi_N).
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) {
    throw IntegrityError("element shares a factor with the cyclotomic polynomial");
  }
  const Rational c = r1[0];
  for (auto& x : s1) {
    x /= c;
  }
  return CycloElement::from_coeffs(field, s1);
}

CycloElement pow(const CycloElement& a, std::uint64_t exponent) {
  CycloElement result = CycloElement::constant(a.field_ptr(), 1);
  CycloElement base = a;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

CycloElement f_value(std::uint32_t k, HalfInt r) {
  if (k == 0) {
    throw UsageError("f_k requires k >= 1");
  }
  FieldPtr field = make_field(2 * k);
  const std::int64_t d = r.doubled();
  CycloElement out = CycloElement::constant(field, 2);
  out -= CycloElement::zeta_power(field, d);
  out -= CycloElement::zeta_power(field, -d);
  return out;
}

std::optional<Rational> as_rational(const CycloElement& a) {
  const auto& num = a.numerators();
  for (std::size_t i = 1; i < num.size(); ++i) {
    if (num[i] != 0) {
      return std::nullopt;
    }
  }
  return a.coeff(0);
}

}  // namespace verlab
