#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "verlab/half_int.hpp"

namespace verlab {

enum class Family { SL, SpinOdd, SpinEven };

/// A group family with its rank parameter: SL_n, Spin_{2n+1} or Spin_{2n}.
struct GroupSpec {
  Family family = Family::SL;
  int n = 2;

  static GroupSpec sl(int n) { return {Family::SL, n}; }
  /// Spin_m for m >= 5; throws ValidityError for m = 4 and below.
  static GroupSpec spin(int m);

  /// m for the spin families, n for SL.
  int dimension() const;
  /// Cyclotomic level k: l+n (SL), l+2n-1 (odd spin), l+2n-2 (even spin).
  int shifted_level(int level) const;
  /// Throws ValidityError if the weight sums are not defined for this rank.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

enum class Parity { integral, half_integral };

/// Strictly increasing half-integers with integral pairwise differences.
class WeightSet {
 public:
  /// Throws DomainError if the entries are unsorted or of mixed integrality.
  explicit WeightSet(std::vector<HalfInt> entries);

  const std::vector<HalfInt>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Parity parity() const { return parity_; }
  const HalfInt& operator[](std::size_t i) const { return entries_[i]; }

  /// "{1/2,3/2,5/2}"
  std::string to_string() const;

  friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const WeightSet& a, const WeightSet& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<HalfInt> entries_;
  Parity parity_;
};

/// Tensor (integral) and spinor (half-integral) parts of a spin alcove.
struct SplitSets {
  std::vector<WeightSet> plus;
  std::vector<WeightSet> minus;
};

/// {0 = u_0 < u_1 < ... < u_{n-1} < l+n}, lexicographic order.
std::vector<WeightSet> enum_sl(int n, int level);

/// {0 < u_1 < ... < u_n}, u_{n-1} + u_n < l+2n-1.
SplitSets enum_spin_odd(int n, int level);

/// {u_1 < ... < u_n}, u_1 + u_2 > 0, u_{n-1} + u_n < l+2n-2. Requires n >= 3:
/// for n = 2 the collection is infinite (use the SL_2 x SL_2 route).
SplitSets enum_spin_even(int n, int level);

enum class Reflection { flip_low, flip_high };

/// flip_low: u_1 -> -u_1; flip_high: u_n -> k - u_n; result re-sorted.
/// Throws DomainError if the image is not an even-spin alcove weight for k.
WeightSet reflect(const WeightSet& weights, int k, Reflection gen);

struct WeightCount {
  std::size_t total = 0;
  std::size_t plus = 0;
  std::size_t minus = 0;
};

WeightCount weight_count(const GroupSpec& spec, int level);

/// Membership test written directly from the alcove inequalities; used to
/// audit the enumerators.
bool in_alcove(const GroupSpec& spec, int level, const std::vector<HalfInt>& entries);

}  // namespace verlab
