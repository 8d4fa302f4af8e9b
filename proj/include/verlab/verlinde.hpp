#pragma once

#include "verlab/cyclotomic.hpp"
#include "verlab/interval.hpp"
#include "verlab/weights.hpp"

namespace verlab {

/// Tensor/spinor split N = N+ + N- of a spin Verlinde number.
struct SplitNumber {
  Integer plus = 0;
  Integer minus = 0;

  Integer total() const { return plus + minus; }
  /// N+ - N-
  Integer difference() const { return plus - minus; }
  friend bool operator==(const SplitNumber&, const SplitNumber&) = default;
};

/// Dynkin index of the vector representation C^m of Spin_m.
struct LevelMap {
  int m = 0;
  int dynkin_index = 0;
};

/// 4 for m = 3, 2 for m >= 5. m = 4 goes through SL_2 x SL_2 and has no
/// single index (ValidityError).
LevelMap level_map(int m);

struct EvalOptions {
  // Worker threads for the per-weight-set terms; 0 = hardware concurrency.
  unsigned threads = 1;
};

/// Psi_k (SL), Pi_k (even spin) or Phi_k (odd spin) of a weight set, in
/// Q(zeta_2k). Throws IntegrityError if a factor vanishes.
CycloElement product_factor(const GroupSpec& spec, const WeightSet& weights, int k);

/// Unreduced cyclotomic sums over the integral and half-integral weight sets
/// (SL puts everything in `plus`).
struct CycloSums {
  CycloElement plus;
  CycloElement minus;
};

CycloSums verlinde_sum_elements(const GroupSpec& spec, int level, int genus, const EvalOptions& opts = {});

/// N_l(SL_n) at genus g.
Integer verlinde_sl(int n, int level, int genus, const EvalOptions& opts = {});

/// N_l(Spin_m) split into tensor and spinor parts; m >= 5.
SplitNumber verlinde_spin(int m, int level, int genus, const EvalOptions& opts = {});

/// Odd-spin sum evaluated formally at n = 1 (k = l + 1). The total equals
/// N_{2l}(SL_2); half-integral u_1 go to `minus`.
SplitNumber verlinde_spin3(int level, int genus);

/// Alternating sum sum_j (-1)^(j+1) (2(2l+2) / f_{2l+2}(j))^(g-1), j = 1..2l+1,
/// evaluated over the SL_2 level-2l alcove in Q(zeta_{4l+4}).
Integer thaddeus_twisted(int level, int genus);

/// h^0(M(Spin_m), Theta(C^m)^r) = N_{r d_V}(Spin_m); m = 4 via N_{2r}(SL_2)^2.
Integer theta_sections(int m, int r, int genus, const EvalOptions& opts = {});

/// (-1)^m (N+ - N-) at level r d_V; m = 4 via the square of the twisted SL_2 value.
/// Throws IntegrityError if the value is negative.
Integer twisted_sections(int m, int r, int genus, const EvalOptions& opts = {});

/// The same sum through certified floating-point intervals. Throws
/// PrecisionError if the enclosure is wider than 1/2.
RealInterval verlinde_float(const GroupSpec& spec, int level, int genus, unsigned precision_bits);

}  // namespace verlab
