#pragma once

#include <vector>

#include "verlab/cyclotomic.hpp"

namespace verlab {

enum class Component { principal, translate };
enum class ThetaParity { plus, minus, full };
enum class Column { theta, twisted };

/// A principally polarised abelian variety of given dimension carrying the
/// level-m bundle m Xi. `translate` stands for the companion component P^-,
/// where m Xi exists only for even m.
struct AbelianSpec {
  int dimension = 0;
  int level = 1;
  Component component = Component::principal;
};

/// Dimensions of the curve's Prym configuration: J(C) and the 2^(2g) - 1
/// Pryms of the unramified double covers.
struct PrymConfiguration {
  int genus;
  int jacobian_dim;
  int prym_dim;
  Integer nontrivial_count;

  explicit PrymConfiguration(int g);
};

/// One row of the spin/Prym dimension table.
struct DimsRow {
  int m = 0;
  Integer spin_plus_side;   // h^0(M(Spin_m), Theta(C^m))
  Integer prym_plus_side;
  Integer spin_minus_side;  // h^0(M^-(Spin_m), Theta(C^m))
  Integer prym_minus_side;
  bool plus_match = false;
  bool minus_match = false;
};

/// full = m^d; plus/minus = (m^d +- 2^d)/2 for even m, (m^d +- 1)/2 for odd m.
/// Throws DomainError for odd m on the translate component.
Integer theta_dim(const AbelianSpec& spec, ThetaParity parity);

/// Sum over J_2(C) of the parity-matched theta dimensions (plus translates for even m).
Integer prym_side(int m, int g, Column column);

/// Spin moduli side of the table, including the hardcoded m = 1, 2 rows.
Integer spin_side(int m, int g, Column column);

std::vector<DimsRow> dims_table(int m_lo, int m_hi, int g);

struct PfaffianCount {
  Integer verlinde;
  Integer even_theta_chars;
};

/// N_1(Spin_{2n+1}) against the number of even theta characteristics.
PfaffianCount pfaffian_count(int n, int g);

}  // namespace verlab
