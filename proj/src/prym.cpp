#include "verlab/prym.hpp"

#include "verlab/closed_forms.hpp"
#include "verlab/errors.hpp"
#include "verlab/verlinde.hpp"

namespace verlab {

using closed_form::power;

PrymConfiguration::PrymConfiguration(int g)
    : genus(g), jacobian_dim(g), prym_dim(g - 1), nontrivial_count(power(2, 2 * g) - 1) {
  if (g < 2) throw ValidityError("Prym configuration needs genus >= 2");
}

Integer theta_dim(const AbelianSpec& spec, ThetaParity parity) {
  if (spec.level < 1) throw DomainError("theta level must be positive");
  if (spec.dimension < 0) throw DomainError("abelian variety dimension must be nonnegative");
  const bool even = spec.level % 2 == 0;
  if (spec.component == Component::translate && !even) {
    throw DomainError("m Xi is defined on the translate component only for even m");
  }
  const Integer full = power(spec.level, spec.dimension);
  if (parity == ThetaParity::full) return full;
  const Integer shift = even ? power(2, spec.dimension) : Integer(1);
  return parity == ThetaParity::plus ? Integer((full + shift) / 2) : Integer((full - shift) / 2);
}

Integer prym_side(int m, int g, Column column) {
  const PrymConfiguration config(g);
  const ThetaParity parity = column == Column::theta ? ThetaParity::plus : ThetaParity::minus;
  Integer sum = theta_dim({config.jacobian_dim, m, Component::principal}, parity);
  sum += config.nontrivial_count * theta_dim({config.prym_dim, m, Component::principal}, parity);
  if (m % 2 == 0) {
    sum += config.nontrivial_count * theta_dim({config.prym_dim, m, Component::translate}, parity);
  }
  return sum;
}

Integer spin_side(int m, int g, Column column) {
  if (m < 1) throw ValidityError("m must be positive");
  switch (m) {
    case 1:
      // M(Spin_1) = J_2(C); the twisted space is empty
      return column == Column::theta ? power(2, 2 * g) : Integer(0);
    case 2:
      // Theta(C^2) = 8 theta on J(C), undefined on M^-(Spin_2)
      return column == Column::theta ? power(8, g) : Integer(0);
    default:
      return column == Column::theta ? theta_sections(m, 1, g) : twisted_sections(m, 1, g);
  }
}

std::vector<DimsRow> dims_table(int m_lo, int m_hi, int g) {
  if (m_lo < 1 || m_hi < m_lo) throw ValidityError("dims table needs 1 <= m_lo <= m_hi");
  std::vector<DimsRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    DimsRow row;
    row.m = m;
    row.spin_plus_side = spin_side(m, g, Column::theta);
    row.prym_plus_side = prym_side(m, g, Column::theta);
    row.spin_minus_side = spin_side(m, g, Column::twisted);
    row.prym_minus_side = prym_side(m, g, Column::twisted);
    row.plus_match = row.spin_plus_side == row.prym_plus_side;
    row.minus_match = row.spin_minus_side == row.prym_minus_side;
    rows.push_back(std::move(row));
  }
  return rows;
}

PfaffianCount pfaffian_count(int n, int g) {
  return {verlinde_spin(2 * n + 1, 1, g).total(), closed_form::even_theta_characteristics(g)};
}

}  // namespace verlab
