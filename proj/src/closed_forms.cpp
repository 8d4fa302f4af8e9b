#include "verlab/closed_forms.hpp"

#include "verlab/errors.hpp"

namespace verlab::closed_form {

Integer power(long base, long exponent) {
  if (exponent < 0) throw UsageError("negative exponent in closed form");
  Integer out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

Integer n1_sl4(int g) { return power(2, 2 * g); }

Integer n2_sl4(int g) {
  return power(2, 3 * g - 1) * power(3, g - 1) + power(2, 3 * g - 1) + power(2, g) * power(3, g - 1);
}

Integer n1_spin_even(int g) { return power(2, 2 * g); }

Integer n2_spin_even_plus(int n, int g) {
  return power(2 * n, g - 1) * (n - 1) + power(2, 3 * g - 1) * power(n, g - 1);
}

Integer n2_spin_even_minus(int g) { return power(2, 3 * g - 1); }

Integer n1_spin_odd(int g) { return power(2, g - 1) * (power(2, g) + 1); }

Integer n2_spin_odd_plus(int g) { return power(2, 2 * g - 1); }

Integer n2_spin_odd_minus(int n, int g) { return power(2 * n + 1, g - 1) * (power(2, 2 * g - 1) + n); }

Integer n2_sl2(int g) { return power(2, g - 1) * (power(2, g) + 1); }

Integer n1_sl2_twisted(int g) { return power(2, g - 1) * (power(2, g) - 1); }

Integer even_theta_characteristics(int g) { return power(2, g - 1) * (power(2, g) + 1); }

Integer odd_theta_characteristics(int g) { return power(2, g - 1) * (power(2, g) - 1); }

}  // namespace verlab::closed_form
