#pragma once

#include "verlab/cyclotomic.hpp"

// Level-1 and level-2 Verlinde numbers as plain integer expressions. These
// never touch the cyclotomic engine; they are the second route for every
// closed-form comparison.
namespace verlab::closed_form {

Integer power(long base, long exponent);

// SL_4
Integer n1_sl4(int g);  // 2^(2g)
Integer n2_sl4(int g);  // 2^(3g-1) 3^(g-1) + 2^(3g-1) + 2^g 3^(g-1)

// Spin_{2n}
Integer n1_spin_even(int g);              // 2^(2g)
Integer n2_spin_even_plus(int n, int g);   // (2n)^(g-1) (n-1) + 2^(3g-1) n^(g-1)
Integer n2_spin_even_minus(int g);        // 2^(3g-1)

// Spin_{2n+1}
Integer n1_spin_odd(int g);               // 2^(g-1) (2^g + 1)
Integer n2_spin_odd_plus(int g);          // 2^(2g-1)
Integer n2_spin_odd_minus(int n, int g);  // (2n+1)^(g-1) (2^(2g-1) + n)

// SL_2
Integer n2_sl2(int g);                    // 2^(g-1) (2^g + 1)
Integer n1_sl2_twisted(int g);            // 2^(g-1) (2^g - 1)

Integer even_theta_characteristics(int g);  // 2^(g-1) (2^g + 1)
Integer odd_theta_characteristics(int g);   // 2^(g-1) (2^g - 1)

}  // namespace verlab::closed_form
