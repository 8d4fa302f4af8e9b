#include "verlab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "verlab/closed_forms.hpp"
#include "verlab/errors.hpp"
#include "verlab/prym.hpp"
#include "verlab/verlinde.hpp"
#include "verlab/weights.hpp"

namespace verlab::verify {

using closed_form::power;

void VerificationReport::expect_equal(std::string name, const std::string& lhs, const std::string& rhs,
                                      std::string citation) {
  if (citation.empty()) {
    throw std::logic_error("check '" + name + "' has no citation");
  }
  const bool ok = lhs == rhs;
  all_passed = all_passed && ok;
  checks.push_back({std::move(name), lhs, rhs, ok, std::move(citation)});
}

void VerificationReport::expect_equal(std::string name, const Integer& lhs, const Integer& rhs,
                                      std::string citation) {
  expect_equal(std::move(name), lhs.get_str(), rhs.get_str(), std::move(citation));
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

using Clock = std::chrono::steady_clock;

// Times a suite body and stamps the report.
template <typename Body>
VerificationReport run_timed(std::string suite, Body body) {
  VerificationReport report;
  report.suite = std::move(suite);
  const auto start = Clock::now();
  body(report);
  report.elapsed = Clock::now() - start;
  return report;
}

std::string tag(std::initializer_list<std::pair<const char*, long>> params) {
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

// Rational value of an element, or its coordinates when irrational.
std::string exact_value(const CycloElement& a) {
  if (auto q = as_rational(a)) return q->get_str();
  return "irrational " + a.to_string();
}

CycloElement f_int(int k, long r) { return f_value(static_cast<std::uint32_t>(k), HalfInt::from_int(r)); }

CycloElement product_of_powers(int k, long r_hi, long (*exponent)(long)) {
  CycloElement out = CycloElement::constant(make_field(2 * static_cast<std::uint32_t>(k)), 1);
  for (long r = 1; r <= r_hi; ++r) {
    const long e = exponent(r);
    if (e > 0) out *= pow(f_int(k, r), static_cast<std::uint64_t>(e));
  }
  return out;
}

long floor_half(long r) { return r / 2; }
long ceil_half(long r) { return (r + 1) / 2; }
long one(long) { return 1; }

}  // namespace

VerificationReport check_fids(int k_lo, int k_hi) {
  if (k_lo < 2 || k_hi < k_lo) throw UsageError("check_fids needs 2 <= k_lo <= k_hi");
  return run_timed("fids", [&](VerificationReport& rep) {
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto kk = static_cast<std::uint32_t>(k);
      long total = 0, sym_neg = 0, sym_refl = 0, dup = 0;
      for (std::int64_t d = -2 * k; d <= 2 * k; ++d) {
        const HalfInt r = HalfInt::from_doubled(d);
        const CycloElement fr = f_value(kk, r);
        ++total;
        sym_neg += fr == f_value(kk, -r);
        sym_refl += fr == f_value(kk, HalfInt::from_int(k) - r);
        // f(2r) = f(r) f(k/2 - r)
        dup += f_value(kk, r + r) == fr * f_value(kk, HalfInt::from_doubled(k) - r);
      }
      const std::string t = tag({{"k", k}});
      rep.expect_equal("f(r)=f(-r) " + t, std::to_string(sym_neg), std::to_string(total), "f(r) = f(-r)");
      rep.expect_equal("f(r)=f(k-r) " + t, std::to_string(sym_refl), std::to_string(total), "f(r) = f(k-r)");
      rep.expect_equal("f(k/2)=4 " + t, exact_value(f_value(kk, HalfInt::from_doubled(k))), "4", "f(k/2) = 4");
      rep.expect_equal("f(2r)=f(r)f(k/2-r) " + t, std::to_string(dup), std::to_string(total),
                       "f(2r) = f(r) f(k/2 - r)");
      rep.expect_equal("prod f(r)=k^2 " + t, exact_value(product_of_powers(k, k - 1, one)), power(k, 2).get_str(),
                       "prod_{r=1}^{k-1} f(r) = k^2");
      if (k % 2 == 1) {
        const long n = (k - 1) / 2;
        rep.expect_equal("prod_{r<=n} f(r)=2n+1 " + t, exact_value(product_of_powers(k, n, one)),
                         std::to_string(2 * n + 1), "k = 2n+1: prod_{r=1}^{n} f(r) = 2n+1");
        rep.expect_equal("prod f(r)^[r/2]=(2n+1)^n " + t, exact_value(product_of_powers(k, 2 * n, floor_half)),
                         power(2 * n + 1, n).get_str(), "k = 2n+1: prod_{r=1}^{2n} f(r)^[r/2] = (2n+1)^n");
      } else {
        const long n = k / 2;
        rep.expect_equal("prod_{r<n} f(r)=n " + t, exact_value(product_of_powers(k, n - 1, one)), std::to_string(n),
                         "k = 2n: prod_{r=1}^{n-1} f(r) = n");
        rep.expect_equal("prod f(r)^[r/2]=2^(n-1)n^n " + t, exact_value(product_of_powers(k, 2 * n - 1, floor_half)),
                         Integer(power(2, n - 1) * power(n, n)).get_str(),
                         "k = 2n: prod_{r=1}^{2n-1} f(r)^[r/2] = 2^(n-1) n^n");
        rep.expect_equal("prod f(r)^[(r+1)/2]=2^(n+1)n^n " + t,
                         exact_value(product_of_powers(k, 2 * n - 1, ceil_half)),
                         Integer(power(2, n + 1) * power(n, n)).get_str(),
                         "k = 2n: prod_{r=1}^{2n-1} f(r)^[(r+1)/2] = 2^(n+1) n^n");
      }
    }
  });
}

VerificationReport check_closed_forms(int g_lo, int g_hi) {
  if (g_lo < 2 || g_hi < g_lo) throw UsageError("check_closed_forms needs 2 <= g_lo <= g_hi");
  return run_timed("closed", [&](VerificationReport& rep) {
    for (int g = g_lo; g <= g_hi; ++g) {
      rep.expect_equal("N1(SL4) " + tag({{"g", g}}), verlinde_sl(4, 1, g), closed_form::n1_sl4(g),
                       "N_1(SL_4) = 2^(2g)");
      rep.expect_equal("N2(SL4) " + tag({{"g", g}}), verlinde_sl(4, 2, g), closed_form::n2_sl4(g),
                       "N_2(SL_4) = 2^(3g-1) 3^(g-1) + 2^(3g-1) + 2^g 3^(g-1)");
      for (int n = 3; n <= 6; ++n) {
        const std::string t = tag({{"n", n}, {"g", g}});
        rep.expect_equal("N1(Spin_2n) " + t, verlinde_spin(2 * n, 1, g).total(), closed_form::n1_spin_even(g),
                         "N_1(Spin_2n) = 2^(2g)");
        const SplitNumber s = verlinde_spin(2 * n, 2, g);
        rep.expect_equal("N2+(Spin_2n) " + t, s.plus, closed_form::n2_spin_even_plus(n, g),
                         "N_2^+(Spin_2n) = (2n)^(g-1) (n-1) + 2^(3g-1) n^(g-1)");
        rep.expect_equal("N2-(Spin_2n) " + t, s.minus, closed_form::n2_spin_even_minus(g),
                         "N_2^-(Spin_2n) = 2^(3g-1)");
      }
      for (int n = 2; n <= 5; ++n) {
        const std::string t = tag({{"n", n}, {"g", g}});
        rep.expect_equal("N1(Spin_2n+1) " + t, verlinde_spin(2 * n + 1, 1, g).total(), closed_form::n1_spin_odd(g),
                         "N_1(Spin_2n+1) = 2^(g-1) (2^g + 1)");
        const SplitNumber s = verlinde_spin(2 * n + 1, 2, g);
        rep.expect_equal("N2+(Spin_2n+1) " + t, s.plus, closed_form::n2_spin_odd_plus(g),
                         "N_2^+(Spin_2n+1) = 2^(2g-1)");
        rep.expect_equal("N2-(Spin_2n+1) " + t, s.minus, closed_form::n2_spin_odd_minus(n, g),
                         "N_2^-(Spin_2n+1) = (2n+1)^(g-1) (2^(2g-1) + n)");
      }
    }
  });
}

VerificationReport check_numer(int m_lo, int m_hi, int g_lo, int g_hi) {
  if (m_lo < 5 || m_hi < m_lo || g_lo < 2 || g_hi < g_lo) {
    throw UsageError("check_numer needs 5 <= m_lo <= m_hi and 2 <= g_lo <= g_hi");
  }
  return run_timed("numer", [&](VerificationReport& rep) {
    for (int m = m_lo; m <= m_hi; ++m) {
      for (int g = g_lo; g <= g_hi; ++g) {
        const std::string t = tag({{"m", m}, {"g", g}});
        const SplitNumber s = verlinde_spin(m, 2, g);
        const Integer signed_diff = m % 2 == 0 ? s.difference() : Integer(-s.difference());
        rep.expect_equal("N2 = sum h0+ " + t, s.total(), prym_side(m, g, Column::theta),
                         m % 2 == 0 ? "N_2^+ + N_2^- = sum_{J_2} h0+(P, m Xi) + sum_{eta != 0} h0+(P^-, m Xi)"
                                    : "N_2^+ + N_2^- = sum_{J_2} h0+(P, m Xi)");
        rep.expect_equal("(-1)^m(N2+ - N2-) = sum h0- " + t, signed_diff, prym_side(m, g, Column::twisted),
                         m % 2 == 0 ? "N_2^+ - N_2^- = sum_{J_2} h0-(P, m Xi) + sum_{eta != 0} h0-(P^-, m Xi)"
                                    : "-N_2^+ + N_2^- = sum_{J_2} h0-(P, m Xi)");
      }
    }
  });
}

VerificationReport check_spin6_sl4(int l_lo, int l_hi, int g_lo, int g_hi) {
  return run_timed("exceptional.spin6", [&](VerificationReport& rep) {
    for (int l = l_lo; l <= l_hi; ++l) {
      for (int g = g_lo; g <= g_hi; ++g) {
        rep.expect_equal("N_l(Spin6) = N_l(SL4) " + tag({{"l", l}, {"g", g}}), verlinde_spin(6, l, g).total(),
                         verlinde_sl(4, l, g), "Spin_6 = SL_4: N_l(Spin_6) = N_l(SL_4)");
      }
    }
  });
}

VerificationReport check_spin4_level2(int g_lo, int g_hi) {
  return run_timed("exceptional.spin4", [&](VerificationReport& rep) {
    for (int g = g_lo; g <= g_hi; ++g) {
      const std::string t = tag({{"g", g}});
      const Integer plus = closed_form::n2_spin_even_plus(2, g);
      const Integer minus = closed_form::n2_spin_even_minus(g);
      const Integer sl2 = verlinde_sl(2, 2, g);
      rep.expect_equal("N2+ + N2- at n=2 = N2(SL2)^2 " + t, plus + minus, sl2 * sl2,
                       "Spin_4 = SL_2 x SL_2: N_2(Spin_4) = N_2(SL_2)^2");
      const Integer twisted = thaddeus_twisted(1, g);
      rep.expect_equal("N2+ - N2- at n=2 = twisted(SL2)^2 " + t, plus - minus, twisted * twisted,
                       "Spin_4 = SL_2 x SL_2: N_2^+ - N_2^- = h0(SU(2,1), L_1)^2");
    }
  });
}

VerificationReport check_spin3_bridge(int l_lo, int l_hi, int g_lo, int g_hi) {
  return run_timed("exceptional.spin3", [&](VerificationReport& rep) {
    for (int l = l_lo; l <= l_hi; ++l) {
      for (int g = g_lo; g <= g_hi; ++g) {
        rep.expect_equal("spin3(l).total = N_2l(SL2) " + tag({{"l", l}, {"g", g}}), verlinde_spin3(l, g).total(),
                         verlinde_sl(2, 2 * l, g), "formal n = 1 odd-spin sum = N_2l(SL_2)");
      }
    }
  });
}

VerificationReport check_exceptional(int l_lo, int l_hi, int g_lo, int g_hi) {
  return run_timed("exceptional", [&](VerificationReport& rep) {
    for (auto part : {check_spin6_sl4(std::max(l_lo, 0), l_hi, g_lo, g_hi), check_spin4_level2(g_lo, g_hi),
                      check_spin3_bridge(std::max(l_lo, 0), l_hi, g_lo, g_hi)}) {
      for (auto& c : part.checks) rep.expect_equal(c.name, c.lhs, c.rhs, c.citation);
    }
  });
}

VerificationReport check_low_m(int g_lo, int g_hi) {
  if (g_lo < 2 || g_hi < g_lo) throw UsageError("check_low_m needs 2 <= g_lo <= g_hi");
  return run_timed("lowm", [&](VerificationReport& rep) {
    for (int g = g_lo; g <= g_hi; ++g) {
      const std::string t = tag({{"g", g}});
      const PrymConfiguration config(g);
      for (const auto& row : dims_table(1, 4, g)) {
        const std::string rt = tag({{"m", row.m}, {"g", g}});
        rep.expect_equal("table theta column " + rt, row.spin_plus_side, row.prym_plus_side,
                         "h0(M(Spin_m), Theta(C^m)) = prym theta sum");
        rep.expect_equal("table twisted column " + rt, row.spin_minus_side, row.prym_minus_side,
                         "h0(M^-(Spin_m), Theta(C^m)) = prym twisted sum");
      }
      // m = 2: H0+-(J, 8 theta) against the level-2 Prym spaces
      const Integer j8_plus = theta_dim({g, 8, Component::principal}, ThetaParity::plus);
      const Integer j8_minus = theta_dim({g, 8, Component::principal}, ThetaParity::minus);
      rep.expect_equal("m=2 H0+(J,8theta) " + t, j8_plus,
                       theta_dim({g, 2, Component::principal}, ThetaParity::full) +
                           config.nontrivial_count * theta_dim({g - 1, 2, Component::principal}, ThetaParity::full),
                       "H0+(J, 8 theta) = sum_{J_2} H0(P, 2 Xi)");
      rep.expect_equal("m=2 H0-(J,8theta) " + t, j8_minus,
                       config.nontrivial_count * theta_dim({g - 1, 2, Component::translate}, ThetaParity::full),
                       "H0-(J, 8 theta) = sum_{eta != 0} H0(P^-, 2 Xi)");
      rep.expect_equal("m=2 Schottky closed form " + t, j8_plus, power(2, g) + (power(2, 2 * g) - 1) * power(2, g - 1),
                       "(8^g + 2^g)/2 = 2^g + (2^(2g) - 1) 2^(g-1)");
      // m = 4: symmetric and exterior squares
      const Integer d = verlinde_sl(2, 2, g);
      rep.expect_equal("h0(SU(2), L0^2) " + t, d, closed_form::n2_sl2(g), "h0(SU_C(2), L_0^2) = 2^(g-1)(2^g + 1)");
      const Integer plus_p = theta_dim({g, 4, Component::principal}, ThetaParity::plus) +
                             config.nontrivial_count * theta_dim({g - 1, 4, Component::principal}, ThetaParity::plus);
      const Integer plus_t = config.nontrivial_count * theta_dim({g - 1, 4, Component::translate}, ThetaParity::plus);
      rep.expect_equal("m=4 S^2 " + t, d * (d + 1) / 2, plus_p, "S^2 H0(SU_C(2), L_0^2) = sum_{J_2} H0+(P, 4 Xi)");
      rep.expect_equal("m=4 wedge^2 " + t, d * (d - 1) / 2, plus_t,
                       "wedge^2 H0(SU_C(2), L_0^2) = sum_{eta != 0} H0+(P^-, 4 Xi)");
      const Integer dt = thaddeus_twisted(1, g);
      rep.expect_equal("h0(SU(2,1), L1) " + t, dt, closed_form::n1_sl2_twisted(g),
                       "h0(SU_C(2,1), L_1) = 2^(g-1)(2^g - 1)");
      const Integer minus_p = theta_dim({g, 4, Component::principal}, ThetaParity::minus) +
                              config.nontrivial_count * theta_dim({g - 1, 4, Component::principal}, ThetaParity::minus);
      const Integer minus_t = config.nontrivial_count * theta_dim({g - 1, 4, Component::translate}, ThetaParity::minus);
      rep.expect_equal("m=4 twisted S^2 " + t, dt * (dt + 1) / 2, minus_p,
                       "S^2 H0(SU_C(2,1), L_1) = sum_{J_2} H0-(P, 4 Xi)");
      rep.expect_equal("m=4 twisted wedge^2 " + t, dt * (dt - 1) / 2, minus_t,
                       "wedge^2 H0(SU_C(2,1), L_1) = sum_{eta != 0} H0-(P^-, 4 Xi)");
    }
  });
}

VerificationReport check_reflection(int n_lo, int n_hi) {
  if (n_lo < 3 || n_hi < n_lo) throw UsageError("check_reflection needs 3 <= n_lo <= n_hi");
  return run_timed("reflection", [&](VerificationReport& rep) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const int k = 2 * n;
      const std::string t = tag({{"n", n}});
      const SplitSets sets = enum_spin_even(n, 2);
      const GroupSpec spec{Family::SpinEven, n};
      std::vector<WeightSet> family = sets.plus;
      family.insert(family.end(), sets.minus.begin(), sets.minus.end());
      const std::set<WeightSet> members(family.begin(), family.end());

      long closed = 0, invariant = 0, commuting = 0;
      for (const auto& u : family) {
        try {
          const WeightSet lo = reflect(u, k, Reflection::flip_low);
          const WeightSet hi = reflect(u, k, Reflection::flip_high);
          closed += members.count(lo) && members.count(hi);
          const CycloElement pu = product_factor(spec, u, k);
          invariant += pu == product_factor(spec, lo, k) && pu == product_factor(spec, hi, k);
          commuting += reflect(lo, k, Reflection::flip_high) == reflect(hi, k, Reflection::flip_low);
        } catch (const DomainError&) {
          // counted as a failure by the tallies below
        }
      }
      const std::string size = std::to_string(family.size());
      rep.expect_equal("orbit stays in P_2 " + t, std::to_string(closed), size, "Z/2 x Z/2 acts on P_2(2n)");
      rep.expect_equal("Pi constant on orbits " + t, std::to_string(invariant), size,
                       "Pi_k(U) is invariant under the Z/2 x Z/2 reflections");
      rep.expect_equal("generators commute " + t, std::to_string(commuting), size,
                       "the two reflections commute on P_2(2n)");
      rep.expect_equal("|P_2^+| " + t, std::to_string(sets.plus.size()), std::to_string(n + 3), "|P_2^+(2n)| = n + 3");
      rep.expect_equal("|P_2^-| " + t, std::to_string(sets.minus.size()), "4", "|P_2^-(2n)| = 4");

      // P_2^- is the orbit of {1/2, 3/2, ..., n - 1/2}
      std::vector<HalfInt> base;
      for (int i = 0; i < n; ++i) base.push_back(HalfInt::from_doubled(2 * i + 1));
      const WeightSet u_half(base);
      std::set<WeightSet> orbit{u_half};
      for (bool grew = true; grew;) {
        grew = false;
        for (const auto& v : std::vector<WeightSet>(orbit.begin(), orbit.end())) {
          for (auto gen : {Reflection::flip_low, Reflection::flip_high}) {
            grew |= orbit.insert(reflect(v, k, gen)).second;
          }
        }
      }
      const std::set<WeightSet> minus_set(sets.minus.begin(), sets.minus.end());
      rep.expect_equal("P_2^- is one orbit " + t, orbit == minus_set ? "orbit" : "not an orbit", "orbit",
                       "P_2^-(2n) is a single Z/2 x Z/2 orbit of size 4");
      rep.expect_equal("Pi(1/2,...,n-1/2) " + t, exact_value(product_factor(spec, u_half, k)),
                       Rational(Rational(power(2 * n, n)) / 2).get_str(), "Pi_2n({1/2, ..., n-1/2}) = (2n)^n / 2");

      // U_l = {0, ..., n} with l removed
      for (int l = 0; l <= n; ++l) {
        std::vector<HalfInt> entries;
        for (int i = 0; i <= n; ++i) {
          if (i != l) entries.push_back(HalfInt::from_int(i));
        }
        const Integer expected =
            (l == 0 || l == n) ? power(2 * n, n - 1) : Integer(power(2, n + 1) * power(n, n - 1));
        rep.expect_equal("Pi(U_l) " + tag({{"n", n}, {"l", l}}), exact_value(product_factor(spec, WeightSet(entries), k)),
                         expected.get_str(),
                         (l == 0 || l == n) ? "Pi_2n(U_l) = (2n)^(n-1) for l = 0, n"
                                            : "Pi_2n(U_l) = 2^(n+1) n^(n-1) for 0 < l < n");
      }
    }
  });
}

VerificationReport check_thaddeus(int g_lo, int g_hi) {
  if (g_lo < 2 || g_hi < g_lo) throw UsageError("check_thaddeus needs 2 <= g_lo <= g_hi");
  return run_timed("thaddeus", [&](VerificationReport& rep) {
    for (int g = g_lo; g <= g_hi; ++g) {
      for (int l = 1; l <= 3; ++l) {
        const std::string t = tag({{"l", l}, {"g", g}});
        const Integer alternating = thaddeus_twisted(l, g);
        rep.expect_equal("alternating sum = N- - N+ " + t, alternating, -verlinde_spin3(l, g).difference(),
                         "sum_j (-1)^(j+1) ((l+1)/sin^2(j pi/(2l+2)))^(g-1) = -N_2l^+ + N_2l^-");
        if (l == 1) {
          rep.expect_equal("twisted level 1 closed form " + t, alternating, closed_form::n1_sl2_twisted(g),
                           "h0(SU_C(2,1), L_1) = 2^(g-1)(2^g - 1)");
        }
        if (l == 2) {
          rep.expect_equal("twisted level 2 = prym odd sum " + t, alternating, prym_side(3, g, Column::twisted),
                           "h0(SU_C(2,1), L_1^2) = sum_{J_2} h0-(P, 3 Xi)");
        }
      }
      if (g == 2) {
        rep.expect_equal("twisted l=1 g=2", thaddeus_twisted(1, 2), Integer(6), "h0(SU_C(2,1), L_1) = 6 at g = 2");
        rep.expect_equal("twisted l=2 g=2", thaddeus_twisted(2, 2), Integer(19), "h0(SU_C(2,1), L_1^2) = 19 at g = 2");
      }
    }
  });
}

VerificationReport check_pfaffian(int n_lo, int n_hi, int g_lo, int g_hi) {
  return run_timed("pfaffian", [&](VerificationReport& rep) {
    for (int n = n_lo; n <= n_hi; ++n) {
      for (int g = g_lo; g <= g_hi; ++g) {
        const PfaffianCount c = pfaffian_count(n, g);
        rep.expect_equal("N1(Spin_2n+1) = even theta chars " + tag({{"n", n}, {"g", g}}), c.verlinde,
                         c.even_theta_chars, "h0(M(Spin_2n+1), P) = number of even theta characteristics");
      }
    }
  });
}

namespace {

struct Ranges {
  int k_hi, numer_m_hi, refl_n_hi, exc_l_hi, pf_n_hi;
};

Ranges preset(Depth depth) {
  return depth == Depth::quick ? Ranges{12, 8, 5, 2, 3} : Ranges{60, 12, 8, 4, 5};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fids",       "closed",   "numer",    "exceptional", "lowm",
                                              "reflection", "thaddeus", "pfaffian", "all"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, int g, Depth depth, const std::vector<int>* range) {
  if (g < 2) throw UsageError("verification needs genus >= 2");
  const Ranges r = preset(depth);
  const bool full = depth == Depth::full;
  auto lo_or = [&](int fallback) { return range ? (*range)[0] : fallback; };
  auto hi_or = [&](int fallback) { return range ? (*range)[1] : fallback; };
  // full depth sweeps genus 2..max(5, g); quick stays at g
  const int g_lo = full ? 2 : g;
  const int g_hi = full ? std::max(5, g) : g;

  if (name == "fids") return {check_fids(lo_or(2), hi_or(r.k_hi))};
  if (name == "closed") return {check_closed_forms(lo_or(g_lo), hi_or(g_hi))};
  if (name == "numer") return {check_numer(lo_or(5), hi_or(r.numer_m_hi), g_lo, g_hi)};
  if (name == "exceptional") {
    if (!full) return {check_exceptional(lo_or(1), hi_or(r.exc_l_hi), g, g)};
    return {check_spin6_sl4(lo_or(1), hi_or(4), 2, std::max(4, g)), check_spin4_level2(2, std::max(6, g)),
            check_spin3_bridge(range ? (*range)[0] : 0, hi_or(4), 2, g_hi)};
  }
  if (name == "lowm") return {check_low_m(lo_or(g_lo), hi_or(g_hi))};
  if (name == "reflection") return {check_reflection(lo_or(3), hi_or(r.refl_n_hi))};
  if (name == "thaddeus") return {check_thaddeus(lo_or(g_lo), hi_or(full ? std::max(4, g) : g))};
  if (name == "pfaffian") return {check_pfaffian(lo_or(2), hi_or(r.pf_n_hi), g_lo, g_hi)};
  if (name == "all") {
    if (range) throw UsageError("--range is not accepted with suite 'all'");
    return run_all(g, depth);
  }
  throw UsageError("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_all(int g, Depth depth) {
  std::vector<VerificationReport> out;
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    for (auto& rep : run_suite(name, g, depth)) out.push_back(std::move(rep));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.suite < b.suite; });
  return out;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"passed", c.passed}, {"citation", c.citation}});
  }
  return {{"suite", report.suite},
          {"all_passed", report.all_passed},
          {"checks", checks},
          {"elapsed_seconds", report.elapsed.count()}};
}

std::string to_text(const VerificationReport& report, bool verbose) {
  std::ostringstream os;
  os << (report.all_passed ? "PASS " : "FAIL ") << report.suite << ": " << (report.checks.size() - report.failures())
     << "/" << report.checks.size() << " checks";
  os.setf(std::ios::fixed);
  os.precision(3);
  os << " (" << report.elapsed.count() << " s)\n";
  for (const auto& c : report.checks) {
    if (verbose || !c.passed) {
      os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.lhs << " vs " << c.rhs << "  [" << c.citation
         << "]\n";
    }
  }
  return os.str();
}

}  // namespace verlab::verify
