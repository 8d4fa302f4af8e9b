#include "verlab/verlinde.hpp"

#include <algorithm>
#include <thread>

#include "verlab/errors.hpp"

namespace verlab {
namespace {

void require_genus(int genus) {
  if (genus < 1) throw ValidityError("genus must be >= 1");
}

void require_level(int level) {
  if (level < 0) throw ValidityError("level must be nonnegative");
}

// Evaluates fn(i) for i in [0, count) and returns results in index order.
template <typename Fn>
std::vector<CycloElement> map_terms(std::size_t count, unsigned threads, const FieldPtr& field, Fn fn) {
  std::vector<CycloElement> out(count, CycloElement(field));
  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

CycloElement fold(const std::vector<CycloElement>& terms, const FieldPtr& field) {
  CycloElement sum(field);
  for (const auto& t : terms) sum += t;
  return sum;
}

// Numerator constant of each term: n (l+n)^(n-1) for SL, 4 k^n for spin.
Integer term_constant(const GroupSpec& spec, int k) {
  Integer kn;
  if (spec.family == Family::SL) {
    mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(spec.n - 1));
    return spec.n * kn;
  }
  mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(spec.n));
  return 4 * kn;
}

Integer certify(const CycloElement& sum, const std::string& what) {
  auto q = as_rational(sum);
  if (!q) {
    throw IntegrityError(what + ": sum is not rational " + sum.to_string());
  }
  if (q->get_den() != 1) {
    throw IntegrityError(what + ": sum is not integral, got " + q->get_str());
  }
  if (q->get_num() < 0) {
    throw IntegrityError(what + ": sum is negative, got " + q->get_str());
  }
  return q->get_num();
}

std::vector<WeightSet> all_sets(const GroupSpec& spec, int level, std::size_t& plus_count) {
  std::vector<WeightSet> sets;
  switch (spec.family) {
    case Family::SL:
      sets = enum_sl(spec.n, level);
      plus_count = sets.size();
      break;
    case Family::SpinOdd:
    case Family::SpinEven: {
      auto split = spec.family == Family::SpinOdd ? enum_spin_odd(spec.n, level) : enum_spin_even(spec.n, level);
      plus_count = split.plus.size();
      sets = std::move(split.plus);
      sets.insert(sets.end(), split.minus.begin(), split.minus.end());
      break;
    }
  }
  return sets;
}

}  // namespace

LevelMap level_map(int m) {
  if (m == 3) return {3, 4};
  if (m == 4) {
    throw ValidityError("Spin_4 has no single Dynkin index; use the SL_2 x SL_2 product route");
  }
  if (m >= 5) return {m, 2};
  throw ValidityError("Dynkin index of C^m defined for m >= 3");
}

CycloElement product_factor(const GroupSpec& spec, const WeightSet& weights, int k) {
  const auto kk = static_cast<std::uint32_t>(k);
  FieldPtr field = make_field(2 * kk);
  CycloElement out = CycloElement::constant(field, 1);
  const auto& u = weights.entries();
  auto multiply = [&](HalfInt r) {
    if (r.doubled() % (2 * static_cast<std::int64_t>(k)) == 0) {
      throw IntegrityError("vanishing factor f(" + r.to_string() + ") for " + weights.to_string() +
                           " at k = " + std::to_string(k));
    }
    out *= f_value(kk, r);
  };
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      multiply(u[i] - u[j]);
      if (spec.family != Family::SL) multiply(u[i] + u[j]);
    }
  }
  if (spec.family == Family::SpinOdd) {
    for (const auto& x : u) multiply(x);
  }
  return out;
}

CycloSums verlinde_sum_elements(const GroupSpec& spec, int level, int genus, const EvalOptions& opts) {
  spec.validate();
  require_level(level);
  require_genus(genus);
  const int k = spec.shifted_level(level);
  FieldPtr field = make_field(2 * static_cast<std::uint32_t>(k));
  std::size_t plus_count = 0;
  const auto sets = all_sets(spec, level, plus_count);
  const Rational constant(term_constant(spec, k));
  const auto exponent = static_cast<std::uint64_t>(genus - 1);
  auto terms = map_terms(sets.size(), opts.threads, field, [&](std::size_t i) {
    if (exponent == 0) return CycloElement::constant(field, 1);
    return pow(invert(product_factor(spec, sets[i], k)) * constant, exponent);
  });
  std::vector<CycloElement> minus_terms(terms.begin() + static_cast<std::ptrdiff_t>(plus_count), terms.end());
  terms.resize(plus_count, CycloElement(field));
  return {fold(terms, field), fold(minus_terms, field)};
}

Integer verlinde_sl(int n, int level, int genus, const EvalOptions& opts) {
  const auto sums = verlinde_sum_elements(GroupSpec::sl(n), level, genus, opts);
  return certify(sums.plus, "N_" + std::to_string(level) + "(SL_" + std::to_string(n) + ")");
}

SplitNumber verlinde_spin(int m, int level, int genus, const EvalOptions& opts) {
  const GroupSpec spec = GroupSpec::spin(m);
  const auto sums = verlinde_sum_elements(spec, level, genus, opts);
  const std::string what = "N_" + std::to_string(level) + "(Spin_" + std::to_string(m) + ")";
  return {certify(sums.plus, what + "+"), certify(sums.minus, what + "-")};
}

SplitNumber verlinde_spin3(int level, int genus) {
  require_level(level);
  require_genus(genus);
  const auto k = static_cast<std::uint32_t>(level + 1);
  FieldPtr field = make_field(2 * k);
  const CycloElement four_k = CycloElement::constant(field, Rational(4 * k));
  const auto exponent = static_cast<std::uint64_t>(genus - 1);
  CycloElement plus(field);
  CycloElement minus(field);
  for (std::int64_t j = 1; j <= 2 * level + 1; ++j) {
    CycloElement term = pow(four_k * invert(f_value(k, HalfInt::from_doubled(j))), exponent);
    (j % 2 == 0 ? plus : minus) += term;
  }
  const std::string what = "N_" + std::to_string(level) + "(Spin_3)";
  return {certify(plus, what + "+"), certify(minus, what + "-")};
}

Integer thaddeus_twisted(int level, int genus) {
  require_level(level);
  require_genus(genus);
  const auto k = static_cast<std::uint32_t>(2 * level + 2);
  FieldPtr field = make_field(2 * k);
  const Rational constant(2 * k);
  const auto exponent = static_cast<std::uint64_t>(genus - 1);
  CycloElement sum(field);
  for (std::int64_t j = 1; j <= 2 * level + 1; ++j) {
    CycloElement term = pow(invert(f_value(k, HalfInt::from_int(j))) * constant, exponent);
    if (j % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return certify(sum, "twisted N_" + std::to_string(level) + "(SL_2, odd degree)");
}

Integer theta_sections(int m, int r, int genus, const EvalOptions& opts) {
  if (r < 1) throw ValidityError("theta power r must be positive");
  if (m == 3) return verlinde_spin3(2 * r, genus).total();
  if (m == 4) {
    const Integer factor = verlinde_sl(2, 2 * r, genus, opts);
    return factor * factor;
  }
  const LevelMap lm = level_map(m);
  return verlinde_spin(m, r * lm.dynkin_index, genus, opts).total();
}

Integer twisted_sections(int m, int r, int genus, const EvalOptions& opts) {
  if (r < 1) throw ValidityError("theta power r must be positive");
  Integer out;
  if (m == 3) {
    out = -verlinde_spin3(2 * r, genus).difference();
  } else if (m == 4) {
    const Integer factor = thaddeus_twisted(r, genus);
    out = factor * factor;
  } else {
    const LevelMap lm = level_map(m);
    const Integer diff = verlinde_spin(m, r * lm.dynkin_index, genus, opts).difference();
    out = m % 2 == 0 ? diff : Integer(-diff);
  }
  if (out < 0) {
    throw IntegrityError("twisted section count for Spin_" + std::to_string(m) + " is negative: " + out.get_str());
  }
  return out;
}

RealInterval verlinde_float(const GroupSpec& spec, int level, int genus, unsigned precision_bits) {
  spec.validate();
  require_level(level);
  require_genus(genus);
  const int k = spec.shifted_level(level);
  const auto kk = static_cast<std::uint32_t>(k);
  const auto prec = static_cast<mpfr_prec_t>(precision_bits);
  std::size_t plus_count = 0;
  const auto sets = all_sets(spec, level, plus_count);
  const MpInterval constant(prec, Rational(term_constant(spec, k)));
  const auto exponent = static_cast<std::uint64_t>(genus - 1);
  MpInterval sum(prec);
  for (const auto& weights : sets) {
    MpInterval factor(prec, Rational(1));
    const auto& u = weights.entries();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        factor = factor * f_interval(kk, u[i] - u[j], precision_bits);
        if (spec.family != Family::SL) factor = factor * f_interval(kk, u[i] + u[j], precision_bits);
      }
    }
    if (spec.family == Family::SpinOdd) {
      for (const auto& x : u) factor = factor * f_interval(kk, x, precision_bits);
    }
    if (!factor.is_positive()) {
      throw PrecisionError("product factor enclosure reaches zero for " + weights.to_string());
    }
    sum += (constant * factor.reciprocal()).pow(exponent);
  }
  RealInterval out = sum.to_rational();
  if (out.width() > Rational(1, 2)) {
    throw PrecisionError("interval wider than 1/2 at " + std::to_string(precision_bits) +
                         " bits; retry with higher precision");
  }
  return out;
}

}  // namespace verlab
