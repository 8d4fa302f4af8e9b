#include "verlab/weights.hpp"

#include <algorithm>

#include "verlab/errors.hpp"

namespace verlab {

GroupSpec GroupSpec::spin(int m) {
  if (m == 4) {
    throw ValidityError(
        "Spin_4: the even-spin alcove is infinite for n = 2; use the SL_2 x SL_2 product route "
        "(N_l(Spin_4) = N_l(SL_2)^2)");
  }
  if (m < 5) {
    throw ValidityError("Spin_" + std::to_string(m) + " has no alcove sum; m >= 5 required");
  }
  GroupSpec out = m % 2 ? GroupSpec{Family::SpinOdd, (m - 1) / 2} : GroupSpec{Family::SpinEven, m / 2};
  return out;
}

int GroupSpec::dimension() const {
  switch (family) {
    case Family::SL:
      return n;
    case Family::SpinOdd:
      return 2 * n + 1;
    case Family::SpinEven:
      return 2 * n;
  }
  return 0;
}

int GroupSpec::shifted_level(int level) const {
  switch (family) {
    case Family::SL:
      return level + n;
    case Family::SpinOdd:
      return level + 2 * n - 1;
    case Family::SpinEven:
      return level + 2 * n - 2;
  }
  return 0;
}

void GroupSpec::validate() const {
  switch (family) {
    case Family::SL:
      if (n < 2) throw ValidityError("SL_n requires n >= 2");
      break;
    case Family::SpinOdd:
      if (n < 2) throw ValidityError("Spin_{2n+1} requires n >= 2 (m >= 5); use the spin3 route for m = 3");
      break;
    case Family::SpinEven:
      if (n < 3) {
        throw ValidityError(
            "Spin_{2n} requires n >= 3 (m >= 6); the n = 2 alcove is infinite, use the SL_2 x SL_2 "
            "product route");
      }
      break;
  }
}

std::string GroupSpec::to_string() const {
  if (family == Family::SL) {
    return "sl:" + std::to_string(n);
  }
  return "spin:" + std::to_string(dimension());
}

WeightSet::WeightSet(std::vector<HalfInt> entries) : entries_(std::move(entries)), parity_(Parity::integral) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1] < entries_[i])) {
      throw DomainError("weight set entries must be strictly increasing");
    }
    if (!(entries_[i] - entries_[i - 1]).is_integral()) {
      throw DomainError("weight set entries must differ by integers");
    }
  }
  if (!entries_.empty() && !entries_.front().is_integral()) {
    parity_ = Parity::half_integral;
  }
}

std::string WeightSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += entries_[i].to_string();
  }
  return out + "}";
}

namespace {

// Depth-first scan of strictly increasing doubled entries with fixed parity.
// `admit(prefix, next)` decides whether `next` may follow `prefix`
// (return +1 accept, 0 skip, -1 stop the loop at this depth).
template <typename Admit>
void scan(std::vector<std::int64_t>& prefix, std::size_t length, std::int64_t lo, std::int64_t hi,
          Admit& admit, std::vector<WeightSet>& out) {
  if (prefix.size() == length) {
    std::vector<HalfInt> entries;
    entries.reserve(length);
    for (auto d : prefix) entries.push_back(HalfInt::from_doubled(d));
    out.emplace_back(std::move(entries));
    return;
  }
  const std::int64_t start = prefix.empty() ? lo : prefix.back() + 2;
  for (std::int64_t d = start; d <= hi; d += 2) {
    const int verdict = admit(prefix, d);
    if (verdict < 0) break;
    if (verdict == 0) continue;
    prefix.push_back(d);
    scan(prefix, length, lo, hi, admit, out);
    prefix.pop_back();
  }
}

// First value >= lo with the parity of `parity`.
std::int64_t align(std::int64_t lo, int parity) {
  std::int64_t v = lo;
  while (((v % 2) + 2) % 2 != parity) ++v;
  return v;
}

}  // namespace

std::vector<WeightSet> enum_sl(int n, int level) {
  GroupSpec::sl(n).validate();
  if (level < 0) throw ValidityError("level must be nonnegative");
  const std::int64_t k2 = 2 * static_cast<std::int64_t>(level + n);
  std::vector<WeightSet> out;
  std::vector<std::int64_t> prefix{0};
  auto admit = [&](const std::vector<std::int64_t>&, std::int64_t d) { return d < k2 ? 1 : -1; };
  scan(prefix, static_cast<std::size_t>(n), 0, k2, admit, out);
  return out;
}

SplitSets enum_spin_odd(int n, int level) {
  GroupSpec{Family::SpinOdd, n}.validate();
  if (level < 0) throw ValidityError("level must be nonnegative");
  const std::int64_t k = level + 2 * n - 1;
  const std::int64_t k2 = 2 * k;
  const auto len = static_cast<std::size_t>(n);
  auto admit = [&](const std::vector<std::int64_t>& prefix, std::int64_t d) {
    if (prefix.size() + 1 < len) {
      // u_i >= k/2 for i < n forces u_{n-1} + u_n > k
      return d >= k ? -1 : 1;
    }
    return prefix.back() + d < k2 ? 1 : -1;
  };
  SplitSets out;
  std::vector<std::int64_t> prefix;
  scan(prefix, len, align(1, 0), k2, admit, out.plus);
  scan(prefix, len, align(1, 1), k2, admit, out.minus);
  return out;
}

SplitSets enum_spin_even(int n, int level) {
  GroupSpec{Family::SpinEven, n}.validate();
  if (level < 0) throw ValidityError("level must be nonnegative");
  const std::int64_t k = level + 2 * n - 2;
  const std::int64_t k2 = 2 * k;
  const auto len = static_cast<std::size_t>(n);
  auto admit = [&](const std::vector<std::int64_t>& prefix, std::int64_t d) {
    if (prefix.size() == 1 && prefix[0] + d <= 0) {
      return 0;
    }
    if (prefix.size() + 1 < len) {
      return d >= k ? -1 : 1;
    }
    return prefix.back() + d < k2 ? 1 : -1;
  };
  SplitSets out;
  std::vector<std::int64_t> prefix;
  scan(prefix, len, align(-k2, 0), k2, admit, out.plus);
  scan(prefix, len, align(-k2, 1), k2, admit, out.minus);
  return out;
}

bool in_alcove(const GroupSpec& spec, int level, const std::vector<HalfInt>& u) {
  const std::size_t n = u.size();
  const std::int64_t k2 = 2 * static_cast<std::int64_t>(spec.shifted_level(level));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (u[i + 1].doubled() <= u[i].doubled()) return false;
    if ((u[i + 1].doubled() - u[i].doubled()) % 2 != 0) return false;
  }
  switch (spec.family) {
    case Family::SL:
      if (n != static_cast<std::size_t>(spec.n)) return false;
      if (u[0].doubled() != 0) return false;
      return u[n - 1].doubled() < k2;
    case Family::SpinOdd:
      if (n != static_cast<std::size_t>(spec.n)) return false;
      return u[0].doubled() > 0 && u[n - 2].doubled() + u[n - 1].doubled() < k2;
    case Family::SpinEven:
      if (n != static_cast<std::size_t>(spec.n) || n < 2) return false;
      return u[0].doubled() + u[1].doubled() > 0 && u[n - 2].doubled() + u[n - 1].doubled() < k2;
  }
  return false;
}

WeightSet reflect(const WeightSet& weights, int k, Reflection gen) {
  std::vector<HalfInt> e = weights.entries();
  if (e.empty()) throw DomainError("cannot reflect an empty weight set");
  if (gen == Reflection::flip_low) {
    e.front() = -e.front();
  } else {
    e.back() = HalfInt::from_int(k) - e.back();
  }
  std::sort(e.begin(), e.end());
  const int n = static_cast<int>(e.size());
  const int level = k - 2 * n + 2;
  const GroupSpec spec{Family::SpinEven, n};
  if (level < 0 || !in_alcove(spec, level, e)) {
    throw DomainError("reflection of " + weights.to_string() + " leaves the level-" + std::to_string(level) +
                      " alcove");
  }
  return WeightSet(std::move(e));
}

WeightCount weight_count(const GroupSpec& spec, int level) {
  WeightCount out;
  switch (spec.family) {
    case Family::SL:
      out.total = out.plus = enum_sl(spec.n, level).size();
      return out;
    case Family::SpinOdd: {
      auto s = enum_spin_odd(spec.n, level);
      out.plus = s.plus.size();
      out.minus = s.minus.size();
      break;
    }
    case Family::SpinEven: {
      auto s = enum_spin_even(spec.n, level);
      out.plus = s.plus.size();
      out.minus = s.minus.size();
      break;
    }
  }
  out.total = out.plus + out.minus;
  return out;
}

}  // namespace verlab
