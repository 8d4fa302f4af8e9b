#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "verlab/cyclotomic.hpp"

namespace verlab::verify {

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool passed = false;
  std::string citation;  // the identity being certified, in formula form
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_passed = true;
  std::chrono::duration<double> elapsed{0};

  /// Appends an exact comparison; throws std::logic_error on an empty citation.
  void expect_equal(std::string name, const Integer& lhs, const Integer& rhs, std::string citation);
  void expect_equal(std::string name, const std::string& lhs, const std::string& rhs, std::string citation);
  std::size_t failures() const;
};

enum class Depth { quick, full };

VerificationReport check_fids(int k_lo, int k_hi);
VerificationReport check_closed_forms(int g_lo, int g_hi);
VerificationReport check_numer(int m_lo, int m_hi, int g_lo, int g_hi);

VerificationReport check_spin6_sl4(int l_lo, int l_hi, int g_lo, int g_hi);
VerificationReport check_spin4_level2(int g_lo, int g_hi);
VerificationReport check_spin3_bridge(int l_lo, int l_hi, int g_lo, int g_hi);
/// All three exceptional-isomorphism checks over the same ranges.
VerificationReport check_exceptional(int l_lo, int l_hi, int g_lo, int g_hi);

VerificationReport check_low_m(int g_lo, int g_hi);
VerificationReport check_reflection(int n_lo, int n_hi);
VerificationReport check_thaddeus(int g_lo, int g_hi);
VerificationReport check_pfaffian(int n_lo, int n_hi, int g_lo, int g_hi);

std::vector<VerificationReport> run_all(int g, Depth depth);

/// Runs one suite by CLI name at the preset ranges for `depth`; `range`
/// overrides the primary range (k for fids, m for numer, n for reflection,
/// l for exceptional, g otherwise). Throws UsageError on an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, int g, Depth depth,
                                          const std::vector<int>* range = nullptr);

const std::vector<std::string>& suite_names();

nlohmann::json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report, bool verbose = false);

}  // namespace verlab::verify
