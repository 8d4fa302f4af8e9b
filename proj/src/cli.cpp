#include "verlab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlab/cache.hpp"
#include "verlab/errors.hpp"
#include "verlab/prym.hpp"
#include "verlab/verify.hpp"
#include "verlab/verlinde.hpp"
#include "verlab/weights.hpp"

namespace verlab::cli {
namespace {

using nlohmann::json;

// Parsed --group: SL_n, Spin_m with m >= 5, or the formal Spin_3 route.
struct GroupArg {
  std::string label;  // canonical "sl:4" / "spin:5"
  bool spin3 = false;
  GroupSpec spec;
};

GroupArg parse_group(std::string text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  auto number = [&](const std::string& digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw UsageError("malformed group '" + text + "'; expected sl:N, spin:M or A/B/D labels");
    }
    return std::stoi(digits);
  };
  int sl_n = 0, spin_m = 0;
  if (lower.rfind("sl:", 0) == 0) {
    sl_n = number(lower.substr(3));
  } else if (lower.rfind("spin:", 0) == 0) {
    spin_m = number(lower.substr(5));
  } else if (!lower.empty() && (lower[0] == 'a' || lower[0] == 'b' || lower[0] == 'd')) {
    const int rank = number(lower.substr(1));
    if (lower[0] == 'a') sl_n = rank + 1;
    if (lower[0] == 'b') spin_m = 2 * rank + 1;
    if (lower[0] == 'd') spin_m = 2 * rank;
  } else {
    throw UsageError("malformed group '" + text + "'; expected sl:N, spin:M or A/B/D labels");
  }
  GroupArg out;
  if (sl_n) {
    out.spec = GroupSpec::sl(sl_n);
    out.spec.validate();
    out.label = out.spec.to_string();
  } else if (spin_m == 3) {
    out.spin3 = true;
    out.label = "spin:3";
  } else {
    out.spec = GroupSpec::spin(spin_m);
    out.spec.validate();
    out.label = out.spec.to_string();
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, pos), &used);
    const int hi = std::stoi(text.substr(pos + 2));
    if (hi < lo) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("malformed range '" + text + "'; expected LO..HI");
  }
}

EvalOptions eval_options() {
  EvalOptions opts;
  if (const char* env = std::getenv("VERLAB_THREADS"); env && *env) {
    opts.threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  return opts;
}

std::string family_key(const GroupArg& g) {
  if (g.spin3) return "spin3";
  switch (g.spec.family) {
    case Family::SL:
      return "sl";
    case Family::SpinOdd:
      return "spinodd";
    case Family::SpinEven:
      return "spineven";
  }
  return "?";
}

struct Options {
  std::string group;
  int level = -1;
  int genus = -1;
  bool split = false;
  std::string m_range;
  std::string range;
  std::string suite;
  std::string depth = "quick";
  std::string format = "text";
  std::string cache;
  unsigned precision = 0;
  bool verbose = false;
};

struct ComputeResult {
  std::optional<std::string> plus, minus;
  std::string total;
  bool cached = false;
};

ComputeResult compute_values(const GroupArg& g, int level, int genus, bool split, ResultCache& cache) {
  const auto fam = family_key(g);
  const int n = g.spin3 ? 1 : g.spec.n;
  const bool has_split = g.spin3 || g.spec.family != Family::SL;
  const auto key_total = ResultCache::key(fam, n, level, genus, "total");
  const auto key_plus = ResultCache::key(fam, n, level, genus, "plus");
  const auto key_minus = ResultCache::key(fam, n, level, genus, "minus");

  ComputeResult r;
  auto t = cache.get(key_total);
  auto p = cache.get(key_plus);
  auto m = cache.get(key_minus);
  if (t && (!has_split || (p && m))) {
    r.cached = true;
  } else {
    const EvalOptions opts = eval_options();
    if (!has_split) {
      t = verlinde_sl(g.spec.n, level, genus, opts).get_str();
    } else {
      const SplitNumber s = g.spin3 ? verlinde_spin3(level, genus) : verlinde_spin(g.spec.dimension(), level, genus, opts);
      p = s.plus.get_str();
      m = s.minus.get_str();
      t = s.total().get_str();
      cache.put(key_plus, *p);
      cache.put(key_minus, *m);
    }
    cache.put(key_total, *t);
    cache.save();
  }
  r.total = *t;
  if (split && has_split) {
    r.plus = p;
    r.minus = m;
  }
  return r;
}

int cmd_compute(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.group.empty() || o.level < 0 || o.genus < 1) {
    throw UsageError("compute requires --group, --level >= 0 and --genus >= 1");
  }
  const GroupArg g = parse_group(o.group);
  ResultCache cache(ResultCache::resolve_path(o.cache.empty() ? std::nullopt : std::optional(o.cache)));
  const ComputeResult r = compute_values(g, o.level, o.genus, o.split, cache);

  std::optional<RealInterval> enclosure;
  if (o.precision > 0) {
    if (g.spin3) {
      err << "note: no interval route for spin:3; --precision ignored\n";
    } else {
      enclosure = verlinde_float(g.spec, o.level, o.genus, o.precision);
      if (!enclosure->contains(Rational(Integer(r.total)))) {
        err << "interval " << enclosure->to_string() << " does not contain " << r.total << "\n";
        return verification_failure;
      }
    }
  }

  const std::string level = std::to_string(o.level);
  const std::string genus = std::to_string(o.genus);
  if (o.format == "json") {
    json doc;
    doc["group"] = g.label;
    doc["level"] = level;
    doc["genus"] = genus;
    doc["plus"] = r.plus ? json(*r.plus) : json(nullptr);
    doc["minus"] = r.minus ? json(*r.minus) : json(nullptr);
    doc["total"] = r.total;
    doc["cached"] = r.cached;
    doc["engine_version"] = engine_version();
    out << doc.dump() << '\n';
  } else if (o.format == "csv") {
    out << "group,level,genus,plus,minus,total\n"
        << g.label << ',' << level << ',' << genus << ',' << r.plus.value_or("") << ',' << r.minus.value_or("") << ','
        << r.total << '\n';
  } else if (o.format == "md") {
    out << "| group | level | genus | plus | minus | total |\n|---|---|---|---|---|---|\n"
        << "| " << g.label << " | " << level << " | " << genus << " | " << r.plus.value_or("") << " | "
        << r.minus.value_or("") << " | " << r.total << " |\n";
  } else {
    out << "group: " << g.label << "\nlevel: " << level << "\ngenus: " << genus << '\n';
    if (r.plus) out << "plus: " << *r.plus << "\nminus: " << *r.minus << '\n';
    out << "total: " << r.total << '\n';
    if (enclosure) out << "interval: " << enclosure->to_string() << '\n';
  }
  return success;
}

json sets_json(const std::vector<WeightSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) {
    json entry = json::array();
    for (const auto& u : s.entries()) {
      if (u.is_integral()) {
        entry.push_back(u.doubled() / 2);
      } else {
        entry.push_back(u.to_string());
      }
    }
    arr.push_back(entry);
  }
  return arr;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.group.empty() || o.level < 0) throw UsageError("enumerate requires --group and --level >= 0");
  const GroupArg g = parse_group(o.group);
  std::optional<std::vector<WeightSet>> sl_sets;
  SplitSets split;
  if (g.spin3) {
    for (std::int64_t j = 1; j <= 2 * o.level + 1; ++j) {
      (j % 2 == 0 ? split.plus : split.minus).emplace_back(std::vector<HalfInt>{HalfInt::from_doubled(j)});
    }
  } else if (g.spec.family == Family::SL) {
    sl_sets = enum_sl(g.spec.n, o.level);
  } else if (g.spec.family == Family::SpinOdd) {
    split = enum_spin_odd(g.spec.n, o.level);
  } else {
    split = enum_spin_even(g.spec.n, o.level);
  }

  if (o.format == "json") {
    json doc{{"group", g.label}, {"level", std::to_string(o.level)}};
    if (sl_sets) {
      doc["sets"] = sets_json(*sl_sets);
    } else {
      doc["plus"] = sets_json(split.plus);
      doc["minus"] = sets_json(split.minus);
    }
    out << doc.dump() << '\n';
    return success;
  }
  auto emit = [&](const char* heading, const std::vector<WeightSet>& sets) {
    if (heading) out << heading << " (" << sets.size() << "):\n";
    for (const auto& s : sets) out << s.to_string() << '\n';
  };
  if (sl_sets) {
    emit(nullptr, *sl_sets);
  } else {
    emit("plus", split.plus);
    emit("minus", split.minus);
  }
  return success;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.m_range.empty() || o.genus < 2) throw UsageError("table requires --m LO..HI and --genus >= 2");
  const auto [lo, hi] = parse_range(o.m_range);
  const auto rows = dims_table(lo, hi, o.genus);
  const bool all = std::all_of(rows.begin(), rows.end(), [](const DimsRow& r) { return r.plus_match && r.minus_match; });
  auto mark = [](bool b) { return b ? "yes" : "NO"; };

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"m", std::to_string(r.m)},
                     {"spin_plus_side", r.spin_plus_side.get_str()},
                     {"prym_plus_side", r.prym_plus_side.get_str()},
                     {"plus_match", r.plus_match},
                     {"spin_minus_side", r.spin_minus_side.get_str()},
                     {"prym_minus_side", r.prym_minus_side.get_str()},
                     {"minus_match", r.minus_match}});
    }
    out << json{{"genus", std::to_string(o.genus)}, {"rows", arr}, {"all_match", all}}.dump() << '\n';
  } else if (o.format == "csv") {
    out << "m,spin_plus_side,prym_plus_side,plus_match,spin_minus_side,prym_minus_side,minus_match\n";
    for (const auto& r : rows) {
      out << r.m << ',' << r.spin_plus_side << ',' << r.prym_plus_side << ',' << mark(r.plus_match) << ','
          << r.spin_minus_side << ',' << r.prym_minus_side << ',' << mark(r.minus_match) << '\n';
    }
  } else if (o.format == "md") {
    out << "| m | h0(M(Spin_m), Theta(C^m)) | sum h0+(P, m Xi) | match | h0(M^-(Spin_m), Theta(C^m)) | "
           "sum h0-(P, m Xi) | match |\n|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      out << "| " << r.m << " | " << r.spin_plus_side << " | " << r.prym_plus_side << " | " << mark(r.plus_match)
          << " | " << r.spin_minus_side << " | " << r.prym_minus_side << " | " << mark(r.minus_match) << " |\n";
    }
  } else {
    out << "genus " << o.genus << '\n';
    for (const auto& r : rows) {
      out << "m=" << r.m << "  theta: " << r.spin_plus_side << " = " << r.prym_plus_side << " [" << mark(r.plus_match)
          << "]  twisted: " << r.spin_minus_side << " = " << r.prym_minus_side << " [" << mark(r.minus_match)
          << "]\n";
    }
  }
  return all ? success : verification_failure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite.empty()) throw UsageError("verify requires --suite");
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    throw UsageError("unknown suite '" + o.suite + "'");
  }
  if (o.depth != "quick" && o.depth != "full") throw UsageError("--depth must be quick or full");
  const int genus = o.genus < 0 ? 2 : o.genus;
  std::optional<std::vector<int>> range;
  if (!o.range.empty()) {
    const auto [lo, hi] = parse_range(o.range);
    range = std::vector<int>{lo, hi};
  }
  const auto reports = verify::run_suite(o.suite, genus, o.depth == "full" ? verify::Depth::full : verify::Depth::quick,
                                         range ? &*range : nullptr);
  bool ok = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(verify::to_json(r));
      ok = ok && r.all_passed;
    }
    out << json{{"reports", arr}, {"all_passed", ok}, {"engine_version", engine_version()}}.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out << verify::to_text(r, o.verbose);
      ok = ok && r.all_passed;
    }
    out << (ok ? "all suites passed\n" : "verification FAILED\n");
  }
  return ok ? success : verification_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Verlinde numbers for SL_n and Spin_m, with spin/Prym dimension checks", "verlab"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "md", "text"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--cache", o.cache, "Result cache file");
  };
  auto* compute = app.add_subcommand("compute", "Evaluate a Verlinde number");
  compute->add_option("--group", o.group, "sl:N, spin:M, or a Lie label (A3, B2, D4)")->required();
  compute->add_option("--level", o.level, "Level l >= 0")->required();
  compute->add_option("--genus", o.genus, "Genus g >= 1")->required();
  compute->add_flag("--split", o.split, "Report the tensor/spinor split");
  compute->add_option("--precision", o.precision, "Cross-check with a certified interval at BITS precision");
  common(compute);

  auto* enumerate = app.add_subcommand("enumerate", "List the alcove weight sets");
  enumerate->add_option("--group", o.group)->required();
  enumerate->add_option("--level", o.level)->required();
  common(enumerate);

  auto* table = app.add_subcommand("table", "Spin versus Prym dimension table");
  table->add_option("--m", o.m_range, "m range LO..HI")->required();
  table->add_option("--genus", o.genus)->required();
  common(table);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", o.suite, "fids|closed|numer|exceptional|lowm|reflection|thaddeus|pfaffian|all")
      ->required();
  verify_cmd->add_option("--genus", o.genus);
  verify_cmd->add_option("--range", o.range, "Primary parameter range LO..HI");
  verify_cmd->add_option("--depth", o.depth, "quick|full");
  verify_cmd->add_flag("--verbose,-v", o.verbose, "List every check");
  common(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "verlab: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (compute->parsed()) return cmd_compute(o, out, err);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (table->parsed()) return cmd_table(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "verlab: " << e.what() << '\n';
    return usage_error;
  } catch (const ValidityError& e) {
    err << "verlab: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "verlab: internal error: " << e.what() << '\n';
    return verification_failure;
  }
}

}  // namespace verlab::cli
