#include "parkfn/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/simulator.hpp"
#include "parkfn/text_format.hpp"
#include "parkfn/verify.hpp"

namespace parkfn::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr const char* kGrammar = R"TXT(Syntax:
  permutation   compact digits "31524" (n <= 9) or comma-separated "3,1,5,2,4"
  classical     preference vector "2,1,1" (or compact "211")
  set family    brace groups "{2},{2,3},{1,2,3}"; interval variants require
                every set to be contiguous
  ordered       parenthesized preference lists "(2,1),(2,1)", most preferred first
  profile file  JSON {"n": 3, "allowed": [[1,2],[3],[1,2,3]]}
Variants (short or long name):
  pf|classical  sp|subset  ksp|k-subset  lsp|size-profile  ipf|interval
  kipf|k-interval  kint|interval-profile  opf|ordered  lopf|ordered-profile
Exit codes: 0 success, 1 parking failed or a check failed, 2 usage error.
Environment: PARKFN_BUDGET overrides the 100000000-family oracle budget.)TXT";

OutputFormat parse_format(const std::string& text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw UsageError("unknown format '" + text + "' (expected plain, json or csv)");
}

Variant parse_variant(const std::string& text) {
  auto tag = VariantSpec::parse(text);
  if (!tag) throw UsageError("unknown variant '" + text + "'");
  return *tag;
}

SizeProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read profile file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_profile_json(buffer.str());
}

VariantSpec make_spec(Variant tag, std::optional<int> k, const std::optional<SizeProfile>& profile) {
  const std::string name(VariantSpec::long_name(tag));
  if (VariantSpec::needs_k(tag) != k.has_value()) {
    throw UsageError(k ? "variant " + name + " takes no -k" : "variant " + name + " requires -k");
  }
  if (VariantSpec::needs_profile(tag) != profile.has_value()) {
    throw UsageError(profile ? "variant " + name + " takes no --profile"
                             : "variant " + name + " requires --profile");
  }
  switch (tag) {
    case Variant::classical: return VariantSpec::classical();
    case Variant::subset: return VariantSpec::subset();
    case Variant::k_subset: return VariantSpec::k_subset(*k);
    case Variant::size_profile: return VariantSpec::size_profile(*profile);
    case Variant::interval: return VariantSpec::interval();
    case Variant::k_interval: return VariantSpec::k_interval(*k);
    case Variant::interval_profile: return VariantSpec::interval_profile(*profile);
    case Variant::ordered: return VariantSpec::ordered();
    case Variant::ordered_profile: return VariantSpec::ordered_profile(*profile);
  }
  throw std::logic_error("unhandled variant");
}

// ---- stats ---------------------------------------------------------------

int cmd_stats(const std::string& text, OutputFormat format, std::ostream& out) {
  const Permutation p = parse_permutation(text);
  const int n = p.size();
  std::vector<int> local, car, window;
  std::vector<bool> tail;
  for (int i = 1; i <= n; ++i) {
    local.push_back(local_inversions(p, i));
    car.push_back(car_inversions(p, i));
    window.push_back(dominance_window(p, i));
    tail.push_back(ends_increasing(p, i));
  }
  if (format == OutputFormat::json) {
    out << json{{"permutation", p.str()}, {"n", n},           {"inv", inversions(p)},
                {"local_inv", local},    {"car_inv", car},   {"ascents", ascents(p)},
                {"a", window},           {"in_snk", tail}}
               .dump()
        << '\n';
    return kExitOk;
  }
  if (format == OutputFormat::csv) throw UsageError("stats supports plain or json output");
  std::vector<int> tail_flags(tail.begin(), tail.end());
  out << "permutation: " << p.str() << '\n'
      << "n: " << n << '\n'
      << "inv: " << inversions(p) << '\n'
      << "local_inv: " << join(local) << '\n'
      << "car_inv: " << join(car) << '\n'
      << "ascents: " << ascents(p) << '\n'
      << "a: " << join(window) << '\n'
      << "in_snk: " << join(tail_flags) << '\n';
  return kExitOk;
}

// ---- park ----------------------------------------------------------------

void check_set_family(const VariantSpec& spec, const SetFamily& family) {
  const int n = family.size();
  spec.validate_for(n);
  const bool intervals = spec.tag() == Variant::interval || spec.tag() == Variant::k_interval ||
                         spec.tag() == Variant::interval_profile;
  for (int car = 1; car <= n; ++car) {
    const SpotSet& s = family[car];
    if (intervals && !s.is_interval()) {
      throw UsageError("set " + std::to_string(car) + " is not an interval");
    }
    if (spec.has_k() && s.size() != spec.k()) {
      throw UsageError("set " + std::to_string(car) + " has size " + std::to_string(s.size()) +
                       ", expected " + std::to_string(spec.k()));
    }
    if (spec.has_profile()) {
      const auto& sizes = spec.profile().allowed(car);
      if (std::find(sizes.begin(), sizes.end(), s.size()) == sizes.end()) {
        throw UsageError("set " + std::to_string(car) + " has a size the profile does not allow");
      }
    }
  }
}

int report_park(const ParkResult& result, std::ostream& out) {
  if (result.parked()) {
    out << result.outcome().str() << '\n';
    return kExitOk;
  }
  out << "car " << result.failed_car() << " failed\n";
  return kExitNegative;
}

int cmd_park(const VariantSpec& spec, const std::string& text, std::ostream& out) {
  switch (spec.tag()) {
    case Variant::classical: {
      auto prefs = parse_int_sequence(text);
      const int n = static_cast<int>(prefs.size());
      for (int c : prefs) {
        if (c < 1 || c > n) {
          throw ParseError("bad token '" + std::to_string(c) + "': preference outside 1.." + std::to_string(n));
        }
      }
      return report_park(park_classical(prefs), out);
    }
    case Variant::ordered:
    case Variant::ordered_profile: {
      OrderedFamily family = parse_ordered_family(text);
      spec.validate_for(family.size());
      if (spec.has_profile()) {
        for (int car = 1; car <= family.size(); ++car) {
          const auto& sizes = spec.profile().allowed(car);
          const int len = static_cast<int>(family.prefs()[static_cast<std::size_t>(car - 1)].size());
          if (std::find(sizes.begin(), sizes.end(), len) == sizes.end()) {
            throw UsageError("list " + std::to_string(car) + " has a length the profile does not allow");
          }
        }
      }
      return report_park(park_ordered(family), out);
    }
    default: {
      SetFamily family = parse_set_family(text);
      check_set_family(spec, family);
      return report_park(park_subsets(family), out);
    }
  }
}

// ---- count / table -------------------------------------------------------

int resolve_n(const VariantSpec& spec, std::optional<int> n) {
  if (spec.has_profile()) {
    if (n && *n != spec.profile().size()) {
      throw UsageError("-n " + std::to_string(*n) + " disagrees with the profile's n = " +
                       std::to_string(spec.profile().size()));
    }
    return spec.profile().size();
  }
  if (!n) throw UsageError("-n is required");
  if (*n < 1) throw UsageError("-n must be >= 1");
  return *n;
}

int cmd_count(const VariantSpec& spec, std::optional<int> n_opt, const std::optional<std::string>& outcome,
              std::ostream& out) {
  std::optional<Permutation> p;
  if (outcome) {
    p = parse_permutation(*outcome);
    if (!n_opt && !spec.has_profile()) n_opt = p->size();
  }
  const int n = resolve_n(spec, n_opt);
  try {
    spec.validate_for(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (p) {
    if (p->size() != n) {
      throw UsageError("outcome " + p->str() + " has length " + std::to_string(p->size()) + ", expected " +
                       std::to_string(n));
    }
    out << formula_outcome(spec, *p) << '\n';
  } else {
    out << formula_total(spec, n) << '\n';
  }
  return kExitOk;
}

// k expressions for tables: an integer, "n", "n-<d>", or "all".
std::vector<int> table_ks(const std::string& expr, int n) {
  if (expr == "all") {
    std::vector<int> ks;
    for (int k = 1; k <= n; ++k) ks.push_back(k);
    return ks;
  }
  int k = 0;
  if (expr == "n") {
    k = n;
  } else if (expr.rfind("n-", 0) == 0) {
    try {
      k = n - std::stoi(expr.substr(2));
    } catch (const std::exception&) {
      throw UsageError("bad -k expression '" + expr + "'");
    }
  } else {
    std::size_t used = 0;
    try {
      k = std::stoi(expr, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != expr.size()) throw UsageError("bad -k expression '" + expr + "'");
  }
  if (k < 1 || k > n) return {};
  return {k};
}

struct TableRow {
  int n;
  std::optional<int> k;
  BigCount count;
};

int cmd_table(Variant tag, const std::optional<std::string>& k_expr, const std::optional<SizeProfile>& profile,
              int from, int to, OutputFormat format, std::ostream& out) {
  if (from < 1 || to < from) {
    throw UsageError("invalid range " + std::to_string(from) + ".." + std::to_string(to));
  }
  if (VariantSpec::needs_k(tag) != k_expr.has_value()) {
    throw UsageError(k_expr ? "variant takes no -k" : "variant requires -k");
  }
  if (profile && (from != profile->size() || to != profile->size())) {
    throw UsageError("profile fixes n = " + std::to_string(profile->size()) + "; range must be that single n");
  }
  std::vector<TableRow> rows;
  for (int n = from; n <= to; ++n) {
    if (k_expr) {
      for (int k : table_ks(*k_expr, n)) rows.push_back({n, k, formula_total(make_spec(tag, k, profile), n)});
    } else {
      rows.push_back({n, std::nullopt, formula_total(make_spec(tag, std::nullopt, profile), n)});
    }
  }

  const std::string name(VariantSpec::short_name(tag));
  switch (format) {
    case OutputFormat::csv:
      out << "variant,n,k,count\n";
      for (const auto& r : rows) out << name << ',' << r.n << ',' << (r.k ? std::to_string(*r.k) : "") << ',' << r.count << '\n';
      break;
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"variant", name}, {"n", r.n}, {"k", r.k ? json(*r.k) : json(nullptr)}, {"count", r.count.str()}});
      }
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::plain:
      for (const auto& r : rows) {
        out << name << " n=" << r.n;
        if (r.k) out << " k=" << *r.k;
        out << ": " << r.count << '\n';
      }
      break;
  }
  return kExitOk;
}

// ---- oracle --------------------------------------------------------------

int cmd_oracle(const VariantSpec& spec, std::optional<int> n_opt, OutputFormat format, std::ostream& out) {
  const int n = resolve_n(spec, n_opt);
  try {
    spec.validate_for(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OutcomeTally tally = brute_tally(n, spec);
  switch (format) {
    case OutputFormat::csv:
      out << "outcome,count\n";
      for (const auto& [p, count] : tally.per_outcome) out << p.str() << ',' << count << '\n';
      break;
    case OutputFormat::json: {
      json per = json::object();
      for (const auto& [p, count] : tally.per_outcome) per[p.str()] = count.str();
      json doc = {{"variant", spec.name()}, {"n", n},
                  {"space", tally.space_size().str()}, {"total", tally.total.str()},
                  {"failures", tally.failures.str()}, {"per_outcome", per}};
      if (spec.has_k()) doc["k"] = spec.k();
      out << doc.dump() << '\n';
      break;
    }
    case OutputFormat::plain:
      out << "variant: " << spec.name() << '\n' << "n: " << n << '\n';
      if (spec.has_k()) out << "k: " << spec.k() << '\n';
      out << "space: " << tally.space_size() << '\n'
          << "total: " << tally.total << '\n'
          << "failures: " << tally.failures << '\n';
      for (const auto& [p, count] : tally.per_outcome) out << "outcome " << p.str() << ": " << count << '\n';
      break;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

void render_report(const std::string& suite, const VerifyReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << report.to_json().dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::csv) throw UsageError("verify supports plain or json output");
  for (const Check& c : report.checks()) {
    if (c.pass) continue;
    out << "FAIL " << c.name << ' ' << c.params.dump() << " expected=" << c.expected << " actual=" << c.actual
        << '\n';
  }
  out << suite << ": " << report.checks().size() << " checks, " << report.failed_count() << " failed\n";
  out << (report.all_passed() ? "PASS" : "FAIL") << '\n';
}

VerifyReport run_variant_suite(int max_n) {
  VerifyReport report;
  for (const VariantSpec& spec : {VariantSpec::classical(), VariantSpec::subset(), VariantSpec::interval(),
                                  VariantSpec::ordered()}) {
    report.append(verify_variant(spec, max_n));
  }
  for (int k = 1; k <= max_n; ++k) {
    report.append(verify_variant(VariantSpec::k_subset(k), max_n));
    report.append(verify_variant(VariantSpec::k_interval(k), max_n));
  }
  report.canonicalize();
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of parking-function variants", "parkfn"};
  app.footer(kGrammar);
  app.require_subcommand(1);

  std::string format_text = "plain";
  std::string variant_text;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<std::string> profile_path;
  std::optional<std::string> outcome;
  std::optional<std::string> k_expr;
  std::string text;
  int from = 1, to = 1;
  std::string suite = "all";
  int max_n = 0;
  int trials = 50;
  std::optional<std::uint64_t> seed;

  auto* stats = app.add_subcommand("stats", "Permutation statistics");
  stats->add_option("permutation", text, "Permutation, e.g. 31524")->required();
  stats->add_option("--format", format_text, "plain or json");

  auto* park = app.add_subcommand("park", "Run the parking process on one family");
  park->add_option("--variant", variant_text, "Variant")->required();
  park->add_option("-k", k, "Set size / interval length");
  park->add_option("--profile", profile_path, "Size profile JSON file");
  park->add_option("family", text, "Family text")->required();

  auto* count = app.add_subcommand("count", "Count families with a closed form");
  count->add_option("--variant", variant_text, "Variant")->required();
  count->add_option("-n", n, "Street length");
  count->add_option("-k", k, "Set size / interval length");
  count->add_option("--outcome", outcome, "Restrict to one outcome permutation");
  count->add_option("--profile", profile_path, "Size profile JSON file");

  auto* table = app.add_subcommand("table", "Tabulate totals over a range of n");
  table->add_option("--variant", variant_text, "Variant")->required();
  table->add_option("--from", from, "Smallest n")->required();
  table->add_option("--to", to, "Largest n")->required();
  table->add_option("-k", k_expr, "k as an integer, n, n-<d>, or all");
  table->add_option("--profile", profile_path, "Size profile JSON file");
  table->add_option("--format", format_text, "plain, csv or json");

  auto* verify = app.add_subcommand("verify", "Check formulas against exhaustive enumeration");
  verify->add_option("--suite", suite, "variants, identities, profiles or all");
  verify->add_option("--max-n", max_n, "Largest n for the variants and identities suites");
  verify->add_option("-n", n, "Street length for the profiles suite");
  verify->add_option("--trials", trials, "Random profiles to draw");
  verify->add_option("--seed", seed, "Seed for random profiles (required for profiles)");
  verify->add_option("--format", format_text, "plain or json");

  auto* oracle = app.add_subcommand("oracle", "Dump the exhaustive outcome tally");
  oracle->add_option("--variant", variant_text, "Variant")->required();
  oracle->add_option("-n", n, "Street length");
  oracle->add_option("-k", k, "Set size / interval length");
  oracle->add_option("--profile", profile_path, "Size profile JSON file");
  oracle->add_option("--format", format_text, "plain, csv or json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_text);
    std::optional<SizeProfile> profile;
    if (profile_path) profile = load_profile(*profile_path);

    if (*stats) return cmd_stats(text, format, out);
    if (*park) return cmd_park(make_spec(parse_variant(variant_text), k, profile), text, out);
    if (*count) return cmd_count(make_spec(parse_variant(variant_text), k, profile), n, outcome, out);
    if (*table) return cmd_table(parse_variant(variant_text), k_expr, profile, from, to, format, out);
    if (*oracle) return cmd_oracle(make_spec(parse_variant(variant_text), k, profile), n, format, out);
    if (*verify) {
      if (suite != "variants" && suite != "identities" && suite != "profiles" && suite != "all") {
        throw UsageError("unknown suite '" + suite + "'");
      }
      VerifyReport report;
      if (suite == "variants" || suite == "all") report.append(run_variant_suite(max_n > 0 ? max_n : 4));
      if (suite == "identities" || suite == "all") report.append(verify_identities(max_n > 0 ? max_n : 6));
      if (suite == "profiles" || suite == "all") {
        if (!seed) throw UsageError("the profiles suite requires --seed");
        report.append(verify_profiles(n.value_or(3), trials, *seed));
      }
      report.canonicalize();
      render_report(suite, report, format, out);
      return report.all_passed() ? kExitOk : kExitNegative;
    }
  } catch (const FormulaError& e) {
    err << "parkfn: internal error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "parkfn: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parkfn::cli
