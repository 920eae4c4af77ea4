#include "parkfn/verify.hpp"

#include <algorithm>
#include <string>

#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"

namespace parkfn {

using nlohmann::json;

void VerifyReport::add(std::string name, json params, BigCount expected, BigCount actual) {
  const bool pass = expected == actual;
  checks_.push_back({std::move(name), std::move(params), std::move(expected), std::move(actual), pass});
}

void VerifyReport::append(const VerifyReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void VerifyReport::canonicalize() {
  std::stable_sort(checks_.begin(), checks_.end(), [](const Check& a, const Check& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.params < b.params;
  });
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t VerifyReport::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

json VerifyReport::to_json() const {
  json checks = json::array();
  for (const Check& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"params", c.params},
                      {"expected", c.expected.str()},
                      {"actual", c.actual.str()},
                      {"pass", c.pass}});
  }
  return {{"checks", std::move(checks)}, {"all_passed", all_passed()}};
}

VerifyReport VerifyReport::from_json(const json& doc) {
  VerifyReport report;
  for (const auto& c : doc.at("checks")) {
    Check check{c.at("name").get<std::string>(), c.at("params"),
                BigCount::from_string(c.at("expected").get<std::string>()),
                BigCount::from_string(c.at("actual").get<std::string>()), c.at("pass").get<bool>()};
    if (!check.params.is_object()) throw std::invalid_argument("check params must be an object");
    report.checks_.push_back(std::move(check));
  }
  if (doc.at("all_passed").get<bool>() != report.all_passed()) {
    throw std::invalid_argument("all_passed disagrees with the individual checks");
  }
  return report;
}

void compare_outcomes(VerifyReport& report, std::string_view name, const json& params, int n,
                      const OutcomeTally& tally, const OutcomeFormula& formula) {
  for (const Permutation& p : all_permutations(n)) {
    json with_outcome = params;
    with_outcome["outcome"] = p.str();
    report.add(std::string(name), std::move(with_outcome), formula(p), tally.count(p));
  }
  // Anything tallied outside S_n would be silently ignored above.
  for (const auto& [p, count] : tally.per_outcome) {
    if (p.size() != n) {
      json odd = params;
      odd["outcome"] = p.str();
      report.add(std::string(name) + ".stray", std::move(odd), BigCount(0), count);
    }
  }
}

namespace {

json profile_json(const SizeProfile& profile) { return profile.entries(); }

void compare_variant_at(VerifyReport& report, const VariantSpec& spec, int n, const json& base,
                        const OracleOptions& options) {
  const OutcomeTally tally = brute_tally(n, spec, options);
  const std::string name = spec.name();
  report.add(name + ".total", base, formula_total(spec, n), tally.total);
  report.add(name + ".space", base, family_space_size(n, spec), tally.space_size());
  compare_outcomes(report, name + ".outcome", base, n, tally,
                   [&](const Permutation& p) { return formula_outcome(spec, p); });

  if (spec.tag() != Variant::k_interval || n < 2) return;
  const int k = spec.k();
  if (k == n - 1) {
    report.add("ipf_nm1.total", base, ipf_corollary_nm1(n), tally.total);
    for (const Permutation& p : all_permutations(n)) {
      if (!ends_increasing(p, n - 1)) continue;
      json with_outcome = base;
      with_outcome["outcome"] = p.str();
      report.add("ipf_nm1.outcome", std::move(with_outcome), ipf_corollary_nm1(p), tally.count(p));
    }
  }
  if (k == 2) {
    report.add("ipf_2.total", base, ipf_corollary_2(n), tally.total);
    for (const Permutation& p : all_permutations(n)) {
      if (!ends_increasing(p, 2)) continue;
      json with_outcome = base;
      with_outcome["outcome"] = p.str();
      report.add("ipf_2.outcome", std::move(with_outcome), ipf_corollary_2(p), tally.count(p));
    }
  }
}

BigCount small(std::int64_t v) { return BigCount(static_cast<std::uint64_t>(v)); }

}  // namespace

VerifyReport verify_variant(const VariantSpec& spec, int n_max, const OracleOptions& options) {
  VerifyReport report;
  if (spec.has_profile()) {
    const int n = spec.profile().size();
    compare_variant_at(report, spec, n, {{"n", n}, {"profile", profile_json(spec.profile())}}, options);
  } else {
    const int lo = spec.has_k() ? spec.k() : 1;
    for (int n = lo; n <= n_max; ++n) {
      json base = {{"n", n}};
      if (spec.has_k()) base["k"] = spec.k();
      compare_variant_at(report, spec, n, base, options);
    }
  }
  report.canonicalize();
  return report;
}

VerifyReport verify_identities(int n_max, const OracleOptions& options) {
  if (n_max > kIdentityGuard) {
    throw GuardError("identity suite: n_max = " + std::to_string(n_max) + " exceeds guard " +
                     std::to_string(kIdentityGuard));
  }
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    const json at_n = {{"n", n}};
    const auto un = static_cast<std::uint64_t>(n);

    // Weighted inversion sum against the product form.
    BigCount weighted;
    for (const Permutation& p : all_permutations(n)) {
      weighted += BigCount::pow2(un * (un - 1) - static_cast<std::uint64_t>(inversions(p)));
    }
    BigCount product_form(1);
    for (int i = 0; i < n; ++i) product_form *= BigCount::pow2(un) - BigCount::pow2(static_cast<std::uint64_t>(i));
    report.add("identity.inversion_sum", at_n, product_form, weighted);

    // k-subset summation identity.
    for (int k = 1; k <= n; ++k) {
      BigCount lhs;
      for (const Permutation& p : all_permutations(n)) lhs += ksp_count(p, k);
      BigCount rhs(1);
      for (int i = 1; i <= n; ++i) rhs *= binom(n, k) - binom(i - 1, k);
      report.add("identity.k_subset_sum", {{"n", n}, {"k", k}}, rhs, lhs);
    }

    // sum_k b_i(pi, k) = a_i(pi) (n - i + 1), over every (pi, i).
    std::uint64_t pairs = 0;
    std::uint64_t agreeing = 0;
    for (const Permutation& p : all_permutations(n)) {
      for (int i = 1; i <= n; ++i) {
        std::int64_t sum = 0;
        for (int k = 1; k <= n; ++k) sum += interval_placements(p, i, k);
        ++pairs;
        agreeing += sum == static_cast<std::int64_t>(dominance_window(p, i)) * (n - i + 1) ? 1 : 0;
      }
    }
    report.add("identity.placement_sum", at_n, BigCount(pairs), BigCount(agreeing));

    BigCount census_total;
    for (int k = 0; k <= n - 1; ++k) {
      const json at_nk = {{"n", n}, {"k", k}};
      report.add("identity.ascent_ending", at_nk, p_count(n, k), brute_ascent_ending(n, k));
      report.add("identity.eulerian", at_nk, eulerian(n, k), brute_ascent_census(n, k));
      census_total += eulerian(n, k);
    }
    report.add("identity.eulerian_row_sum", at_n, factorial(n), census_total);

    if (n <= 3) {
      const OutcomeTally tally = brute_tally(n, VariantSpec::ordered(), options);
      report.add("identity.ordered_total", at_n, opf_count(n), tally.total);
      compare_outcomes(report, "identity.ordered_uniform", at_n, n, tally,
                       [&](const Permutation&) {
                         auto [q, r] = opf_count(n).divmod(factorial(n));
                         return r.is_zero() ? q : BigCount(0);
                       });
    }

    if (n >= 2) {
      report.add("identity.corollary_nm1_total", at_n, ipf_corollary_nm1(n), kipf_count(n, n - 1));
      report.add("identity.corollary_2_total", at_n, ipf_corollary_2(n), kipf_count(n, 2));
      std::uint64_t tails_nm1 = 0, agree_nm1 = 0, tails_2 = 0, agree_2 = 0;
      for (const Permutation& p : all_permutations(n)) {
        if (ends_increasing(p, n - 1)) {
          ++tails_nm1;
          agree_nm1 += ipf_corollary_nm1(p) == kipf_count(p, n - 1) ? 1 : 0;
        }
        if (ends_increasing(p, 2)) {
          ++tails_2;
          agree_2 += ipf_corollary_2(p) == kipf_count(p, 2) ? 1 : 0;
        }
      }
      report.add("identity.corollary_nm1_outcomes", at_n, small(static_cast<std::int64_t>(tails_nm1)),
                 small(static_cast<std::int64_t>(agree_nm1)));
      report.add("identity.corollary_2_outcomes", at_n, small(static_cast<std::int64_t>(tails_2)),
                 small(static_cast<std::int64_t>(agree_2)));
    }
  }
  report.canonicalize();
  return report;
}

SizeProfile random_profile(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> allowed;
  for (int car = 1; car <= n; ++car) {
    std::vector<int> sizes;
    while (sizes.empty()) {
      for (int s = 1; s <= n; ++s) {
        if ((rng() >> 63) != 0) sizes.push_back(s);
      }
    }
    allowed.push_back(std::move(sizes));
  }
  return SizeProfile(n, std::move(allowed));
}

VerifyReport verify_profiles(int n, int trials, std::uint64_t seed, const OracleOptions& options) {
  if (n < 1 || n > kProfileGuard) {
    throw GuardError("profile suite: n = " + std::to_string(n) + " outside 1.." +
                     std::to_string(kProfileGuard));
  }
  if (trials < 0) throw std::invalid_argument("profile suite: trials must be nonnegative");
  std::mt19937_64 rng(seed);
  VerifyReport report;
  for (int trial = 0; trial < trials; ++trial) {
    const SizeProfile profile = random_profile(n, rng);
    const json base = {{"n", n}, {"seed", seed}, {"trial", trial}, {"profile", profile_json(profile)}};
    for (const VariantSpec& spec : {VariantSpec::size_profile(profile), VariantSpec::interval_profile(profile),
                                    VariantSpec::ordered_profile(profile)}) {
      compare_variant_at(report, spec, n, base, options);
    }
  }
  report.canonicalize();
  return report;
}

}  // namespace parkfn
