#include <gtest/gtest.h>

#include <cstdlib>
#include <optional>
#include <set>
#include <string>

#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/oracle.hpp"
#include "support/naive_oracle.hpp"

using namespace parkfn;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

BigCount big(std::int64_t v) { return BigCount(static_cast<std::uint64_t>(v)); }

OracleOptions with_workers(unsigned w) {
  OracleOptions o;
  o.workers = w;
  return o;
}

void expect_matches(const OutcomeTally& t, const naive::Result& ref) {
  EXPECT_EQ(t.total, big(ref.total));
  EXPECT_EQ(t.failures, big(ref.failures));
  ASSERT_EQ(t.per_outcome.size(), ref.per_outcome.size());
  for (const auto& [outcome, count] : ref.per_outcome) {
    EXPECT_EQ(t.count(Permutation(outcome)), big(count));
  }
}

std::vector<std::vector<naive::Choice>> per_car(const SizeProfile& profile,
                                                const std::vector<naive::Choice>& pool) {
  std::vector<std::vector<naive::Choice>> options;
  for (int car = 1; car <= profile.size(); ++car) {
    const auto& a = profile.allowed(car);
    options.push_back(naive::with_size(pool, std::set<int>(a.begin(), a.end())));
  }
  return options;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_) ::setenv(name_, old_->c_str(), 1);
    else ::unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST(Oracle, SpaceSizes) {
  EXPECT_EQ(family_space_size(3, VariantSpec::subset()), big(343));
  EXPECT_EQ(family_space_size(3, VariantSpec::k_interval(2)), big(8));
  EXPECT_EQ(family_space_size(3, VariantSpec::ordered()), big(3375));
  EXPECT_EQ(family_space_size(3, VariantSpec::classical()), big(27));
  EXPECT_EQ(family_space_size(3, VariantSpec::interval()), big(216));
}

TEST(Oracle, Examples) {
  const auto sp = brute_tally(3, VariantSpec::subset());
  EXPECT_EQ(sp.total, big(168));
  EXPECT_EQ(sp.failures, big(175));
  EXPECT_EQ(sp.count(perm({3, 1, 2})), big(16));

  const auto kipf = brute_tally(3, VariantSpec::k_interval(2));
  EXPECT_EQ(kipf.total, big(4));
  EXPECT_EQ(kipf.count(perm({1, 2, 3})), big(2));
  EXPECT_EQ(kipf.count(perm({1, 3, 2})), big(0));

  const auto opf = brute_tally(3, VariantSpec::ordered());
  EXPECT_EQ(opf.total, big(2310));
  EXPECT_EQ(opf.failures, big(1065));
  for (const auto& [p, c] : opf.per_outcome) EXPECT_EQ(c, big(385)) << p.str();
}

TEST(Oracle, MatchesNaiveReference) {
  for (int n = 1; n <= 3; ++n) {
    expect_matches(brute_tally(n, VariantSpec::classical()), naive::tally_same(n, naive::tails(n)));
    expect_matches(brute_tally(n, VariantSpec::subset()), naive::tally_same(n, naive::subsets(n)));
    expect_matches(brute_tally(n, VariantSpec::interval()), naive::tally_same(n, naive::intervals(n)));
    expect_matches(brute_tally(n, VariantSpec::ordered()), naive::tally_same(n, naive::arrangements(n)));
    for (int k = 1; k <= n; ++k) {
      const std::set<int> only{k};
      expect_matches(brute_tally(n, VariantSpec::k_subset(k)),
                     naive::tally_same(n, naive::with_size(naive::subsets(n), only)));
      expect_matches(brute_tally(n, VariantSpec::k_interval(k)),
                     naive::tally_same(n, naive::with_size(naive::intervals(n), only)));
    }
  }
  const SizeProfile L(3, {{1, 2}, {3}, {1, 3}});
  expect_matches(brute_tally(3, VariantSpec::size_profile(L)), naive::tally(per_car(L, naive::subsets(3))));
  expect_matches(brute_tally(3, VariantSpec::interval_profile(L)), naive::tally(per_car(L, naive::intervals(3))));
  expect_matches(brute_tally(3, VariantSpec::ordered_profile(L)),
                 naive::tally(per_car(L, naive::arrangements(3))));
}

TEST(Oracle, WorkerCountDoesNotChangeResult) {
  for (const VariantSpec& spec : {VariantSpec::subset(), VariantSpec::interval(), VariantSpec::ordered()}) {
    const auto one = brute_tally(3, spec, with_workers(1));
    EXPECT_EQ(brute_tally(3, spec, with_workers(1)), one);
    EXPECT_EQ(brute_tally(3, spec, with_workers(3)), one);
    EXPECT_EQ(brute_tally(3, spec, with_workers(7)), one);
  }
  const auto k4 = brute_tally(4, VariantSpec::k_subset(2), with_workers(1));
  EXPECT_EQ(brute_tally(4, VariantSpec::k_subset(2), with_workers(4)), k4);
}

TEST(Oracle, TotalsAndFailuresFillTheSpace) {
  for (int n = 1; n <= 4; ++n) {
    for (const VariantSpec& spec : {VariantSpec::classical(), VariantSpec::subset(), VariantSpec::interval()}) {
      const auto t = brute_tally(n, spec);
      EXPECT_EQ(t.space_size(), family_space_size(n, spec));
      BigCount sum;
      for (const auto& [p, c] : t.per_outcome) sum += c;
      EXPECT_EQ(sum, t.total);
    }
  }
}

TEST(Oracle, BudgetIsEnforcedBeforeEnumeration) {
  OracleOptions tight;
  tight.budget = 342;
  EXPECT_THROW(brute_tally(3, VariantSpec::subset(), tight), GuardError);
  tight.budget = 343;
  EXPECT_NO_THROW(brute_tally(3, VariantSpec::subset(), tight));
  // (2^16 - 1)^16 families: only an up-front check returns promptly.
  EXPECT_THROW(brute_tally(16, VariantSpec::subset()), GuardError);
}

TEST(Oracle, BudgetFromEnvironment) {
  {
    ScopedEnv env("PARKFN_BUDGET", "1234");
    EXPECT_EQ(budget_from_environment(), 1234u);
  }
  {
    ScopedEnv env("PARKFN_BUDGET", "12x");
    EXPECT_THROW(budget_from_environment(), std::invalid_argument);
  }
  {
    ScopedEnv env("PARKFN_BUDGET", "-5");
    EXPECT_THROW(budget_from_environment(), std::invalid_argument);
  }
  ::unsetenv("PARKFN_BUDGET");
  EXPECT_EQ(budget_from_environment(), kDefaultFamilyBudget);
}

TEST(Oracle, AscentBruteForce) {
  EXPECT_EQ(brute_ascent_census(3, 1), big(4));
  EXPECT_EQ(brute_ascent_ending(3, 1), big(2));
  EXPECT_EQ(brute_ascent_ending(3, 2), big(1));
  EXPECT_THROW(brute_ascent_census(kAscentBruteGuard + 1, 1), GuardError);
}
