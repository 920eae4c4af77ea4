#include <gtest/gtest.h>

#include <algorithm>

#include "parkfn/simulator.hpp"
#include "support/naive_oracle.hpp"

using namespace parkfn;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

// All n^n preference vectors, in base-n order.
std::vector<std::vector<int>> all_preferences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(c);
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n) c[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

SetFamily tails_of(const std::vector<int>& prefs) {
  const int n = static_cast<int>(prefs.size());
  std::vector<SpotSet> sets;
  for (int c : prefs) sets.push_back(SpotSet::interval(c, n - c + 1, n));
  return SetFamily(n, std::move(sets));
}

}  // namespace

TEST(SpotSet, Construction) {
  const std::vector<int> members{2, 3};
  auto s = SpotSet::from_members(members, 3);
  EXPECT_EQ(s.bits(), 0b110u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.min(), 2);
  EXPECT_TRUE(s.is_interval());
  EXPECT_FALSE(SpotSet::from_bits(0b101, 3).is_interval());
  EXPECT_EQ(SpotSet::interval(2, 2, 4).members(), (std::vector<int>{2, 3}));
  EXPECT_THROW(SpotSet::from_bits(0, 3), std::invalid_argument);
  EXPECT_THROW(SpotSet::from_bits(0b1000, 3), std::invalid_argument);
  EXPECT_THROW(SpotSet::interval(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(SpotSet::from_bits(1, 65), std::invalid_argument);
  EXPECT_EQ(SpotSet::interval(1, 64, 64).size(), 64);
}

TEST(Simulator, SubsetExamples) {
  EXPECT_EQ(park_subsets(SetFamily::from_members({{2}, {2, 3}, {1, 2, 3}})), ParkResult(perm({3, 1, 2})));
  auto failed = park_subsets(SetFamily::from_members({{2, 3}, {1, 2, 3}, {2}}));
  ASSERT_FALSE(failed.parked());
  EXPECT_EQ(failed.failed_car(), 3);
  EXPECT_EQ(park_subsets(SetFamily::from_members({{1}, {2}, {3}, {4}})).outcome(), Permutation::identity(4));
}

TEST(Simulator, SetOrderMatters) {
  // Same three sets, different car order: one parks, one does not.
  auto parks = park_subsets(SetFamily::from_members({{2}, {2, 3}, {1, 2, 3}}));
  auto fails = park_subsets(SetFamily::from_members({{2, 3}, {1, 2, 3}, {2}}));
  EXPECT_TRUE(parks.parked());
  EXPECT_FALSE(fails.parked());
}

TEST(Simulator, ClassicalExamples) {
  const std::vector<int> fail{2, 2, 2}, ok{2, 1, 1}, ones{1, 1, 1, 1, 1};
  EXPECT_EQ(park_classical(fail).failed_car(), 3);
  EXPECT_EQ(park_classical(ok).outcome(), perm({2, 1, 3}));
  EXPECT_EQ(park_classical(ones).outcome(), Permutation::identity(5));
  const std::vector<int> bad{1, 4, 1};
  EXPECT_THROW(park_classical(bad), std::invalid_argument);
}

TEST(Simulator, OrderedExamples) {
  EXPECT_EQ(park_ordered(OrderedFamily(2, {{2, 1}, {2, 1}})).outcome(), perm({2, 1}));
  EXPECT_EQ(park_ordered(OrderedFamily(2, {{1}, {1}})).failed_car(), 2);
  // Car 1 always finds its first choice free.
  EXPECT_EQ(park_ordered(OrderedFamily(3, {{3, 1}, {1, 2, 3}, {2}})).outcome(), perm({2, 3, 1}));
  EXPECT_THROW(OrderedFamily(2, {{1, 1}, {2}}), std::invalid_argument);
  EXPECT_THROW(OrderedFamily(2, {{}, {2}}), std::invalid_argument);
  EXPECT_THROW(OrderedFamily(2, {{3}, {2}}), std::invalid_argument);
}

TEST(Simulator, ReplayPartial) {
  auto f = SetFamily::from_members({{2}, {2, 3}, {1, 2, 3}});
  auto one = std::get<PartialOutcome>(replay_partial(f, 1));
  EXPECT_EQ(one.str(), "*1*");
  EXPECT_EQ(one.occupant(2), 1);
  EXPECT_FALSE(one.occupant(1).has_value());
  EXPECT_EQ(std::get<PartialOutcome>(replay_partial(f, 0)).str(), "***");
  auto full = std::get<PartialOutcome>(replay_partial(f, 3));
  const ParkResult parked = park_subsets(f);
  EXPECT_EQ(std::vector<int>(full.slots().begin(), full.slots().end()),
            std::vector<int>(parked.outcome().values().begin(), parked.outcome().values().end()));
  EXPECT_THROW(replay_partial(f, 4), std::out_of_range);

  auto g = SetFamily::from_members({{2, 3}, {1, 2, 3}, {2}});
  EXPECT_TRUE(std::holds_alternative<PartialOutcome>(replay_partial(g, 2)));
  EXPECT_EQ(std::get<CarFailed>(replay_partial(g, 3)).car, 3);

  auto o = OrderedFamily(2, {{2, 1}, {2, 1}});
  EXPECT_EQ(std::get<PartialOutcome>(replay_partial(o, 1)).str(), "*1");
}

TEST(SimulatorProperties, ClassicalCriterionAndTailSets) {
  // Parks iff sorted preferences b satisfy b_i <= i; agrees with the subset
  // rule on sets [c_i, n] and with the naive reference.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& prefs : all_preferences(n)) {
      auto sorted = prefs;
      std::sort(sorted.begin(), sorted.end());
      bool criterion = true;
      for (int i = 1; i <= n; ++i) criterion = criterion && sorted[static_cast<std::size_t>(i - 1)] <= i;
      const ParkResult classical = park_classical(prefs);
      ASSERT_EQ(classical.parked(), criterion);
      ASSERT_EQ(park_subsets(tails_of(prefs)), classical);

      std::vector<naive::Choice> family;
      for (int c : prefs) {
        naive::Choice ch;
        for (int s = c; s <= n; ++s) ch.push_back(s);
        family.push_back(ch);
      }
      auto reference = naive::park(family);
      if (classical.parked()) {
        ASSERT_EQ(reference, std::vector<int>(classical.outcome().values().begin(), classical.outcome().values().end()));
      } else {
        ASSERT_TRUE(reference.empty());
      }
    }
  }
}

TEST(SimulatorProperties, OutcomesRespectSetsAndSortedListsAgree) {
  const int n = 3;
  const auto subsets = naive::subsets(n);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      for (const auto& c : subsets) {
        auto family = SetFamily::from_members({a, b, c});
        ParkResult r = park_subsets(family);
        ASSERT_EQ(park_ordered(OrderedFamily(n, {a, b, c})), r);
        if (!r.parked()) continue;
        const Permutation where = inverse(r.outcome());
        for (int car = 1; car <= n; ++car) ASSERT_TRUE(family[car].contains(where[car]));
      }
    }
  }
}

TEST(SimulatorProperties, FirstFailureIsReported) {
  // After the reported car fails, the earlier cars must all have parked.
  const int n = 3;
  const auto subsets = naive::subsets(n);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      for (const auto& c : subsets) {
        auto family = SetFamily::from_members({a, b, c});
        ParkResult r = park_subsets(family);
        if (r.parked()) continue;
        ASSERT_TRUE(std::holds_alternative<PartialOutcome>(replay_partial(family, r.failed_car() - 1)));
      }
    }
  }
}
