#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/permutation.hpp"

using namespace parkfn;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<int> windows(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) out.push_back(dominance_window(p, i));
  return out;
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(perm({}), std::invalid_argument);
  EXPECT_THROW(perm({1, 1}), std::invalid_argument);
  EXPECT_THROW(perm({0, 1}), std::invalid_argument);
  EXPECT_THROW(perm({1, 3}), std::invalid_argument);
}

TEST(Permutation, StringForm) {
  EXPECT_EQ(perm({3, 1, 2}).str(), "312");
  EXPECT_EQ(Permutation::reversal(10).str(), "10,9,8,7,6,5,4,3,2,1");
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(perm({3, 1, 2})), perm({2, 3, 1}));
  EXPECT_EQ(inverse(perm({1, 2, 3})), perm({1, 2, 3}));
  EXPECT_EQ(inverse(perm({2, 1})), perm({2, 1}));
}

TEST(Permutation, Inversions) {
  EXPECT_EQ(inversions(perm({1, 2, 3})), 0);
  EXPECT_EQ(inversions(perm({3, 2, 1})), 3);
  EXPECT_EQ(inversions(perm({3, 1, 2})), 2);
}

TEST(Permutation, LocalInversions) {
  EXPECT_EQ(local_inversions(perm({3, 1, 2}), 1), 2);
  EXPECT_EQ(local_inversions(perm({3, 1, 2}), 3), 0);
  EXPECT_EQ(local_inversions(perm({1, 2, 3}), 2), 0);
  EXPECT_THROW(local_inversions(perm({1, 2, 3}), 4), std::out_of_range);
  EXPECT_THROW(local_inversions(perm({1, 2, 3}), 0), std::out_of_range);
}

TEST(Permutation, CarInversions) {
  EXPECT_EQ(car_inversions(perm({3, 1, 2}), 1), 1);
  EXPECT_EQ(car_inversions(perm({3, 1, 2}), 3), 0);
  for (int car = 1; car <= 4; ++car) EXPECT_EQ(car_inversions(Permutation::identity(4), car), 0);
  EXPECT_THROW(car_inversions(perm({1, 2}), 3), std::out_of_range);
}

TEST(Permutation, CarAndPositionIndexedCountsDifferPerIndex) {
  // Same totals, different per-index values: the two statistics are not
  // interchangeable in per-car products.
  const auto p = perm({3, 1, 2});
  EXPECT_NE(local_inversions(p, 1), car_inversions(p, 1));
}

TEST(Permutation, Ascents) {
  EXPECT_EQ(ascents(perm({1, 2, 3})), 2);
  EXPECT_EQ(ascents(perm({3, 2, 1})), 0);
  EXPECT_EQ(ascents(perm({3, 1, 2})), 1);
}

TEST(Permutation, DominanceWindow) {
  EXPECT_EQ(windows(perm({3, 1, 5, 2, 4})), (std::vector<int>{1, 1, 3, 1, 2}));
  EXPECT_EQ(windows(Permutation::identity(6)), (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(windows(Permutation::reversal(5)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_THROW(dominance_window(perm({1}), 2), std::out_of_range);
}

TEST(Permutation, EndsIncreasing) {
  EXPECT_TRUE(ends_increasing(perm({3, 1, 2}), 2));
  EXPECT_FALSE(ends_increasing(perm({3, 2, 1}), 2));
  EXPECT_TRUE(ends_increasing(perm({3, 2, 1}), 1));
  EXPECT_THROW(ends_increasing(perm({1, 2}), 0), std::out_of_range);
  EXPECT_THROW(ends_increasing(perm({1, 2}), 3), std::out_of_range);
}

TEST(Permutation, EulerianConventions) {
  EXPECT_EQ(eulerian(0, 0), BigCount(1));
  EXPECT_EQ(eulerian(0, 3), BigCount(0));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(eulerian(n, -1), BigCount(0));
  EXPECT_EQ(eulerian(3, 1), BigCount(4));
  EXPECT_EQ(eulerian(5, 2), BigCount(66));
}

TEST(Permutation, EnumerationIsCompleteAndDistinct) {
  std::vector<Permutation> one(all_permutations(1).begin(), all_permutations(1).end());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], perm({1}));
  int two = 0;
  for (const auto& p : all_permutations(2)) two += p.size() == 2 ? 1 : 0;
  EXPECT_EQ(two, 2);
  std::set<Permutation> three(all_permutations(3).begin(), all_permutations(3).end());
  EXPECT_EQ(three.size(), 6u);
  std::vector<Permutation> ordered(all_permutations(3).begin(), all_permutations(3).end());
  EXPECT_TRUE(std::is_sorted(ordered.begin(), ordered.end()));
}

TEST(Permutation, EnumerationGuard) {
  EXPECT_THROW(all_permutations(13), GuardError);
  EXPECT_NO_THROW(all_permutations(13, 13));
  EXPECT_THROW(all_permutations(0), std::invalid_argument);
}

TEST(PermutationProperties, InversionDecompositionsUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      int by_position = 0, by_car = 0;
      for (int i = 1; i <= n; ++i) {
        by_position += local_inversions(p, i);
        by_car += car_inversions(p, i);
        ASSERT_EQ(car_inversions(p, i), local_inversions(inverse(p), i));
      }
      const int inv = inversions(p);
      ASSERT_EQ(inv, by_position);
      ASSERT_EQ(inv, by_car);
      ASSERT_EQ(inv, inversions(inverse(p)));
      ASSERT_EQ(inverse(inverse(p)), p);
    }
  }
}

TEST(PermutationProperties, WindowBoundsAndAscentLink) {
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& p : all_permutations(n)) {
      ASSERT_EQ(dominance_window(p, 1), 1);
      for (int i = 1; i <= n; ++i) {
        const int a = dominance_window(p, i);
        ASSERT_GE(a, 1);
        ASSERT_LE(a, i);
        if (i >= 2) ASSERT_EQ(a >= 2, p[i] > p[i - 1]);
      }
    }
  }
}

TEST(PermutationProperties, EulerianMatchesAscentCensus) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::uint64_t> census(static_cast<std::size_t>(n), 0);
    for (const Permutation& p : all_permutations(n)) ++census[static_cast<std::size_t>(ascents(p))];
    BigCount sum;
    for (int k = 0; k < n; ++k) {
      ASSERT_EQ(eulerian(n, k), BigCount(census[static_cast<std::size_t>(k)])) << n << "," << k;
      sum += eulerian(n, k);
    }
    ASSERT_EQ(sum, factorial(n));
    ASSERT_EQ(eulerian(n, n), BigCount(0));
  }
}

TEST(PermutationProperties, RandomLargePermutations) {
  // Random permutations of size 40: inversion totals agree across routes.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(40);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation p(v);
    int by_car = 0;
    for (int c = 1; c <= 40; ++c) by_car += car_inversions(p, c);
    ASSERT_EQ(by_car, inversions(p));
    ASSERT_EQ(inverse(inverse(p)), p);
  }
}
