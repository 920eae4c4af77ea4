#pragma once

#include <cstdint>
#include <map>

#include "parkfn/bigcount.hpp"
#include "parkfn/permutation.hpp"
#include "parkfn/variant.hpp"

namespace parkfn {

inline constexpr std::uint64_t kDefaultFamilyBudget = 100'000'000;

// PARKFN_BUDGET when set, else kDefaultFamilyBudget. A malformed value throws
// std::invalid_argument.
std::uint64_t budget_from_environment();

struct OracleOptions {
  std::uint64_t budget = budget_from_environment();
  // 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

// Ground truth from exhaustion: how many families of the space park with each
// outcome, and how many fail. Outcomes that never occur are absent.
struct OutcomeTally {
  BigCount total;
  BigCount failures;
  std::map<Permutation, BigCount> per_outcome;

  BigCount count(const Permutation& outcome) const;
  BigCount space_size() const { return total + failures; }

  friend bool operator==(const OutcomeTally&, const OutcomeTally&) = default;
};

// Number of families the oracle enumerates for this variant at size n.
BigCount family_space_size(int n, const VariantSpec& spec);

// Enumerates every family of the space in a fixed order, parks it with the
// matching simulator, and tallies outcomes. Throws GuardError when the space
// exceeds options.budget (checked before any enumeration). The result does
// not depend on the number of workers.
OutcomeTally brute_tally(int n, const VariantSpec& spec, const OracleOptions& options = {});

// Permutations of n ending in an ascent with exactly k ascents, by exhaustion.
BigCount brute_ascent_ending(int n, int k);
// Permutations of n with exactly k ascents, by exhaustion.
BigCount brute_ascent_census(int n, int k);

inline constexpr int kAscentBruteGuard = 10;

}  // namespace parkfn
