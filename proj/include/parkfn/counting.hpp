#pragma once

#include <cstdint>

#include "parkfn/bigcount.hpp"
#include "parkfn/permutation.hpp"
#include "parkfn/size_profile.hpp"
#include "parkfn/variant.hpp"

namespace parkfn {

// Size limits for closed forms. Exceeding one throws std::length_error.
struct CountGuards {
  int max_power_n = 16000;  // product/power formulas over n factors
  int max_table_n = 2000;   // formulas that build O(n^2) binomial or Eulerian tables
  int max_permutation_n = kDefaultPermutationGuard;  // sums over S_n
};

// Zero when k < 0 or k > n.
BigCount binom(std::int64_t n, std::int64_t k);
BigCount factorial(int n);

// Classical parking functions: (n+1)^(n-1) in total, prod_i a_i(pi) per outcome.
BigCount pf_count(int n, const CountGuards& guards = {});
BigCount pf_count(const Permutation& outcome);

// Subset parking functions.
BigCount sp_count(int n, const CountGuards& guards = {});
BigCount sp_count(const Permutation& outcome);

// Subset parking functions with |C_i| restricted to profile.allowed(i).
BigCount lsp_count(const SizeProfile& profile, const CountGuards& guards = {});
/// Per-outcome count. Car i contributes sum over its allowed sizes l of
/// C(n - car_inversions(pi, i) - 1, l - 1): the set must contain the car's
/// spot and avoid every spot to its left that is still free.
BigCount lsp_count(const SizeProfile& profile, const Permutation& outcome);

BigCount ksp_count(int n, int k, const CountGuards& guards = {});
BigCount ksp_count(const Permutation& outcome, int k);

/// Number of k-intervals the car in spot `position` could have chosen while
/// still landing there: min(a, k) when position <= n - k, 0 when
/// a < k + position - n, else min(n - position - k + a + 1, n - position + 1),
/// where a = dominance_window(pi, position). Branches are tested in that order.
int interval_placements(const Permutation& p, int position, int k);

// Interval families with |C_i| in profile.allowed(i). The profile factor at
// a position is looked up by the car that occupies it.
BigCount kint_profile_outcome(const SizeProfile& profile, const Permutation& outcome);
// Sum of kint_profile_outcome over S_n.
BigCount kint_profile_count(const SizeProfile& profile, const CountGuards& guards = {});

// k-interval families. The total has no closed form and is summed over S_n.
BigCount kipf_count(int n, int k, const CountGuards& guards = {});
BigCount kipf_count(const Permutation& outcome, int k);

BigCount ipf_count(int n, const CountGuards& guards = {});
BigCount ipf_count(const Permutation& outcome);

// Closed forms for k = n - 1 and k = 2. The outcome overloads throw
// std::invalid_argument when the outcome's tail is not increasing.
BigCount ipf_corollary_nm1(int n, const CountGuards& guards = {});
BigCount ipf_corollary_nm1(const Permutation& outcome);
BigCount ipf_corollary_2(int n, const CountGuards& guards = {});
BigCount ipf_corollary_2(const Permutation& outcome);

// Permutations of n ending in an ascent with exactly k ascents: (n-k)<n-1,k-1>.
BigCount p_count(int n, int k, const CountGuards& guards = {});

// Ordered subsets of {1..n}, including the empty one.
BigCount ordered_subsets(int n);

BigCount opf_count(int n, const CountGuards& guards = {});
BigCount opf_count(const SizeProfile& profile, const CountGuards& guards = {});
// Every outcome is equally likely, so these are the totals divided by n!.
// A nonzero remainder throws FormulaError.
BigCount opf_count(const Permutation& outcome);
BigCount opf_count(const SizeProfile& profile, const Permutation& outcome);

// Sets of the given size that are not contained in `parked` occupied spots.
BigCount extension_count_subset(int n, int parked, int size);

// Inclusive range of interval start spots; empty when hi < lo.
struct StartRange {
  int lo;
  int hi;
  int count() const { return hi >= lo ? hi - lo + 1 : 0; }
  friend bool operator==(const StartRange&, const StartRange&) = default;
};

// Starts r of k-intervals [r, r+k-1] that send `car` to its spot in p, given
// the cars before it parked as p says.
StartRange interval_start_range(const Permutation& p, int car, int k);
// Same for classical sets [r, n].
StartRange classical_start_range(const Permutation& p, int car);

// Dispatch on a variant; throws std::invalid_argument if spec does not fit n.
BigCount formula_total(const VariantSpec& spec, int n, const CountGuards& guards = {});
BigCount formula_outcome(const VariantSpec& spec, const Permutation& outcome);

}  // namespace parkfn
