#include "parkfn/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkfn/errors.hpp"

namespace parkfn {
namespace {

void require_n(int n, int limit, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > limit) {
    throw GuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds guard " +
                     std::to_string(limit));
  }
}

void require_k(int n, int k) {
  if (k < 1 || k > n) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
}

BigCount small(std::int64_t v) { return BigCount(static_cast<std::uint64_t>(v)); }

// Pascal rows C(m, 0..width) for m = 0, 1, 2, ... on demand.
class BinomialRows {
 public:
  explicit BinomialRows(int width) : row_(static_cast<std::size_t>(width) + 1) {
    row_[0] = BigCount(1);
  }
  int current() const { return m_; }
  void advance_to(int m) {
    for (; m_ < m; ++m_) {
      for (std::size_t j = row_.size() - 1; j >= 1; --j) row_[j] += row_[j - 1];
    }
  }
  const BigCount& operator[](int j) const {
    static const BigCount zero;
    if (j < 0 || j >= static_cast<int>(row_.size())) return zero;
    return row_[static_cast<std::size_t>(j)];
  }

 private:
  int m_ = 0;
  std::vector<BigCount> row_;
};

template <typename Fn>
BigCount sum_over_permutations(int n, const CountGuards& guards, Fn&& per_outcome) {
  BigCount total;
  for (const Permutation& p : all_permutations(n, guards.max_permutation_n)) total += per_outcome(p);
  return total;
}

std::vector<BigCount> ordered_subset_prefix(int n) {
  // O(m) = m * O(m-1) + 1
  std::vector<BigCount> out{BigCount(1)};
  for (int m = 1; m <= n; ++m) out.push_back(small(m) * out.back() + BigCount(1));
  return out;
}

// Falling factorials m(m-1)...(m-l+1) for l = 0..width; zero once l > m.
std::vector<BigCount> falling_row(int m, int width) {
  std::vector<BigCount> out(static_cast<std::size_t>(width) + 1);
  out[0] = BigCount(1);
  for (int l = 1; l <= width; ++l) {
    out[static_cast<std::size_t>(l)] =
        l <= m ? out[static_cast<std::size_t>(l - 1)] * small(m - l + 1) : BigCount(0);
  }
  return out;
}

// Sum over a car's allowed sizes of the ordered sets that escape `parked`
// occupied spots.
BigCount ordered_extension_factor(int n, int parked, const std::vector<int>& sizes) {
  const int width = sizes.back();
  auto street = falling_row(n, width);
  auto occupied = falling_row(parked, width);
  BigCount factor;
  for (int l : sizes) factor += street[static_cast<std::size_t>(l)] - occupied[static_cast<std::size_t>(l)];
  return factor;
}

BigCount exact_quotient(const BigCount& num, const BigCount& den, const char* what) {
  auto [q, r] = num.divmod(den);
  if (!r.is_zero()) {
    throw FormulaError(std::string(what) + ": " + num.str() + " not divisible by " + den.str());
  }
  return q;
}

}  // namespace

BigCount binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binom: n must be nonnegative");
  if (k < 0 || k > n) return BigCount(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigCount(std::move(out));
}

BigCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return BigCount(std::move(out));
}

BigCount pf_count(int n, const CountGuards& guards) {
  require_n(n, guards.max_power_n, "pf_count");
  return BigCount::pow(small(n + 1), static_cast<std::uint64_t>(n - 1));
}

BigCount pf_count(const Permutation& outcome) {
  BigCount out(1);
  for (int i = 1; i <= outcome.size(); ++i) out *= small(dominance_window(outcome, i));
  return out;
}

BigCount sp_count(int n, const CountGuards& guards) {
  require_n(n, guards.max_power_n, "sp_count");
  // prod_{i<n} (2^n - 2^i) = 2^(n(n-1)/2) * prod_{j=1..n} (2^j - 1)
  std::vector<BigCount> factors;
  factors.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) factors.push_back(BigCount::pow2(static_cast<std::uint64_t>(j)) - BigCount(1));
  factors.push_back(BigCount::pow2(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2));
  return product(factors);
}

BigCount sp_count(const Permutation& outcome) {
  const auto n = static_cast<std::uint64_t>(outcome.size());
  return BigCount::pow2(n * (n - 1) - static_cast<std::uint64_t>(inversions(outcome)));
}

BigCount lsp_count(const SizeProfile& profile, const CountGuards& guards) {
  const int n = profile.size();
  require_n(n, guards.max_table_n, "lsp_count");
  BinomialRows street(n);
  street.advance_to(n);
  std::vector<BigCount> full_row;
  for (int l = 0; l <= n; ++l) full_row.push_back(street[l]);

  BinomialRows occupied(n);
  std::vector<BigCount> factors;
  for (int car = 1; car <= n; ++car) {
    occupied.advance_to(car - 1);
    BigCount factor;
    for (int l : profile.allowed(car)) factor += full_row[static_cast<std::size_t>(l)] - occupied[l];
    factors.push_back(std::move(factor));
  }
  return product(factors);
}

BigCount lsp_count(const SizeProfile& profile, const Permutation& outcome) {
  const int n = profile.size();
  if (outcome.size() != n) throw std::invalid_argument("outcome length differs from profile size");
  // Free choices for car i: the n - 1 - car_inversions spots that are neither
  // its own nor a still-free spot to its left. Sweep rows in ascending order.
  std::vector<std::pair<int, int>> by_row;  // (free choices, car)
  for (int car = 1; car <= n; ++car) by_row.emplace_back(n - 1 - car_inversions(outcome, car), car);
  std::sort(by_row.begin(), by_row.end());

  BinomialRows rows(n);
  std::vector<BigCount> factors;
  for (auto [choices, car] : by_row) {
    rows.advance_to(choices);
    BigCount factor;
    for (int l : profile.allowed(car)) factor += rows[l - 1];
    factors.push_back(std::move(factor));
  }
  return product(factors);
}

BigCount ksp_count(int n, int k, const CountGuards& guards) {
  require_n(n, guards.max_power_n, "ksp_count");
  require_k(n, k);
  const BigCount all = binom(n, k);
  std::vector<BigCount> factors;
  for (int i = 0; i < n; ++i) factors.push_back(all - binom(i, k));
  return product(factors);
}

BigCount ksp_count(const Permutation& outcome, int k) {
  const int n = outcome.size();
  require_k(n, k);
  std::vector<BigCount> factors;
  for (int car = 1; car <= n; ++car) factors.push_back(binom(n - car_inversions(outcome, car) - 1, k - 1));
  return product(factors);
}

int interval_placements(const Permutation& p, int position, int k) {
  const int n = p.size();
  require_k(n, k);
  const int a = dominance_window(p, position);
  if (position <= n - k) return std::min(a, k);
  if (a < k + position - n) return 0;
  return std::min(n - position - k + a + 1, n - position + 1);
}

BigCount kint_profile_outcome(const SizeProfile& profile, const Permutation& outcome) {
  const int n = profile.size();
  if (outcome.size() != n) throw std::invalid_argument("outcome length differs from profile size");
  BigCount out(1);
  for (int position = 1; position <= n; ++position) {
    std::int64_t choices = 0;
    for (int k : profile.allowed(outcome[position])) choices += interval_placements(outcome, position, k);
    if (choices == 0) return BigCount(0);
    out *= small(choices);
  }
  return out;
}

BigCount kint_profile_count(const SizeProfile& profile, const CountGuards& guards) {
  return sum_over_permutations(profile.size(), guards,
                               [&](const Permutation& p) { return kint_profile_outcome(profile, p); });
}

BigCount kipf_count(int n, int k, const CountGuards& guards) {
  require_n(n, guards.max_permutation_n, "kipf_count");
  require_k(n, k);
  return sum_over_permutations(n, guards, [&](const Permutation& p) { return kipf_count(p, k); });
}

BigCount kipf_count(const Permutation& outcome, int k) {
  const int n = outcome.size();
  require_k(n, k);
  if (!ends_increasing(outcome, k)) return BigCount(0);
  BigCount out(1);
  for (int i = 1; i <= n - k; ++i) out *= small(std::min(dominance_window(outcome, i), k));
  for (int i = n - k + 1; i <= n; ++i) {
    out *= small(std::min(n - i - k + dominance_window(outcome, i) + 1, n - i + 1));
  }
  return out;
}

BigCount ipf_count(int n, const CountGuards& guards) {
  require_n(n, guards.max_power_n, "ipf_count");
  return factorial(n) * pf_count(n, guards);
}

BigCount ipf_count(const Permutation& outcome) { return factorial(outcome.size()) * pf_count(outcome); }

BigCount ipf_corollary_nm1(int n, const CountGuards& guards) {
  require_n(n, guards.max_power_n, "ipf_corollary_nm1");
  if (n < 2) throw std::out_of_range("ipf_corollary_nm1 needs n >= 2");
  return BigCount::pow2(static_cast<std::uint64_t>(n - 1));
}

BigCount ipf_corollary_nm1(const Permutation& outcome) {
  const int n = outcome.size();
  if (n < 2) throw std::out_of_range("ipf_corollary_nm1 needs n >= 2");
  if (!ends_increasing(outcome, n - 1)) {
    throw std::invalid_argument("outcome " + outcome.str() + " does not end with " +
                                std::to_string(n - 1) + " increasing entries");
  }
  const int first = outcome[1];
  if (first == n) return BigCount(1);
  return BigCount::pow2(static_cast<std::uint64_t>(n - first - 1));
}

BigCount ipf_corollary_2(int n, const CountGuards& guards) {
  require_n(n, guards.max_table_n, "ipf_corollary_2");
  if (n < 2) throw std::out_of_range("ipf_corollary_2 needs n >= 2");
  const auto row = eulerian_row(n - 1);
  BigCount total;
  for (int k = 1; k <= n - 1; ++k) {
    total += small(n - k) * row[static_cast<std::size_t>(k - 1)] *
             BigCount::pow2(static_cast<std::uint64_t>(k - 1));
  }
  return total;
}

BigCount ipf_corollary_2(const Permutation& outcome) {
  const int n = outcome.size();
  if (n < 2) throw std::out_of_range("ipf_corollary_2 needs n >= 2");
  if (!ends_increasing(outcome, 2)) {
    throw std::invalid_argument("outcome " + outcome.str() + " does not end with an ascent");
  }
  return BigCount::pow2(static_cast<std::uint64_t>(ascents(outcome) - 1));
}

BigCount p_count(int n, int k, const CountGuards& guards) {
  require_n(n, guards.max_table_n, "p_count");
  if (k < 0 || k > n - 1) {
    throw std::out_of_range("p_count: k = " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  }
  return small(n - k) * eulerian(n - 1, k - 1);
}

BigCount ordered_subsets(int n) {
  if (n < 0) throw std::invalid_argument("ordered_subsets: n must be nonnegative");
  return ordered_subset_prefix(n).back();
}

BigCount opf_count(int n, const CountGuards& guards) {
  require_n(n, guards.max_table_n, "opf_count");
  const auto prefix = ordered_subset_prefix(n);
  std::vector<BigCount> factors;
  for (int i = 0; i < n; ++i) factors.push_back(prefix.back() - prefix[static_cast<std::size_t>(i)]);
  return product(factors);
}

BigCount opf_count(const SizeProfile& profile, const CountGuards& guards) {
  const int n = profile.size();
  require_n(n, guards.max_table_n, "opf_count");
  std::vector<BigCount> factors;
  for (int car = 1; car <= n; ++car) factors.push_back(ordered_extension_factor(n, car - 1, profile.allowed(car)));
  return product(factors);
}

BigCount opf_count(const Permutation& outcome) {
  return exact_quotient(opf_count(outcome.size()), factorial(outcome.size()), "opf_count");
}

BigCount opf_count(const SizeProfile& profile, const Permutation& outcome) {
  const int n = profile.size();
  if (outcome.size() != n) throw std::invalid_argument("outcome length differs from profile size");
  // With car-1 spots taken, each free spot is the landing spot of the same
  // number of ordered sets, so each factor splits evenly over n-car+1 spots.
  std::vector<BigCount> factors;
  for (int car = 1; car <= n; ++car) {
    factors.push_back(exact_quotient(ordered_extension_factor(n, car - 1, profile.allowed(car)),
                                     small(n - car + 1), "opf_count"));
  }
  return product(factors);
}

BigCount extension_count_subset(int n, int parked, int size) {
  if (n < 1) throw std::invalid_argument("extension_count_subset: n must be >= 1");
  if (parked < 0 || parked >= n) {
    throw std::out_of_range("extension_count_subset: parked cars outside 0.." + std::to_string(n - 1));
  }
  if (size < 1 || size > n) {
    throw std::out_of_range("extension_count_subset: size outside 1.." + std::to_string(n));
  }
  return binom(n, size) - binom(parked, size);
}

StartRange interval_start_range(const Permutation& p, int car, int k) {
  const int n = p.size();
  require_k(n, k);
  const int spot = inverse(p)[car];
  const int a = dominance_window(p, spot);
  return {std::max(spot - a + 1, spot - k + 1), std::min(spot, n - k + 1)};
}

StartRange classical_start_range(const Permutation& p, int car) {
  if (car < 1 || car > p.size()) throw std::out_of_range("car outside 1..n");
  const int spot = inverse(p)[car];
  return {spot - dominance_window(p, spot) + 1, spot};
}

BigCount formula_total(const VariantSpec& spec, int n, const CountGuards& guards) {
  spec.validate_for(n);
  switch (spec.tag()) {
    case Variant::classical: return pf_count(n, guards);
    case Variant::subset: return sp_count(n, guards);
    case Variant::k_subset: return ksp_count(n, spec.k(), guards);
    case Variant::size_profile: return lsp_count(spec.profile(), guards);
    case Variant::interval: return ipf_count(n, guards);
    case Variant::k_interval: return kipf_count(n, spec.k(), guards);
    case Variant::interval_profile: return kint_profile_count(spec.profile(), guards);
    case Variant::ordered: return opf_count(n, guards);
    case Variant::ordered_profile: return opf_count(spec.profile(), guards);
  }
  throw std::logic_error("unhandled variant");
}

BigCount formula_outcome(const VariantSpec& spec, const Permutation& outcome) {
  spec.validate_for(outcome.size());
  switch (spec.tag()) {
    case Variant::classical: return pf_count(outcome);
    case Variant::subset: return sp_count(outcome);
    case Variant::k_subset: return ksp_count(outcome, spec.k());
    case Variant::size_profile: return lsp_count(spec.profile(), outcome);
    case Variant::interval: return ipf_count(outcome);
    case Variant::k_interval: return kipf_count(outcome, spec.k());
    case Variant::interval_profile: return kint_profile_outcome(spec.profile(), outcome);
    case Variant::ordered: return opf_count(outcome);
    case Variant::ordered_profile: return opf_count(spec.profile(), outcome);
  }
  throw std::logic_error("unhandled variant");
}

}  // namespace parkfn
