#include "parkfn/oracle.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/simulator.hpp"

namespace parkfn {
namespace {

BigCount small(std::int64_t v) { return BigCount(static_cast<std::uint64_t>(v)); }

// Per-worker tally with machine-word counters. Outcomes of n <= 16 pack into
// one word, four bits per slot.
class LocalTally {
 public:
  explicit LocalTally(int n) : n_(n) {}

  void add(std::span<const int> slots) {
    ++parked_;
    if (n_ <= 16) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        key |= static_cast<std::uint64_t>(slots[j] - 1) << (4 * j);
      }
      ++packed_[key];
    } else {
      ++wide_[std::vector<int>(slots.begin(), slots.end())];
    }
  }

  void fail() { ++failed_; }

  void merge_into(OutcomeTally& out) const {
    out.total += BigCount(parked_);
    out.failures += BigCount(failed_);
    for (const auto& [key, count] : packed_) {
      std::vector<int> values(static_cast<std::size_t>(n_));
      for (int j = 0; j < n_; ++j) values[static_cast<std::size_t>(j)] = static_cast<int>((key >> (4 * j)) & 0xF) + 1;
      out.per_outcome[Permutation(std::move(values))] += BigCount(count);
    }
    for (const auto& [values, count] : wide_) out.per_outcome[Permutation(values)] += BigCount(count);
  }

 private:
  int n_;
  std::uint64_t parked_ = 0;
  std::uint64_t failed_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> packed_;
  std::map<std::vector<int>, std::uint64_t> wide_;
};

// Mixed-radix walk over choices[0] x ... x choices[n-1], car 0 most
// significant. Worker w takes the first-car choices congruent to w.
template <typename Choice, typename Park>
OutcomeTally enumerate(const std::vector<std::vector<Choice>>& choices, Park park, unsigned workers) {
  const int n = static_cast<int>(choices.size());
  const std::size_t first_radix = choices[0].size();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, first_radix));

  std::vector<LocalTally> locals(workers, LocalTally(n));
  auto run = [&](unsigned w) {
    LocalTally& tally = locals[w];
    std::vector<Choice> family(static_cast<std::size_t>(n));
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    std::vector<int> slots(static_cast<std::size_t>(n));
    for (std::size_t lead = w; lead < first_radix; lead += workers) {
      family[0] = choices[0][lead];
      for (int i = 1; i < n; ++i) {
        digit[static_cast<std::size_t>(i)] = 0;
        family[static_cast<std::size_t>(i)] = choices[static_cast<std::size_t>(i)][0];
      }
      while (true) {
        std::fill(slots.begin(), slots.end(), 0);
        if (park(std::span<const Choice>(family), std::span<int>(slots)) == 0) {
          tally.add(slots);
        } else {
          tally.fail();
        }
        int i = n - 1;
        for (; i >= 1; --i) {
          auto& d = digit[static_cast<std::size_t>(i)];
          const auto& options = choices[static_cast<std::size_t>(i)];
          if (++d < options.size()) {
            family[static_cast<std::size_t>(i)] = options[d];
            break;
          }
          d = 0;
          family[static_cast<std::size_t>(i)] = options[0];
        }
        if (i < 1) break;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  OutcomeTally out;
  for (const auto& local : locals) local.merge_into(out);
  return out;
}

std::uint64_t low_bits(int width) { return width == 64 ? ~0ULL : ((1ULL << width) - 1); }

// Subsets by ascending bitmask value, keeping those whose size is allowed.
std::vector<std::uint64_t> subsets_with_sizes(int n, const std::vector<int>& sizes) {
  std::vector<std::uint64_t> out;
  for (int s : sizes) {
    // Gosper's hack walks the s-subsets in increasing mask order.
    const std::uint64_t last = low_bits(s) << (n - s);
    std::uint64_t mask = low_bits(s);
    while (true) {
      out.push_back(mask);
      if (mask == last) break;
      const std::uint64_t lowest = mask & (~mask + 1);
      const std::uint64_t ripple = mask + lowest;
      mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Intervals ordered by start, then length.
std::vector<std::uint64_t> intervals_with_lengths(int n, const std::vector<int>& lengths) {
  std::vector<std::uint64_t> out;
  for (int start = 1; start <= n; ++start) {
    for (int len : lengths) {
      if (start + len - 1 <= n) out.push_back(SpotSet::interval(start, len, n).bits());
    }
  }
  return out;
}

// Ordered subsets ordered by length, then lexicographically.
std::vector<std::vector<int>> ordered_with_lengths(int n, const std::vector<int>& lengths) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto extend = [&](auto&& self, int target) -> void {
    if (static_cast<int>(current.size()) == target) {
      out.push_back(current);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      current.push_back(s);
      self(self, target);
      current.pop_back();
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  for (int len : lengths) extend(extend, len);
  return out;
}

std::vector<int> sizes_for_car(const VariantSpec& spec, int n, int car) {
  switch (spec.tag()) {
    case Variant::subset:
    case Variant::interval:
    case Variant::ordered:
      return SizeProfile::full(n).allowed(car);
    case Variant::k_subset:
    case Variant::k_interval:
      return {spec.k()};
    case Variant::size_profile:
    case Variant::interval_profile:
    case Variant::ordered_profile:
      return spec.profile().allowed(car);
    case Variant::classical:
      break;
  }
  throw std::logic_error("variant has no size list");
}

BigCount choices_for_car(const VariantSpec& spec, int n, int car) {
  if (spec.tag() == Variant::classical) return small(n);
  BigCount count;
  for (int s : sizes_for_car(spec, n, car)) {
    switch (spec.tag()) {
      case Variant::subset:
      case Variant::k_subset:
      case Variant::size_profile:
        count += binom(n, s);
        break;
      case Variant::interval:
      case Variant::k_interval:
      case Variant::interval_profile:
        count += small(n - s + 1);
        break;
      case Variant::ordered:
      case Variant::ordered_profile:
        count += binom(n, s) * factorial(s);
        break;
      case Variant::classical:
        break;
    }
  }
  return count;
}

}  // namespace

std::uint64_t budget_from_environment() {
  const char* text = std::getenv("PARKFN_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultFamilyBudget;
  errno = 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (errno != 0 || *end != '\0' || text[0] == '-') {
    throw std::invalid_argument(std::string("PARKFN_BUDGET is not a nonnegative integer: '") + text + "'");
  }
  return value;
}

BigCount OutcomeTally::count(const Permutation& outcome) const {
  auto it = per_outcome.find(outcome);
  return it == per_outcome.end() ? BigCount(0) : it->second;
}

BigCount family_space_size(int n, const VariantSpec& spec) {
  spec.validate_for(n);
  std::vector<BigCount> factors;
  for (int car = 1; car <= n; ++car) factors.push_back(choices_for_car(spec, n, car));
  return product(factors);
}

OutcomeTally brute_tally(int n, const VariantSpec& spec, const OracleOptions& options) {
  require_street_length(n);
  const BigCount space = family_space_size(n, spec);
  if (space > BigCount(options.budget)) {
    throw GuardError("family space of " + space.str() + " for " + spec.name() + " at n = " +
                     std::to_string(n) + " exceeds budget " + std::to_string(options.budget));
  }

  switch (spec.tag()) {
    case Variant::classical: {
      std::vector<int> spots(static_cast<std::size_t>(n));
      std::iota(spots.begin(), spots.end(), 1);
      std::vector<std::vector<int>> choices(static_cast<std::size_t>(n), spots);
      return enumerate(choices, kernel::park_preferences, options.workers);
    }
    case Variant::subset:
    case Variant::k_subset:
    case Variant::size_profile: {
      std::vector<std::vector<std::uint64_t>> choices;
      for (int car = 1; car <= n; ++car) choices.push_back(subsets_with_sizes(n, sizes_for_car(spec, n, car)));
      return enumerate(choices, kernel::park_bitsets, options.workers);
    }
    case Variant::interval:
    case Variant::k_interval:
    case Variant::interval_profile: {
      std::vector<std::vector<std::uint64_t>> choices;
      for (int car = 1; car <= n; ++car) choices.push_back(intervals_with_lengths(n, sizes_for_car(spec, n, car)));
      return enumerate(choices, kernel::park_bitsets, options.workers);
    }
    case Variant::ordered:
    case Variant::ordered_profile: {
      std::vector<std::vector<std::vector<int>>> lists;
      for (int car = 1; car <= n; ++car) lists.push_back(ordered_with_lengths(n, sizes_for_car(spec, n, car)));
      std::vector<std::vector<const std::vector<int>*>> choices(lists.size());
      for (std::size_t car = 0; car < lists.size(); ++car) {
        for (const auto& list : lists[car]) choices[car].push_back(&list);
      }
      return enumerate(choices, kernel::park_ordered, options.workers);
    }
  }
  throw std::logic_error("unhandled variant");
}

namespace {

template <typename Pred>
BigCount count_permutations(int n, Pred&& pred) {
  if (n > kAscentBruteGuard) {
    throw GuardError("ascent census: n = " + std::to_string(n) + " exceeds guard " +
                     std::to_string(kAscentBruteGuard));
  }
  std::uint64_t count = 0;
  for (const Permutation& p : all_permutations(n, kAscentBruteGuard)) count += pred(p) ? 1 : 0;
  return BigCount(count);
}

}  // namespace

BigCount brute_ascent_ending(int n, int k) {
  return count_permutations(n, [&](const Permutation& p) {
    return n >= 2 && p[n - 1] < p[n] && ascents(p) == k;
  });
}

BigCount brute_ascent_census(int n, int k) {
  return count_permutations(n, [&](const Permutation& p) { return ascents(p) == k; });
}

}  // namespace parkfn
