#include "parkfn/simulator.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace parkfn {
namespace {

std::uint64_t street_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

template <typename Kernel>
ParkResult finish(int n, Kernel&& run) {
  std::vector<int> slots(static_cast<std::size_t>(n), 0);
  int failed = run(std::span<int>(slots));
  if (failed != 0) return CarFailed{failed};
  return Permutation(std::move(slots));
}

// Runs a full kernel on the first m cars only and packages a partial outcome.
template <typename Kernel>
ReplayResult replay(int n, int m, Kernel&& run) {
  if (m < 0 || m > n) {
    throw std::out_of_range("replay length " + std::to_string(m) + " outside 0.." +
                            std::to_string(n));
  }
  std::vector<int> slots(static_cast<std::size_t>(n), 0);
  int failed = run(std::span<int>(slots));
  if (failed != 0) return CarFailed{failed};
  return PartialOutcome(m, std::move(slots));
}

}  // namespace

void require_street_length(int n) {
  if (n < 1 || n > kMaxSpots) {
    throw std::invalid_argument("street length " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxSpots));
  }
}

SpotSet SpotSet::from_members(std::span<const int> members, int n) {
  require_street_length(n);
  std::uint64_t bits = 0;
  for (int s : members) {
    if (s < 1 || s > n) {
      throw std::invalid_argument("spot " + std::to_string(s) + " outside 1.." + std::to_string(n));
    }
    bits |= 1ULL << (s - 1);
  }
  return from_bits(bits, n);
}

SpotSet SpotSet::from_bits(std::uint64_t bits, int n) {
  require_street_length(n);
  if (bits == 0) throw std::invalid_argument("spot set must be nonempty");
  if ((bits & ~street_mask(n)) != 0) {
    throw std::invalid_argument("spot set has members beyond spot " + std::to_string(n));
  }
  return SpotSet(bits);
}

SpotSet SpotSet::interval(int start, int length, int n) {
  require_street_length(n);
  if (start < 1 || length < 1 || start + length - 1 > n) {
    throw std::invalid_argument("interval [" + std::to_string(start) + ", " +
                                std::to_string(start + length - 1) + "] does not fit in 1.." +
                                std::to_string(n));
  }
  return SpotSet(street_mask(length) << (start - 1));
}

bool SpotSet::contains(int spot) const {
  return spot >= 1 && spot <= kMaxSpots && ((bits_ >> (spot - 1)) & 1ULL) != 0;
}

int SpotSet::size() const { return std::popcount(bits_); }

int SpotSet::min() const { return std::countr_zero(bits_) + 1; }

bool SpotSet::is_interval() const {
  std::uint64_t shifted = bits_ >> std::countr_zero(bits_);
  return (shifted & (shifted + 1)) == 0;
}

std::vector<int> SpotSet::members() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

SetFamily::SetFamily(int n, std::vector<SpotSet> sets) : n_(n), sets_(std::move(sets)) {
  require_street_length(n);
  if (static_cast<int>(sets_.size()) != n) {
    throw std::invalid_argument("family has " + std::to_string(sets_.size()) +
                                " sets for a street of length " + std::to_string(n));
  }
  for (const SpotSet& s : sets_) {
    if ((s.bits() & ~street_mask(n)) != 0) {
      throw std::invalid_argument("spot set has members beyond spot " + std::to_string(n));
    }
  }
}

SetFamily SetFamily::from_members(const std::vector<std::vector<int>>& sets) {
  const int n = static_cast<int>(sets.size());
  require_street_length(n);
  std::vector<SpotSet> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(SpotSet::from_members(s, n));
  return SetFamily(n, std::move(out));
}

OrderedFamily::OrderedFamily(int n, std::vector<std::vector<int>> prefs)
    : n_(n), prefs_(std::move(prefs)) {
  require_street_length(n);
  if (static_cast<int>(prefs_.size()) != n) {
    throw std::invalid_argument("family has " + std::to_string(prefs_.size()) +
                                " preference lists for a street of length " + std::to_string(n));
  }
  for (const auto& list : prefs_) {
    if (list.empty()) throw std::invalid_argument("preference list must be nonempty");
    std::uint64_t seen = 0;
    for (int s : list) {
      if (s < 1 || s > n) {
        throw std::invalid_argument("spot " + std::to_string(s) + " outside 1.." +
                                    std::to_string(n));
      }
      if ((seen >> (s - 1)) & 1ULL) {
        throw std::invalid_argument("spot " + std::to_string(s) + " repeated in preference list");
      }
      seen |= 1ULL << (s - 1);
    }
  }
}

PartialOutcome::PartialOutcome(int m, std::vector<int> slots) : m_(m), slots_(std::move(slots)) {
  const int n = size();
  if (m < 0 || m > n) throw std::invalid_argument("partial outcome: parked count out of range");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  int free = 0;
  for (int v : slots_) {
    if (v == 0) {
      ++free;
      continue;
    }
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("partial outcome: invalid or repeated car label " +
                                  std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (free != n - m) throw std::invalid_argument("partial outcome: wrong number of free slots");
}

std::optional<int> PartialOutcome::occupant(int spot) const {
  int v = slots_.at(static_cast<std::size_t>(spot - 1));
  if (v == 0) return std::nullopt;
  return v;
}

std::string PartialOutcome::str() const {
  std::string out;
  for (std::size_t j = 0; j < slots_.size(); ++j) {
    if (size() > 9 && j > 0) out += ',';
    out += slots_[j] == 0 ? std::string("*") : std::to_string(slots_[j]);
  }
  return out;
}

namespace kernel {

int park_bitsets(std::span<const std::uint64_t> sets, std::span<int> slots) {
  std::uint64_t occupied = 0;
  for (std::size_t car = 0; car < sets.size(); ++car) {
    std::uint64_t open = sets[car] & ~occupied;
    if (open == 0) return static_cast<int>(car) + 1;
    int spot = std::countr_zero(open);
    occupied |= 1ULL << spot;
    slots[static_cast<std::size_t>(spot)] = static_cast<int>(car) + 1;
  }
  return 0;
}

int park_preferences(std::span<const int> prefs, std::span<int> slots) {
  const int n = static_cast<int>(slots.size());
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    int spot = prefs[car];
    while (spot <= n && slots[static_cast<std::size_t>(spot - 1)] != 0) ++spot;
    if (spot > n) return static_cast<int>(car) + 1;
    slots[static_cast<std::size_t>(spot - 1)] = static_cast<int>(car) + 1;
  }
  return 0;
}

int park_ordered(std::span<const std::vector<int>* const> prefs, std::span<int> slots) {
  for (std::size_t car = 0; car < prefs.size(); ++car) {
    const std::vector<int>& list = *prefs[car];
    auto it = std::find_if(list.begin(), list.end(),
                           [&](int s) { return slots[static_cast<std::size_t>(s - 1)] == 0; });
    if (it == list.end()) return static_cast<int>(car) + 1;
    slots[static_cast<std::size_t>(*it - 1)] = static_cast<int>(car) + 1;
  }
  return 0;
}

}  // namespace kernel

ParkResult park_subsets(const SetFamily& family) {
  std::vector<std::uint64_t> bits;
  bits.reserve(family.sets().size());
  for (const SpotSet& s : family.sets()) bits.push_back(s.bits());
  return finish(family.size(), [&](std::span<int> slots) { return kernel::park_bitsets(bits, slots); });
}

ParkResult park_classical(std::span<const int> prefs) {
  const int n = static_cast<int>(prefs.size());
  require_street_length(n);
  for (int c : prefs) {
    if (c < 1 || c > n) {
      throw std::invalid_argument("preference " + std::to_string(c) + " outside 1.." +
                                  std::to_string(n));
    }
  }
  return finish(n, [&](std::span<int> slots) { return kernel::park_preferences(prefs, slots); });
}

namespace {

std::vector<const std::vector<int>*> list_pointers(const OrderedFamily& family, int count) {
  std::vector<const std::vector<int>*> out;
  for (int i = 0; i < count; ++i) out.push_back(&family.prefs()[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

ParkResult park_ordered(const OrderedFamily& family) {
  auto lists = list_pointers(family, family.size());
  return finish(family.size(), [&](std::span<int> slots) { return kernel::park_ordered(lists, slots); });
}

ReplayResult replay_partial(const SetFamily& family, int m) {
  return replay(family.size(), m, [&](std::span<int> slots) {
    std::vector<std::uint64_t> bits;
    for (int car = 1; car <= m; ++car) bits.push_back(family[car].bits());
    return kernel::park_bitsets(bits, slots);
  });
}

ReplayResult replay_partial(const OrderedFamily& family, int m) {
  return replay(family.size(), m, [&](std::span<int> slots) {
    auto lists = list_pointers(family, m);
    return kernel::park_ordered(lists, slots);
  });
}

}  // namespace parkfn
