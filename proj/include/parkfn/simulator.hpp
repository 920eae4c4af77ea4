#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parkfn/permutation.hpp"

namespace parkfn {

// Streets longer than this do not fit a SpotSet word.
inline constexpr int kMaxSpots = 64;

// Nonempty subset of {1..n}; bit (s-1) marks spot s.
class SpotSet {
 public:
  // Throws std::invalid_argument if empty or a member lies outside 1..n.
  static SpotSet from_members(std::span<const int> members, int n);
  static SpotSet from_bits(std::uint64_t bits, int n);
  static SpotSet interval(int start, int length, int n);

  std::uint64_t bits() const { return bits_; }
  bool contains(int spot) const;
  int size() const;
  int min() const;
  bool is_interval() const;
  std::vector<int> members() const;

  friend bool operator==(const SpotSet&, const SpotSet&) = default;

 private:
  explicit SpotSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_;
};

void require_street_length(int n);

// One acceptable-spot set per car, cars in parking order.
class SetFamily {
 public:
  SetFamily(int n, std::vector<SpotSet> sets);
  // Each set given by its members; throws on empty or out-of-range entries.
  static SetFamily from_members(const std::vector<std::vector<int>>& sets);

  int size() const { return n_; }
  const std::vector<SpotSet>& sets() const { return sets_; }
  const SpotSet& operator[](int car) const { return sets_[static_cast<std::size_t>(car - 1)]; }

 private:
  int n_;
  std::vector<SpotSet> sets_;
};

// One preference list per car; earlier entries are preferred.
class OrderedFamily {
 public:
  OrderedFamily(int n, std::vector<std::vector<int>> prefs);

  int size() const { return n_; }
  const std::vector<std::vector<int>>& prefs() const { return prefs_; }

 private:
  int n_;
  std::vector<std::vector<int>> prefs_;
};

struct CarFailed {
  int car;  // 1-based
  friend bool operator==(const CarFailed&, const CarFailed&) = default;
};

class ParkResult {
 public:
  ParkResult(Permutation outcome) : state_(std::move(outcome)) {}  // NOLINT
  ParkResult(CarFailed failure) : state_(failure) {}                // NOLINT

  bool parked() const { return std::holds_alternative<Permutation>(state_); }
  const Permutation& outcome() const { return std::get<Permutation>(state_); }
  int failed_car() const { return std::get<CarFailed>(state_).car; }

  friend bool operator==(const ParkResult&, const ParkResult&) = default;

 private:
  std::variant<Permutation, CarFailed> state_;
};

// The street after the first m cars have parked. slot value 0 = unoccupied.
class PartialOutcome {
 public:
  PartialOutcome(int m, std::vector<int> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  int parked() const { return m_; }
  std::span<const int> slots() const { return slots_; }
  std::optional<int> occupant(int spot) const;
  // e.g. "*1*", or "*,1,*" when n > 9.
  std::string str() const;

  friend bool operator==(const PartialOutcome&, const PartialOutcome&) = default;

 private:
  int m_;
  std::vector<int> slots_;
};

using ReplayResult = std::variant<PartialOutcome, CarFailed>;

ParkResult park_subsets(const SetFamily& family);
// Throws std::invalid_argument if a preference lies outside 1..n.
ParkResult park_classical(std::span<const int> prefs);
ParkResult park_ordered(const OrderedFamily& family);

ReplayResult replay_partial(const SetFamily& family, int m);
ReplayResult replay_partial(const OrderedFamily& family, int m);

// Allocation-free kernels used by the oracle. Each writes the car occupying
// each slot into `slots` (size n, 0 = free) and returns 0 on success or the
// 1-based index of the first car that cannot park.
namespace kernel {

int park_bitsets(std::span<const std::uint64_t> sets, std::span<int> slots);
int park_preferences(std::span<const int> prefs, std::span<int> slots);
int park_ordered(std::span<const std::vector<int>* const> prefs, std::span<int> slots);

}  // namespace kernel

}  // namespace parkfn
