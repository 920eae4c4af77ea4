#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "parkfn/bigcount.hpp"

namespace parkfn {

// A permutation of {1..n} in one-line notation. Position j (1-based) holds
// the label of the car that ended up in spot j.
class Permutation {
 public:
  // Throws std::invalid_argument unless values is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // 1-based position.
  int operator[](int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> values() const { return values_; }

  // Compact digits when n <= 9, comma-separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend class PermutationRange;
  std::vector<int> values_;
};

Permutation inverse(const Permutation& p);

int inversions(const Permutation& p);
// #{j > i : p[j] < p[i]}.
int local_inversions(const Permutation& p, int position);
// #{spots k before car's spot : p[k] > car}, i.e. spots to the left of the car
// that were still free when it parked. This is local_inversions(inverse(p), car).
int car_inversions(const Permutation& p, int car);
int ascents(const Permutation& p);

// Largest w <= i such that p[i] is the maximum of p[i-w+1..i]. Always >= 1.
int dominance_window(const Permutation& p, int position);

// True iff the last k entries are strictly increasing.
bool ends_increasing(const Permutation& p, int k);

// Eulerian number <n, k>: permutations of n with exactly k ascents, via the
// standard recurrence with <0,0> = 1.
BigCount eulerian(int n, int k);
// <n, 0>, ..., <n, n-1> (just <0,0> = 1 when n = 0).
std::vector<BigCount> eulerian_row(int n);

inline constexpr int kDefaultPermutationGuard = 12;

// Lexicographic enumeration of S_n, lazily. Refuses n > guard (GuardError).
class PermutationRange {
 public:
  explicit PermutationRange(int n, int guard = kDefaultPermutationGuard);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class PermutationRange;
    explicit iterator(int n) : current_(Permutation::identity(n)), done_(false) {}
    Permutation current_{std::vector<int>{1}};
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  iterator end() const { return iterator(); }

 private:
  static bool advance(Permutation& p);
  int n_;
};

inline PermutationRange all_permutations(int n, int guard = kDefaultPermutationGuard) {
  return PermutationRange(n, guard);
}

}  // namespace parkfn
