#include "parkfn/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parkfn/errors.hpp"

namespace parkfn {
namespace {

void require_position(const Permutation& p, int position, const char* what) {
  if (position < 1 || position > p.size()) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(position) +
                            " outside 1.." + std::to_string(p.size()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("permutation must have at least one entry");
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  std::string out;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (size() > 9 && j > 0) out += ',';
    out += std::to_string(values_[j]);
  }
  return out;
}

Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int j = 1; j <= p.size(); ++j) inv[static_cast<std::size_t>(p[j] - 1)] = j;
  return Permutation(std::move(inv));
}

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) count += local_inversions(p, i);
  return count;
}

int local_inversions(const Permutation& p, int position) {
  require_position(p, position, "position");
  int count = 0;
  for (int j = position + 1; j <= p.size(); ++j) count += p[j] < p[position] ? 1 : 0;
  return count;
}

int car_inversions(const Permutation& p, int car) {
  require_position(p, car, "car");
  int count = 0;
  for (int k = 1; p[k] != car; ++k) count += p[k] > car ? 1 : 0;
  return count;
}

int ascents(const Permutation& p) {
  int count = 0;
  for (int i = 2; i <= p.size(); ++i) count += p[i - 1] < p[i] ? 1 : 0;
  return count;
}

int dominance_window(const Permutation& p, int position) {
  require_position(p, position, "position");
  int width = 1;
  while (width < position && p[position - width] < p[position]) ++width;
  return width;
}

bool ends_increasing(const Permutation& p, int k) {
  if (k < 1 || k > p.size()) {
    throw std::out_of_range("tail length " + std::to_string(k) + " outside 1.." +
                            std::to_string(p.size()));
  }
  for (int i = p.size() - k + 2; i <= p.size(); ++i) {
    if (p[i - 1] > p[i]) return false;
  }
  return true;
}

std::vector<BigCount> eulerian_row(int n) {
  if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
  // row[k] = <m, k> for the current m; <m, -1> = 0 is implicit.
  std::vector<BigCount> row{BigCount(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      BigCount value;
      if (k < static_cast<int>(row.size())) {
        value += BigCount(static_cast<std::uint64_t>(k + 1)) * row[static_cast<std::size_t>(k)];
      }
      if (k >= 1) {
        value += BigCount(static_cast<std::uint64_t>(m - k)) * row[static_cast<std::size_t>(k - 1)];
      }
      next[static_cast<std::size_t>(k)] = std::move(value);
    }
    row = std::move(next);
  }
  return row;
}

BigCount eulerian(int n, int k) {
  if (n < 0) throw std::invalid_argument("eulerian: n must be nonnegative");
  if (k < 0 || (n == 0 && k > 0) || (n > 0 && k >= n)) return BigCount(0);
  return eulerian_row(n)[static_cast<std::size_t>(k)];
}

PermutationRange::PermutationRange(int n, int guard) : n_(n) {
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  if (n > guard) {
    throw GuardError("refusing to enumerate S_" + std::to_string(n) +
                            ": size exceeds guard " + std::to_string(guard));
  }
}

bool PermutationRange::advance(Permutation& p) {
  return std::next_permutation(p.values_.begin(), p.values_.end());
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (!advance(current_)) done_ = true;
  return *this;
}

}  // namespace parkfn
