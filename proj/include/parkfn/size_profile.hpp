#pragma once

#include <vector>

namespace parkfn {

// Per-car allowed set sizes (or interval lengths). Each entry is a nonempty
// subset of {1..n}; stored sorted and duplicate-free.
class SizeProfile {
 public:
  // Throws std::invalid_argument on a wrong car count, an empty entry, or a
  // size outside 1..n.
  SizeProfile(int n, std::vector<std::vector<int>> allowed);
  static SizeProfile full(int n);
  static SizeProfile uniform(int n, int size);

  int size() const { return n_; }
  // 1-based car index.
  const std::vector<int>& allowed(int car) const { return allowed_[static_cast<std::size_t>(car - 1)]; }
  const std::vector<std::vector<int>>& entries() const { return allowed_; }

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> allowed_;
};

}  // namespace parkfn
