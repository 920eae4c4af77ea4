#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "parkfn/bigcount.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/permutation.hpp"
#include "parkfn/size_profile.hpp"
#include "parkfn/variant.hpp"

namespace parkfn {

struct Check {
  std::string name;
  nlohmann::json params;  // always an object
  BigCount expected;
  BigCount actual;
  bool pass = false;
};

class VerifyReport {
 public:
  void add(std::string name, nlohmann::json params, BigCount expected, BigCount actual);
  void append(const VerifyReport& other);
  // Sorts by name, then by params.
  void canonicalize();

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failed_count() const;

  // {"checks":[{"name","params","expected","actual","pass"}],"all_passed"};
  // counts are decimal strings.
  nlohmann::json to_json() const;
  static VerifyReport from_json(const nlohmann::json& doc);

 private:
  std::vector<Check> checks_;
};

using OutcomeFormula = std::function<BigCount(const Permutation&)>;

// One check per permutation of S_n comparing formula(pi) with the tally,
// including outcomes the oracle never produced (those must be formula zeros).
void compare_outcomes(VerifyReport& report, std::string_view name, const nlohmann::json& params,
                      int n, const OutcomeTally& tally, const OutcomeFormula& formula);

// Formula vs. exhaustion for a single variant, for every n up to n_max
// (k-variants start at n = k; profile variants use the profile's n).
VerifyReport verify_variant(const VariantSpec& spec, int n_max, const OracleOptions& options = {});

inline constexpr int kIdentityGuard = 8;

// Summation identities, ending-ascent and Eulerian counts, the placement-sum
// identity, ordered-outcome uniformity and closed-form consistency for n <= n_max.
VerifyReport verify_identities(int n_max, const OracleOptions& options = {});

// Each size 1..n is kept independently with probability 1/2 (the top bit of
// one mt19937_64 draw); a car whose set comes out empty is redrawn.
SizeProfile random_profile(int n, std::mt19937_64& rng);

inline constexpr int kProfileGuard = 4;

// `trials` seeded random profiles, each checked as a size profile, an
// interval-length profile and an ordered size profile against exhaustion.
VerifyReport verify_profiles(int n, int trials, std::uint64_t seed, const OracleOptions& options = {});

}  // namespace parkfn
