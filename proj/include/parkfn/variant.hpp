#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "parkfn/size_profile.hpp"

namespace parkfn {

enum class Variant {
  classical,
  subset,
  k_subset,
  size_profile,
  interval,
  k_interval,
  interval_profile,
  ordered,
  ordered_profile,
};

// Selects which parking-function family an operation addresses.
class VariantSpec {
 public:
  static VariantSpec classical() { return VariantSpec(Variant::classical); }
  static VariantSpec subset() { return VariantSpec(Variant::subset); }
  static VariantSpec interval() { return VariantSpec(Variant::interval); }
  static VariantSpec ordered() { return VariantSpec(Variant::ordered); }
  static VariantSpec k_subset(int k);
  static VariantSpec k_interval(int k);
  static VariantSpec size_profile(SizeProfile profile);
  static VariantSpec interval_profile(SizeProfile profile);
  static VariantSpec ordered_profile(SizeProfile profile);

  Variant tag() const { return tag_; }
  bool has_k() const { return k_.has_value(); }
  int k() const;
  bool has_profile() const { return profile_.has_value(); }
  const SizeProfile& profile() const;

  // Throws std::invalid_argument when k or the profile does not fit n.
  void validate_for(int n) const;

  // Short name used on the command line and in reports ("sp", "kipf", ...).
  std::string name() const { return std::string(short_name(tag_)); }

  static std::string_view short_name(Variant tag);
  static std::string_view long_name(Variant tag);
  // Accepts either the short or the long name.
  static std::optional<Variant> parse(std::string_view text);
  static bool needs_k(Variant tag) { return tag == Variant::k_subset || tag == Variant::k_interval; }
  static bool needs_profile(Variant tag) {
    return tag == Variant::size_profile || tag == Variant::interval_profile ||
           tag == Variant::ordered_profile;
  }

 private:
  explicit VariantSpec(Variant tag) : tag_(tag) {}
  Variant tag_;
  std::optional<int> k_;
  std::optional<SizeProfile> profile_;
};

}  // namespace parkfn
