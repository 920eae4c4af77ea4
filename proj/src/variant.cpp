#include "parkfn/variant.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace parkfn {

SizeProfile::SizeProfile(int n, std::vector<std::vector<int>> allowed)
    : n_(n), allowed_(std::move(allowed)) {
  if (n < 1) throw std::invalid_argument("size profile: n must be >= 1");
  if (static_cast<int>(allowed_.size()) != n) {
    throw std::invalid_argument("size profile: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(allowed_.size()));
  }
  for (std::size_t car = 0; car < allowed_.size(); ++car) {
    auto& sizes = allowed_[car];
    if (sizes.empty()) {
      throw std::invalid_argument("size profile: car " + std::to_string(car + 1) +
                                  " has no allowed sizes");
    }
    for (int s : sizes) {
      if (s < 1 || s > n) {
        throw std::invalid_argument("size profile: size " + std::to_string(s) + " for car " +
                                    std::to_string(car + 1) + " outside 1.." + std::to_string(n));
      }
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  }
}

SizeProfile SizeProfile::full(int n) {
  if (n < 1) throw std::invalid_argument("size profile: n must be >= 1");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) all[static_cast<std::size_t>(s - 1)] = s;
  return SizeProfile(n, std::vector<std::vector<int>>(static_cast<std::size_t>(n), all));
}

SizeProfile SizeProfile::uniform(int n, int size) {
  if (n < 1) throw std::invalid_argument("size profile: n must be >= 1");
  return SizeProfile(n, std::vector<std::vector<int>>(static_cast<std::size_t>(n), {size}));
}

namespace {

struct NameEntry {
  Variant tag;
  std::string_view short_name;
  std::string_view long_name;
};

constexpr std::array<NameEntry, 9> kNames{{
    {Variant::classical, "pf", "classical"},
    {Variant::subset, "sp", "subset"},
    {Variant::k_subset, "ksp", "k-subset"},
    {Variant::size_profile, "lsp", "size-profile"},
    {Variant::interval, "ipf", "interval"},
    {Variant::k_interval, "kipf", "k-interval"},
    {Variant::interval_profile, "kint", "interval-profile"},
    {Variant::ordered, "opf", "ordered"},
    {Variant::ordered_profile, "lopf", "ordered-profile"},
}};

const NameEntry& entry(Variant tag) {
  for (const auto& e : kNames) {
    if (e.tag == tag) return e;
  }
  throw std::logic_error("unknown variant tag");
}

}  // namespace

VariantSpec VariantSpec::k_subset(int k) {
  VariantSpec spec(Variant::k_subset);
  spec.k_ = k;
  return spec;
}

VariantSpec VariantSpec::k_interval(int k) {
  VariantSpec spec(Variant::k_interval);
  spec.k_ = k;
  return spec;
}

VariantSpec VariantSpec::size_profile(SizeProfile profile) {
  VariantSpec spec(Variant::size_profile);
  spec.profile_ = std::move(profile);
  return spec;
}

VariantSpec VariantSpec::interval_profile(SizeProfile profile) {
  VariantSpec spec(Variant::interval_profile);
  spec.profile_ = std::move(profile);
  return spec;
}

VariantSpec VariantSpec::ordered_profile(SizeProfile profile) {
  VariantSpec spec(Variant::ordered_profile);
  spec.profile_ = std::move(profile);
  return spec;
}

int VariantSpec::k() const {
  if (!k_) throw std::logic_error("variant " + name() + " carries no k");
  return *k_;
}

const SizeProfile& VariantSpec::profile() const {
  if (!profile_) throw std::logic_error("variant " + name() + " carries no profile");
  return *profile_;
}

void VariantSpec::validate_for(int n) const {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k_ && (*k_ < 1 || *k_ > n)) {
    throw std::invalid_argument("k = " + std::to_string(*k_) + " outside 1.." + std::to_string(n));
  }
  if (profile_ && profile_->size() != n) {
    throw std::invalid_argument("profile is for n = " + std::to_string(profile_->size()) +
                                ", not n = " + std::to_string(n));
  }
}

std::string_view VariantSpec::short_name(Variant tag) { return entry(tag).short_name; }

std::string_view VariantSpec::long_name(Variant tag) { return entry(tag).long_name; }

std::optional<Variant> VariantSpec::parse(std::string_view text) {
  for (const auto& e : kNames) {
    if (text == e.short_name || text == e.long_name) return e.tag;
  }
  return std::nullopt;
}

}  // namespace parkfn
