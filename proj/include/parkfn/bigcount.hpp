#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parkfn {

// Arbitrary-precision nonnegative integer. Every count in the library is a
// BigCount; there is no machine-word fast path.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t value);  // NOLINT(google-explicit-constructor)
  explicit BigCount(mpz_class value);

  // Parses a decimal string of digits; throws std::invalid_argument otherwise.
  static BigCount from_string(std::string_view text);
  static BigCount pow2(std::uint64_t exponent);
  static BigCount pow(const BigCount& base, std::uint64_t exponent);

  std::string str() const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error if !fits_u64()
  std::size_t bit_length() const;

  BigCount& operator+=(const BigCount& other);
  BigCount& operator*=(const BigCount& other);
  // Throws std::domain_error when the result would be negative.
  BigCount& operator-=(const BigCount& other);

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }
  friend BigCount operator-(BigCount lhs, const BigCount& rhs) { return lhs -= rhs; }

  struct DivMod;
  DivMod divmod(const BigCount& divisor) const;

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpz_class& raw() const { return value_; }

 private:
  mpz_class value_{0};
};

struct BigCount::DivMod {
  BigCount quotient;
  BigCount remainder;
};

std::ostream& operator<<(std::ostream& os, const BigCount& value);

// Balanced product tree; the empty product is 1.
BigCount product(std::span<const BigCount> factors);

}  // namespace parkfn
