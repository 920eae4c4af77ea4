#include "parkfn/bigcount.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace parkfn {

BigCount::BigCount(std::uint64_t value) {
  // mpz_class has no portable uint64 constructor on every platform
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigCount::BigCount(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw std::domain_error("BigCount cannot hold a negative value");
}

BigCount BigCount::from_string(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid integer literal '" + std::string(text) + "'");
    }
  }
  return BigCount(mpz_class(std::string(text), 10));
}

BigCount BigCount::pow2(std::uint64_t exponent) {
  BigCount out;
  mpz_setbit(out.value_.get_mpz_t(), exponent);
  return out;
}

BigCount BigCount::pow(const BigCount& base, std::uint64_t exponent) {
  BigCount out;
  mpz_pow_ui(out.value_.get_mpz_t(), base.value_.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

std::string BigCount::str() const { return value_.get_str(10); }

bool BigCount::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigCount::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigCount does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t BigCount::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

BigCount& BigCount::operator+=(const BigCount& other) {
  value_ += other.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& other) {
  value_ *= other.value_;
  return *this;
}

BigCount& BigCount::operator-=(const BigCount& other) {
  if (cmp(value_, other.value_) < 0) {
    throw std::domain_error("BigCount subtraction would go negative: " + str() + " - " +
                            other.str());
  }
  value_ -= other.value_;
  return *this;
}

BigCount::DivMod BigCount::divmod(const BigCount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  DivMod out;
  mpz_fdiv_qr(out.quotient.value_.get_mpz_t(), out.remainder.value_.get_mpz_t(),
              value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigCount& value) { return os << value.str(); }

BigCount product(std::span<const BigCount> factors) {
  if (factors.empty()) return BigCount(1);
  std::vector<BigCount> level(factors.begin(), factors.end());
  while (level.size() > 1) {
    std::vector<BigCount> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

}  // namespace parkfn
