#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ymmst {

// Arbitrary-precision signed integer. Thin value type over GMP's mpz so that
// the rest of the code never touches the C API directly.
class BigInt {
 public:
  BigInt() = default;

  template <std::signed_integral T>
  BigInt(T v) : value_(static_cast<long>(v)) {}

  template <std::unsigned_integral T>
  BigInt(T v) : value_(static_cast<unsigned long>(v)) {}

  explicit BigInt(mpz_class v) : value_(std::move(v)) {}

  // Parses an optionally signed decimal integer. No whitespace, no leading '+'
  // on its own, at least one digit. Throws ParseError on anything else.
  static BigInt from_string(std::string_view decimal);

  static BigInt pow2(std::size_t exponent);

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  // Number of bits in |value|; 0 for zero.
  std::size_t bit_length() const;

  // Nearest double, saturating to +-inf outside the double range.
  double to_double() const;

  const mpz_class& raw() const { return value_; }

  BigInt& operator+=(const BigInt& o) { value_ += o.value_; return *this; }
  BigInt& operator-=(const BigInt& o) { value_ -= o.value_; return *this; }
  BigInt& operator*=(const BigInt& o) { value_ *= o.value_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.value_)); }

  // Floor division. Divisor must be nonzero.
  friend BigInt operator/(const BigInt& a, const BigInt& b);

  friend BigInt operator<<(const BigInt& a, std::size_t bits) {
    return BigInt(mpz_class(a.value_ << bits));
  }
  // Arithmetic (floor) shift.
  friend BigInt operator>>(const BigInt& a, std::size_t bits);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

 private:
  mpz_class value_;
};

BigInt abs(const BigInt& v);
BigInt square(const BigInt& v);

}  // namespace ymmst
