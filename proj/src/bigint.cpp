#include "ymmst/bigint.hpp"

#include <cmath>
#include <limits>

#include "ymmst/errors.hpp"

namespace ymmst {

BigInt BigInt::from_string(std::string_view decimal) {
  std::string_view digits = decimal;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ParseError(0, "empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError(0, "invalid integer literal '" + std::string(decimal) + "'");
    }
  }
  return BigInt(mpz_class(std::string(decimal), 10));
}

BigInt BigInt::pow2(std::size_t exponent) { return BigInt(1) << exponent; }

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

double BigInt::to_double() const {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, value_.get_mpz_t());
  if (exp > std::numeric_limits<double>::max_exponent) {
    return sign() < 0 ? -std::numeric_limits<double>::infinity()
                      : std::numeric_limits<double>::infinity();
  }
  return std::ldexp(mant, static_cast<int>(exp));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("BigInt division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return BigInt(std::move(q));
}

BigInt operator>>(const BigInt& a, std::size_t bits) {
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), a.value_.get_mpz_t(), bits);
  return BigInt(std::move(q));
}

BigInt abs(const BigInt& v) { return v.sign() < 0 ? -v : v; }

BigInt square(const BigInt& v) { return v * v; }

}  // namespace ymmst
