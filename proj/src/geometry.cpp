#include "ymmst/geometry.hpp"

#include "ymmst/errors.hpp"

namespace ymmst {

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt of negative value " + n.to_string());
  if (n.is_zero()) return BigInt(0);

  // 2^ceil(bits/2) > sqrt(n), so the iterates decrease monotonically and
  // the first non-decreasing step sits on floor(sqrt(n)).
  BigInt x = BigInt::pow2((n.bit_length() + 1) / 2);
  for (;;) {
    BigInt next = (x + n / x) >> 1;
    if (next >= x) return x;
    x = std::move(next);
  }
}

BigInt sq_dist(const Point& a, const Point& b) {
  return square(a.x - b.x) + square(a.y - b.y);
}

std::strong_ordering cmp_dist(const Point& a, const Point& b, const Point& c, const Point& d) {
  return sq_dist(a, b) <=> sq_dist(c, d);
}

}  // namespace ymmst
