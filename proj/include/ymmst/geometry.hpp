#pragma once

#include <compare>
#include <ostream>

#include "ymmst/bigint.hpp"

namespace ymmst {

// Grid point. Coordinates are signed and unbounded.
struct Point {
  BigInt x;
  BigInt y;

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << p.x << ',' << p.y << ')';
  }
};

// floor(sqrt(n)) by Newton iteration. Throws DomainError for n < 0.
BigInt isqrt(const BigInt& n);

// Exact squared Euclidean distance.
BigInt sq_dist(const Point& a, const Point& b);

// Orders d(a,b) against d(c,d) without ever taking a square root.
std::strong_ordering cmp_dist(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace ymmst
