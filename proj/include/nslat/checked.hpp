#pragma once

// Exact signed 64-bit arithmetic. Anything that could wrap throws instead;
// callers never see a wrapped value.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nslat {

using i64 = std::int64_t;

[[noreturn]] inline void overflow(const char *op) {
  throw std::overflow_error(std::string("64-bit overflow in ") + op);
}

inline i64 add(i64 x, i64 y) {
  i64 r;
  if (__builtin_add_overflow(x, y, &r)) overflow("add");
  return r;
}

inline i64 sub(i64 x, i64 y) {
  i64 r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("sub");
  return r;
}

inline i64 mul(i64 x, i64 y) {
  i64 r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("mul");
  return r;
}

inline i64 neg(i64 x) { return sub(0, x); }

// Exact quotient; the remainder must vanish.
inline i64 exact_div(i64 x, i64 y) {
  if (y == 0 || x % y != 0)
    throw std::domain_error("exact_div: quotient is not integral");
  return x / y;
}

// Floor division (C++ truncates toward zero).
inline i64 floor_div(i64 x, i64 y) {
  i64 q = x / y, r = x % y;
  return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

// Least nonnegative residue.
inline i64 mod_nonneg(i64 x, i64 y) {
  i64 r = x % y;
  if (r < 0) r += (y < 0 ? -y : y);
  return r;
}

inline i64 gcd(i64 x, i64 y) { return std::gcd(x, y); }
inline i64 gcd(i64 x, i64 y, i64 z) { return std::gcd(std::gcd(x, y), z); }

// Extended gcd: g = gcd(a, b) >= 0 with u*a + v*b = g.
struct Xgcd {
  i64 g, u, v;
};

inline Xgcd xgcd(i64 a, i64 b) {
  i64 r0 = a, r1 = b, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;  // |r2| < |r1|, no overflow
    r0 = r1; r1 = r2;
    i64 u2 = sub(u0, mul(q, u1)), v2 = sub(v0, mul(q, v1));
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0 < 0) { r0 = neg(r0); u0 = neg(u0); v0 = neg(v0); }
  return {r0, u0, v0};
}

// Integer square root of n >= 0: the largest s with s*s <= n.
inline i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of a negative value");
  if (n == 0) return 0;
  i64 s = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s > n / s) --s;
  while ((s + 1) <= n / (s + 1)) ++s;
  return s;
}

inline bool is_square(i64 n, i64 *root = nullptr) {
  if (n < 0) return false;
  i64 s = isqrt(n);
  if (root) *root = s;
  return s * s == n;
}

}  // namespace nslat
