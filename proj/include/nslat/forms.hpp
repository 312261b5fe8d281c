#pragma once

// Integral binary quadratic forms f = [a, b, c] meaning a x^2 + b xy + c y^2.
// Everything here is for negative discriminant; positive definite means a > 0.
//
// Reduced means -a < b <= a <= c, with b >= 0 whenever a = c or a = |b|,
// so each SL2(Z)-class of positive definite forms has exactly one reduced
// representative.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nslat/checked.hpp"

namespace nslat {

// Column-action matrix [[p, q], [r, s]]: (x, y) |-> (px + qy, rx + sy).
struct Mat2 {
  i64 p, q, r, s;

  i64 det() const { return sub(mul(p, s), mul(q, r)); }

  Mat2 operator*(const Mat2 &o) const {
    return {add(mul(p, o.p), mul(q, o.r)), add(mul(p, o.q), mul(q, o.s)),
            add(mul(r, o.p), mul(s, o.r)), add(mul(r, o.q), mul(s, o.s))};
  }

  // Inverse of a determinant +-1 matrix.
  Mat2 inverse() const {
    i64 d = det();
    if (d == 1) return {s, neg(q), neg(r), p};
    if (d == -1) return {neg(s), q, r, neg(p)};
    throw std::domain_error("Mat2::inverse: determinant is not +-1");
  }

  bool operator==(const Mat2 &o) const = default;

  static Mat2 identity() { return {1, 0, 0, 1}; }
};

struct QuadForm {
  i64 a, b, c;

  i64 disc() const { return sub(mul(b, b), mul(4, mul(a, c))); }

  i64 eval(i64 x, i64 y) const {
    return add(add(mul(a, mul(x, x)), mul(b, mul(x, y))), mul(c, mul(y, y)));
  }

  i64 content() const { return gcd(a, b, c); }
  bool is_primitive() const { return content() == 1; }
  bool is_positive_definite() const { return a > 0 && disc() < 0; }

  bool is_reduced() const {
    if (!(neg(a) < b && b <= a && a <= c)) return false;
    if ((a == c || a == b || a == neg(b)) && b < 0) return false;
    return true;
  }

  QuadForm scaled(i64 k) const { return {mul(a, k), mul(b, k), mul(c, k)}; }

  QuadForm divided(i64 k) const {
    return {exact_div(a, k), exact_div(b, k), exact_div(c, k)};
  }

  // The SL2-inverse class representative.
  QuadForm conjugate() const { return {a, neg(b), c}; }

  bool operator==(const QuadForm &o) const = default;
  auto operator<=>(const QuadForm &o) const = default;
};

// Variable substitution: (f . M)(x, y) = f(M (x, y)^t). Right action.
inline QuadForm apply(const QuadForm &f, const Mat2 &M) {
  i64 a2 = f.eval(M.p, M.r);
  i64 c2 = f.eval(M.q, M.s);
  i64 b2 = add(add(mul(2, add(mul(f.a, mul(M.p, M.q)), mul(f.c, mul(M.r, M.s)))),
                   mul(f.b, mul(M.p, M.s))),
               mul(f.b, mul(M.q, M.r)));
  return {a2, b2, c2};
}

struct Reduction {
  QuadForm form;       // the reduced representative
  Mat2 transform;      // det +1, apply(input, transform) == form
};

// Gauss reduction of a positive definite form.
inline Reduction reduce(QuadForm f) {
  if (!f.is_positive_definite())
    throw std::invalid_argument("reduce: form is not positive definite");
  Mat2 U = Mat2::identity();
  for (;;) {
    // Translate b into (-a, a].
    if (f.b > f.a || f.b <= neg(f.a)) {
      i64 t = neg(floor_div(add(f.b, f.a), mul(2, f.a)));
      if (sub(f.b, mul(2, mul(f.a, neg(t)))) == neg(f.a)) t = add(t, 1);
      Mat2 T{1, t, 0, 1};
      f = apply(f, T);
      U = U * T;
    }
    if (f.a > f.c) {
      Mat2 S{0, -1, 1, 0};  // [a,b,c] -> [c,-b,a]
      f = apply(f, S);
      U = U * S;
      continue;
    }
    break;
  }
  if (f.a == f.c && f.b < 0) {
    Mat2 S{0, -1, 1, 0};
    f = apply(f, S);
    U = U * S;
  }
  return {f, U};
}

// Canonical representative of the GL2(Z)-class: reduced with b >= 0.
inline QuadForm gl2_canonical(const QuadForm &f) {
  QuadForm r = reduce(f).form;
  return r.b < 0 ? QuadForm{r.a, neg(r.b), r.c} : r;
}

// Dirichlet composition of primitive positive definite forms of equal
// discriminant; returns the reduced representative of the product class.
inline QuadForm compose(QuadForm f1, QuadForm f2) {
  i64 D = f1.disc();
  if (D != f2.disc())
    throw std::invalid_argument("compose: discriminants differ");
  if (!f1.is_primitive() || !f2.is_primitive())
    throw std::invalid_argument("compose: forms must be primitive");
  if (!f1.is_positive_definite() || !f2.is_positive_definite())
    throw std::invalid_argument("compose: forms must be positive definite");
  if (f1.a > f2.a) std::swap(f1, f2);
  i64 s = exact_div(add(f1.b, f2.b), 2);
  i64 n = sub(f2.b, s);
  i64 d, y1;
  if (mod_nonneg(f2.a, f1.a) == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    Xgcd e = xgcd(f2.a, f1.a);
    y1 = e.u;
    d = e.g;
  }
  i64 x2, y2, d1;
  if (mod_nonneg(s, d) == 0) {
    x2 = 0;
    y2 = -1;
    d1 = d;
  } else {
    Xgcd e = xgcd(s, d);
    x2 = e.u;
    y2 = neg(e.v);
    d1 = e.g;
  }
  i64 v1 = exact_div(f1.a, d1);
  i64 v2 = exact_div(f2.a, d1);
  i64 r = mod_nonneg(sub(mul(mul(y1, y2), n), mul(x2, f2.c)), v1);
  i64 a3 = mul(v1, v2);
  i64 b3 = add(f2.b, mul(2, mul(v2, r)));
  i64 c3 = exact_div(sub(mul(b3, b3), D), mul(4, a3));
  return reduce({a3, b3, c3}).form;
}

// All (x, y) with f(x, y) = n, positive definite f, optionally only pairs
// with gcd(x, y) = 1. Exhaustive: 4a f = (2ax + by)^2 + |D| y^2 bounds y.
inline std::vector<std::pair<i64, i64>> representations(const QuadForm &f, i64 n,
                                                        bool primitive_only = false) {
  if (!f.is_positive_definite())
    throw std::invalid_argument("representations: form is not positive definite");
  std::vector<std::pair<i64, i64>> out;
  if (n < 0) return out;
  if (n == 0) {
    if (!primitive_only) out.emplace_back(0, 0);
    return out;
  }
  i64 absD = neg(f.disc());
  i64 ybound = isqrt(mul(4, mul(f.a, n)) / absD);
  for (i64 y = neg(ybound); y <= ybound; ++y) {
    // a x^2 + (b y) x + (c y^2 - n) = 0
    i64 dx = add(mul(4, mul(f.a, n)), mul(f.disc(), mul(y, y)));
    i64 root;
    if (!is_square(dx, &root)) continue;
    for (i64 sgn : {root, neg(root)}) {
      i64 num = sub(sgn, mul(f.b, y));
      if (mod_nonneg(num, mul(2, f.a)) != 0) continue;
      i64 x = exact_div(num, mul(2, f.a));
      if (primitive_only && gcd(x, y) != 1) continue;
      out.emplace_back(x, y);
      if (sgn == 0) break;  // root == -root, avoid the duplicate
    }
  }
  return out;
}

enum class EquivMode { SL2, GL2, Gamma0 };

// All U with apply(f, U) == g and U admissible for the mode; for Gamma0 the
// lower-left entry must vanish mod m and the determinant may be +-1.
inline std::vector<Mat2> all_transforms(const QuadForm &f, const QuadForm &g,
                                        EquivMode mode, i64 m = 1) {
  if (mode == EquivMode::Gamma0 && m < 1)
    throw std::invalid_argument("all_transforms: level must be positive");
  std::vector<Mat2> out;
  if (f.disc() != g.disc()) return out;
  auto cols1 = representations(f, g.a, /*primitive_only=*/true);
  auto cols2 = representations(f, g.c, /*primitive_only=*/true);
  for (auto [p, r] : cols1) {
    if (mode == EquivMode::Gamma0 && mod_nonneg(r, m) != 0) continue;
    for (auto [q, s] : cols2) {
      Mat2 U{p, q, r, s};
      i64 d = U.det();
      if (d != 1 && d != -1) continue;
      if (mode == EquivMode::SL2 && d != 1) continue;
      if (apply(f, U) == g) out.push_back(U);
    }
  }
  return out;
}

inline std::optional<Mat2> equivalence_transform(const QuadForm &f, const QuadForm &g,
                                                 EquivMode mode, i64 m = 1) {
  if (f.disc() != g.disc()) return std::nullopt;
  auto cols1 = representations(f, g.a, true);
  auto cols2 = representations(f, g.c, true);
  for (auto [p, r] : cols1) {
    if (mode == EquivMode::Gamma0 && mod_nonneg(r, m) != 0) continue;
    for (auto [q, s] : cols2) {
      Mat2 U{p, q, r, s};
      i64 d = U.det();
      if (d != 1 && d != -1) continue;
      if (mode == EquivMode::SL2 && d != 1) continue;
      if (apply(f, U) == g) return U;
    }
  }
  return std::nullopt;
}

inline bool equivalent(const QuadForm &f, const QuadForm &g, EquivMode mode, i64 m = 1) {
  if (mode == EquivMode::SL2) return reduce(f).form == reduce(g).form;
  if (mode == EquivMode::GL2) return gl2_canonical(f) == gl2_canonical(g);
  return equivalence_transform(f, g, mode, m).has_value();
}

}  // namespace nslat
