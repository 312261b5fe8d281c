#pragma once

// Form class groups of imaginary quadratic orders: enumeration of reduced
// primitive forms, class numbers under SL2 and GL2, two-torsion via genus
// theory, the extension map to a smaller order, and the determinant-D
// symmetric-bilinear (matrix) class counts built from them.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "nslat/forms.hpp"

namespace nslat {

inline bool is_valid_discriminant(i64 D) {
  return D < 0 && (mod_nonneg(D, 4) == 0 || mod_nonneg(D, 4) == 1);
}

inline void require_discriminant(i64 D) {
  if (!is_valid_discriminant(D))
    throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4");
}

// All reduced forms of discriminant D, primitive unless asked otherwise,
// ordered lexicographically by (a, b, c). One per SL2-class.
inline std::vector<QuadForm> reduced_forms(i64 D, bool primitive_only = true) {
  require_discriminant(D);
  std::vector<QuadForm> out;
  i64 amax = isqrt(neg(D) / 3);
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = neg(a) + 1 + mod_nonneg(add(neg(a) + 1, D), 2); b <= a; b += 2) {
      i64 num = sub(mul(b, b), D);
      if (mod_nonneg(num, mul(4, a)) != 0) continue;
      i64 c = exact_div(num, mul(4, a));
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (primitive_only && gcd(a, b, c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline i64 class_number(i64 D) {
  return static_cast<i64>(reduced_forms(D).size());
}

// Reduced primitive forms that are visibly their own inverse:
// b = 0, a = b, or a = c. Each 2-torsion class contains exactly one.
inline std::vector<QuadForm> ambiguous_classes(i64 D) {
  auto forms = reduced_forms(D);
  std::vector<QuadForm> out;
  for (const auto &f : forms)
    if (f.b == 0 || f.a == f.b || f.a == f.c) out.push_back(f);
  return out;
}

inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int distinct_prime_count(i64 n) {
  return static_cast<int>(factorize(n).size());
}

inline bool is_squarefree(i64 n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

// Size of Cl(D)[2] by genus theory: 2^(mu - 1), where mu depends on the
// odd prime divisors r of D and, for D = -4n, on n mod 8.
inline i64 two_torsion_count(i64 D) {
  require_discriminant(D);
  i64 absD = neg(D);
  int r = 0;
  for (auto [p, e] : factorize(absD))
    if (p != 2) ++r;
  int mu;
  if (mod_nonneg(D, 2) == 1) {
    mu = r;
  } else {
    i64 n = exact_div(absD, 4);
    i64 n4 = mod_nonneg(n, 4);
    if (n4 == 3) mu = r;
    else if (n4 == 1 || n4 == 2) mu = r + 1;
    else if (mod_nonneg(n, 8) == 4) mu = r + 1;
    else mu = r + 2;  // n = 0 mod 8
  }
  return mu == 0 ? 1 : (i64{1} << (mu - 1));
}

// Number of GL2-classes: inversion b -> -b folds non-ambiguous classes in
// pairs, so the count is (h + h_2)/2.
inline i64 gl2_class_number(i64 D) {
  return exact_div(add(class_number(D), two_torsion_count(D)), 2);
}

inline QuadForm principal_form(i64 D) {
  require_discriminant(D);
  if (mod_nonneg(D, 4) == 0) return {1, 0, exact_div(neg(D), 4)};
  return {1, 1, exact_div(sub(1, D), 4)};
}

// True when [f]^2 is the identity class; f must be primitive.
inline bool is_two_torsion_class(const QuadForm &f) {
  return compose(f, f) == principal_form(f.disc());
}

// Fully tabulated class group: classes in enumeration order, composition
// table, identity and inverse bookkeeping.
struct ClassGroupTable {
  i64 disc = 0;
  std::vector<QuadForm> classes;          // reduced primitive representatives
  std::vector<std::vector<int>> product;  // product[i][j] = index of class i * class j
  int identity = -1;
  std::vector<int> inverse;

  int index_of(const QuadForm &f) const {
    QuadForm r = reduce(f).form;
    auto it = std::lower_bound(classes.begin(), classes.end(), r);
    if (it == classes.end() || !(*it == r))
      throw std::invalid_argument("ClassGroupTable: form does not belong to this group");
    return static_cast<int>(it - classes.begin());
  }
};

inline ClassGroupTable class_group(i64 D) {
  ClassGroupTable t;
  t.disc = D;
  t.classes = reduced_forms(D);
  int h = static_cast<int>(t.classes.size());
  t.product.assign(h, std::vector<int>(h, -1));
  t.inverse.assign(h, -1);
  t.identity = t.index_of(principal_form(D));
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      int k = t.index_of(compose(t.classes[i], t.classes[j]));
      t.product[i][j] = t.product[j][i] = k;
      if (k == t.identity) {
        t.inverse[i] = j;
        t.inverse[j] = i;
      }
    }
  }
  return t;
}

// Kronecker symbol (D | p) for prime p.
inline int kronecker_prime(i64 D, i64 p) {
  if (p == 2) {
    if (mod_nonneg(D, 2) == 0) return 0;
    i64 m8 = mod_nonneg(D, 8);
    return (m8 == 1 || m8 == 7) ? 1 : -1;
  }
  i64 a = mod_nonneg(D, p);
  if (a == 0) return 0;
  // Euler's criterion with exact modular exponentiation.
  i64 e = (p - 1) / 2, base = a, acc = 1;
  while (e) {
    if (e & 1) acc = mod_nonneg(mul(acc, base), p);
    base = mod_nonneg(mul(base, base), p);
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

// Multiplicativity of class numbers across conductors: the extension map
// from discriminant g^2 D to D has all fibers of this size.
inline i64 kernel_size(i64 D, i64 g) {
  require_discriminant(D);
  if (g < 1) throw std::invalid_argument("kernel_size: conductor must be positive");
  if (g == 1) return 1;
  i64 unit_index = (D == -3) ? 3 : (D == -4) ? 2 : 1;
  i64 num = g, den = unit_index;
  for (auto [p, e] : factorize(g)) {
    num = mul(num, sub(p, kronecker_prime(D, p)));
    den = mul(den, p);
  }
  return exact_div(num, den);
}

// Extension map on classes: find a representative [A g^2, B g, C] of the
// class of h (discriminant g^2 D) and send it to [A, B, C] of
// discriminant D. The search scans primitively represented multiples of
// g^2 and moves one to the leading coefficient by a det +1 change of basis.
inline QuadForm extend_class(const QuadForm &h, i64 g) {
  if (!h.is_primitive() || !h.is_positive_definite())
    throw std::invalid_argument("extend_class: input must be primitive positive definite");
  if (g < 1) throw std::invalid_argument("extend_class: conductor must be positive");
  i64 D2 = h.disc();
  i64 D = exact_div(D2, mul(g, g));
  require_discriminant(D);
  if (g == 1) return reduce(h).form;
  i64 gg = mul(g, g);
  i64 tmax = std::max<i64>(neg(D2), 64);
  for (i64 t = 1; t <= tmax; ++t) {
    i64 n = mul(gg, t);
    for (auto [x, y] : representations(h, n, /*primitive_only=*/true)) {
      Xgcd e = xgcd(x, y);  // x*u + y*v = 1
      Mat2 U{x, neg(e.v), y, e.u};  // det = x*u + y*v = 1
      QuadForm moved = apply(h, U);
      // moved = [t g^2, B', C'] and g^2 | B'^2 forces g | B'.
      QuadForm q{t, exact_div(moved.b, g), moved.c};
      return reduce(q).form;
    }
  }
  throw std::runtime_error("extend_class: no representative found below the search bound");
}

// Matrix-primitive: as the symmetric bilinear form [[a, b/2], [b/2, c]],
// integral with coprime entries.
inline bool is_matrix_primitive(const QuadForm &f) {
  if (mod_nonneg(f.b, 2) != 0) return false;
  return gcd(f.a, exact_div(f.b, 2), f.c) == 1;
}

// GL2-classes of positive definite matrix-primitive forms of determinant
// D >= 1 (quadratic discriminant -4D). When D = 3 mod 4 the doubles of the
// primitive forms of discriminant -D join the primitive forms of -4D.
inline i64 matrix_class_count(i64 D) {
  if (D < 1) throw std::invalid_argument("matrix_class_count: determinant must be positive");
  i64 v = gl2_class_number(mul(-4, D));
  if (mod_nonneg(D, 4) == 3) v = add(v, gl2_class_number(neg(D)));
  return v;
}

// ... and how many of those classes are 2-torsion (each is a single
// GL2-class, so this is a plain h_2 count in each constituent).
inline i64 matrix_two_torsion_count(i64 D) {
  if (D < 1) throw std::invalid_argument("matrix_two_torsion_count: determinant must be positive");
  i64 v = two_torsion_count(mul(-4, D));
  if (mod_nonneg(D, 4) == 3) v = add(v, two_torsion_count(neg(D)));
  return v;
}

// h(-4N) = h_2(-4N): every class is ambiguous. Early exit on the first
// non-ambiguous reduced primitive form.
inline bool is_idoneal(i64 N) {
  if (N < 1) throw std::invalid_argument("is_idoneal: argument must be positive");
  i64 amax = isqrt(mul(4, N) / 3);
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = 0; b <= a; b += 2) {
      i64 num = add(mul(b, b), mul(4, N));
      if (mod_nonneg(num, mul(4, a)) != 0) continue;
      i64 c = exact_div(num, mul(4, a));
      if (c < a) continue;
      if (gcd(a, b, c) != 1) continue;
      if (b != 0 && b != a && a != c) return false;
    }
  }
  return true;
}

// All idoneal N <= bound by one sweep over reduced forms of discriminant
// -4N: tallies per N the primitive reduced forms and the ambiguous ones,
// equal exactly at the idoneal numbers.
inline std::vector<i64> idoneal_list(i64 bound) {
  if (bound < 1) return {};
  std::vector<i64> total(bound + 1, 0), ambiguous(bound + 1, 0);
  i64 amax = isqrt(mul(4, bound) / 3);
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = 0; b <= a; b += 2) {
      // 4ac - b^2 = 4N <= 4*bound; c >= a
      i64 cmax = (add(mul(b, b), mul(4, bound))) / mul(4, a);
      for (i64 c = a; c <= cmax; ++c) {
        i64 N = mul(a, c) - (b / 2) * (b / 2);  // (4ac - b^2)/4, b even
        if (N < 1 || N > bound) continue;
        if (gcd(a, b, c) != 1) continue;
        // ambiguous shapes are their own b -> -b partner; others count twice
        bool amb = (b == 0 || b == a || a == c);
        total[N] += amb ? 1 : 2;
        if (amb) ambiguous[N] += 1;
      }
    }
  }
  std::vector<i64> out;
  for (i64 N = 1; N <= bound; ++N)
    if (total[N] == ambiguous[N]) out.push_back(N);
  return out;
}

}  // namespace nslat
