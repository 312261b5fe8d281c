#pragma once

// Neron-Severi classes on the self-product of an elliptic curve with a cyclic
// isogeny of degree m: a class L = a h + b X + c v has degree a c - b^2 m and
// pairs with the positive definite level-m form q_L = [a m, -2 b m, c].
// Curves E_{x,y} indexed by coprime (x, y) realize every elliptic curve class;
// their intersection numbers against L decide smoothness (all >= 2) and very
// ampleness (degree >= 5 and all >= 3, the Reider threshold).

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "nslat/class_group.hpp"
#include "nslat/forms.hpp"

namespace nslat {

struct NSClass {
  i64 m;        // isogeny degree of the underlying surface
  i64 a, b, c;  // coordinates in the h, X, v basis

  bool operator==(const NSClass &o) const = default;
  auto operator<=>(const NSClass &o) const = default;
};

inline void require_same_surface(const NSClass &L1, const NSClass &L2) {
  if (L1.m != L2.m)
    throw std::invalid_argument("classes live on different surfaces");
}

inline void require_surface(i64 m) {
  if (m < 1) throw std::invalid_argument("isogeny degree must be positive");
}

inline i64 intersect(const NSClass &L1, const NSClass &L2) {
  require_same_surface(L1, L2);
  return sub(add(mul(L1.a, L2.c), mul(L1.c, L2.a)), mul(2, mul(L1.m, mul(L1.b, L2.b))));
}

inline i64 degree(const NSClass &L) {
  return sub(mul(L.a, L.c), mul(mul(L.b, L.b), L.m));
}

// Positive definiteness of q_L: positive degree and positive ends.
inline bool is_ample(const NSClass &L) {
  return degree(L) > 0 && L.a > 0 && L.c > 0;
}

inline QuadForm q_of(const NSClass &L) {
  require_surface(L.m);
  return {mul(L.a, L.m), mul(-2, mul(L.b, L.m)), L.c};
}

inline bool in_Vm(const QuadForm &q, i64 m) {
  require_surface(m);
  return mod_nonneg(q.a, m) == 0 && mod_nonneg(q.b, mul(2, m)) == 0;
}

inline NSClass ns_of_form(const QuadForm &q, i64 m) {
  if (!in_Vm(q, m))
    throw std::invalid_argument("ns_of_form: form is not at level m");
  return {m, exact_div(q.a, m), exact_div(neg(q.b), mul(2, m)), q.c};
}

// The form of L restricted to the k-th product decomposition, k || m.
inline QuadForm q_of_k(const NSClass &L, i64 k) {
  require_surface(L.m);
  if (k < 1 || mod_nonneg(L.m, k) != 0 || gcd(k, exact_div(L.m, k)) != 1)
    throw std::invalid_argument("q_of_k: k must exactly divide m");
  return {mul(L.a, exact_div(L.m, k)), mul(-2, mul(L.b, L.m)), mul(L.c, k)};
}

// The class of the curve E_{x,y}, gcd(x, y) = 1.
inline NSClass elliptic_class(i64 x, i64 y, i64 m) {
  require_surface(m);
  if (gcd(x, y) != 1)
    throw std::invalid_argument("elliptic_class: (x, y) must be coprime");
  i64 k = gcd(x, m);  // = m when x = 0
  return {m, exact_div(mul(x, x), k), exact_div(mul(x, y), k),
          mul(mul(y, y), exact_div(m, k))};
}

// min over elliptic curve classes E of E.L; for E = E_{x,y} the value is
// q_L(y, x) / gcd(x, m). The scan over q_L(y, x) <= t*m is exhaustive for
// witnesses of value <= t, and t grows until a witness is found.
inline i64 min_elliptic_intersection(const NSClass &L) {
  if (!is_ample(L))
    throw std::invalid_argument("min_elliptic_intersection: class is not ample");
  QuadForm q = q_of(L);
  i64 absD = neg(q.disc());
  for (i64 t = 1;; ++t) {
    i64 cap = mul(t, L.m);
    i64 best = std::numeric_limits<i64>::max();
    i64 ybound = isqrt(mul(4, mul(q.c, cap)) / absD);  // first argument of q
    i64 xbound = isqrt(mul(4, mul(q.a, cap)) / absD);  // second argument
    for (i64 y = neg(ybound); y <= ybound; ++y)
      for (i64 x = neg(xbound); x <= xbound; ++x) {
        if (gcd(x, y) != 1) continue;
        i64 v = q.eval(y, x);
        if (v > cap) continue;
        i64 k = (x == 0) ? L.m : gcd(x, L.m);
        i64 e = exact_div(v, k);
        if (e < best) best = e;
      }
    if (best <= t) return best;
  }
}

inline bool is_smooth(const NSClass &L) {
  return min_elliptic_intersection(L) >= 2;
}

inline bool is_very_ample(const NSClass &L) {
  if (degree(L) < 5) return false;  // below the Reider threshold
  return min_elliptic_intersection(L) >= 3;
}

enum class AmpleTag { nonsmooth, smooth_merely_ample, very_ample };

inline const char *tag_name(AmpleTag t) {
  switch (t) {
    case AmpleTag::nonsmooth: return "nonsmooth";
    case AmpleTag::smooth_merely_ample: return "smooth_merely_ample";
    default: return "very_ample";
  }
}

inline AmpleTag classify_tag(const NSClass &L) {
  i64 e = min_elliptic_intersection(L);
  if (e <= 1) return AmpleTag::nonsmooth;
  if (e == 2 || degree(L) < 5) return AmpleTag::smooth_merely_ample;
  return AmpleTag::very_ample;
}

// The degree-d forms correspondence: L with squarefree degree maps to the
// matrix content g = gcd(a m, b m, c) of q_L together with the GL2-class of
// q_L / g, a matrix-primitive form of discriminant -4 m d / g^2.
struct PsiImage {
  i64 g;
  QuadForm form_class;  // GL2-canonical representative
};

inline PsiImage psi(const NSClass &L) {
  if (!is_ample(L)) throw std::invalid_argument("psi: class is not ample");
  i64 d = degree(L);
  for (auto [p, e] : factorize(d))
    if (e > 1) throw std::invalid_argument("psi: degree must be squarefree");
  QuadForm q = q_of(L);
  i64 g = gcd(mul(L.a, L.m), mul(L.b, L.m), L.c);
  return {g, gl2_canonical(q.divided(g))};
}

namespace detail {

// [SL2(Z) : Gamma0(n)] = n prod_{p | n} (1 + 1/p); the determinant +-1
// variants have the same index ratios.
inline i64 gamma0_index(i64 n) {
  i64 num = n, den = 1;
  for (auto [p, e] : factorize(n)) {
    num = mul(num, add(p, 1));
    den = mul(den, p);
  }
  return exact_div(num, den);
}

inline bool same_right_coset(const Mat2 &g1, const Mat2 &g2, i64 m) {
  // Gamma0(m) g1 == Gamma0(m) g2 iff g1 g2^{-1} has lower-left = 0 mod m
  Mat2 w = g1 * g2.inverse();
  return mod_nonneg(w.r, m) == 0;
}

// Right coset representatives of Gamma0(m) in Gamma0(n), n | m. Bottom rows
// (y, w), y = 0 mod n, gcd(y, w) = 1 parameterize cosets; the scan widens
// until the full index is collected.
inline std::vector<Mat2> coset_reps(i64 m, i64 n) {
  if (mod_nonneg(m, n) != 0)
    throw std::invalid_argument("coset_reps: levels must be nested");
  i64 want = exact_div(gamma0_index(m), gamma0_index(n));
  std::vector<Mat2> reps;
  for (i64 C = std::max<i64>(4, m); (i64)reps.size() < want; C = mul(C, 2)) {
    if (C > mul(m, 64))
      throw std::runtime_error("coset_reps: scan bound exhausted");
    reps.clear();
    for (i64 y = 0; y <= C && (i64)reps.size() < want; y += n) {
      for (i64 w = -C; w <= C && (i64)reps.size() < want; ++w) {
        if (gcd(y, w) != 1) continue;
        Xgcd e = xgcd(y, w);  // u y + v w = 1
        Mat2 cand{e.v, neg(e.u), y, w};
        bool fresh = true;
        for (const auto &r : reps)
          if (same_right_coset(cand, r, m)) { fresh = false; break; }
        if (fresh) reps.push_back(cand);
      }
    }
  }
  return reps;
}

}  // namespace detail

// Number of degree-d classes mapping to a given matrix-primitive GL2-class
// under the correspondence, at content g: the double coset count
// | Gamma0(m) \ Gamma0(m/g) / Aut(q) |.
inline i64 psi_fiber_size(i64 m, i64 d, i64 g, const QuadForm &form_class) {
  require_surface(m);
  if (d < 1 || g < 1 || mod_nonneg(m, g) != 0 || mod_nonneg(d, g) != 0)
    throw std::invalid_argument("psi_fiber_size: g must divide m and d");
  if (!form_class.is_positive_definite() || !is_matrix_primitive(form_class))
    throw std::invalid_argument("psi_fiber_size: class must be matrix-primitive positive definite");
  i64 mg = exact_div(m, g), dg = exact_div(d, g);
  if (form_class.disc() != mul(-4, mul(mg, dg)))
    throw std::invalid_argument("psi_fiber_size: discriminant mismatch");

  // A form of the class inside V_{m/g} of degree d/g; the correspondence at
  // level m/g is onto, so the scan terminates.
  QuadForm target = gl2_canonical(form_class);
  QuadForm q{0, 0, 0};
  bool found = false;
  for (i64 B = 8; !found; B = mul(B, 2)) {
    if (B > mul(64, add(mul(mg, dg), 16)))
      throw std::runtime_error("psi_fiber_size: no level form found below bound");
    for (i64 al = 1; al <= B && !found; ++al)
      for (i64 be = neg(B); be <= B && !found; ++be) {
        i64 num = add(dg, mul(mul(be, be), mg));
        if (mod_nonneg(num, al) != 0) continue;
        NSClass cand{mg, al, be, exact_div(num, al)};
        if (gl2_canonical(q_of(cand)) == target) {
          q = q_of(cand).scaled(g);
          found = true;
        }
      }
  }

  auto reps = detail::coset_reps(m, mg);
  auto auts = all_transforms(q, q, EquivMode::Gamma0, mg);

  // Orbits of the right Aut action on the coset space.
  int n = (int)reps.size();
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int i) {
    while (root[i] != i) i = root[i] = root[root[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (const auto &u : auts) {
      Mat2 moved = reps[i] * u;
      for (int j = 0; j < n; ++j)
        if (detail::same_right_coset(moved, reps[j], m)) {
          int ri = find(i), rj = find(j);
          if (ri != rj) root[ri] = rj;
          break;
        }
    }
  i64 orbits = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++orbits;
  return orbits;
}

// The involution exchanging the two factors of the k-th product
// decomposition, realized by a determinant-k integral matrix.
struct AtkinLehnerOp {
  i64 m, k;
  Mat2 W;  // [[k r, s], [m, k]], det = k
};

inline AtkinLehnerOp atkin_lehner(i64 m, i64 k) {
  require_surface(m);
  if (k < 1 || mod_nonneg(m, k) != 0 || gcd(k, exact_div(m, k)) != 1)
    throw std::invalid_argument("atkin_lehner: k must exactly divide m");
  Xgcd e = xgcd(k, exact_div(m, k));  // u k + v (m/k) = 1
  i64 r = e.u, s = neg(e.v);          // k r - (m/k) s = 1
  Mat2 W{mul(k, r), s, m, k};
  if (W.det() != k) throw std::logic_error("atkin_lehner: determinant check failed");
  return {m, k, W};
}

// Action on classes: q_{w_k(L)} = (q_L . W_k) / k, well defined up to
// Gamma0(m)-equivalence.
inline NSClass al_apply(const AtkinLehnerOp &op, const NSClass &L) {
  if (L.m != op.m)
    throw std::invalid_argument("al_apply: operator and class live on different surfaces");
  QuadForm moved = apply(q_of(L), op.W);
  return ns_of_form(moved.divided(op.k), op.m);
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> out;
  for (i64 k = 1; mul(k, k) <= n; ++k) {
    if (n % k) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline i64 euler_phi(i64 n) {
  i64 out = n;
  for (auto [p, e] : factorize(n)) out = mul(exact_div(out, p), sub(p, 1));
  return out;
}

inline std::vector<i64> product_decompositions(i64 m) {
  require_surface(m);
  std::vector<i64> out;
  for (i64 k : divisors(m))
    if (gcd(k, exact_div(m, k)) == 1) out.push_back(k);
  return out;
}

// Number of elliptic curve classes: one orbit per divisor k | m when
// gcd(k, m/k) <= 2, and phi(gcd(k, m/k))/2 orbits otherwise.
inline i64 elliptic_class_count(i64 m) {
  require_surface(m);
  i64 total = 0;
  for (i64 k : divisors(m)) {
    i64 f = gcd(k, exact_div(m, k));
    total = add(total, std::max<i64>(1, euler_phi(f) / 2));
  }
  return total;
}

}  // namespace nslat
