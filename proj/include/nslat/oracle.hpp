#pragma once

// Brute-force ground truth, independent of the closed-form counts: exhaustive
// enumeration of Gamma_0(m)-orbits of ample classes of a fixed degree, and of
// cusp orbits on P^1(Q) under the determinant-+-1 congruence group.  Orbit
// scans run twice with a doubled coordinate bound; a count that moves under
// doubling aborts the enumeration rather than returning a short answer.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nslat/class_group.hpp"
#include "nslat/forms.hpp"
#include "nslat/surface.hpp"

namespace nslat {

struct OrbitInfo {
  NSClass rep;
  AmpleTag tag;
  i64 min_intersection = 0;       // smallest pairing against an elliptic class
  std::optional<PsiImage> image;  // present when the degree is squarefree
};

struct OrbitReport {
  i64 m = 0, d = 0;
  std::vector<OrbitInfo> orbits;

  i64 total() const { return static_cast<i64>(orbits.size()); }

  i64 count(AmpleTag t) const {
    i64 n = 0;
    for (const auto &o : orbits)
      if (o.tag == t) ++n;
    return n;
  }

  i64 nonsmooth_count() const { return count(AmpleTag::nonsmooth); }
  i64 smooth_count() const { return sub(total(), nonsmooth_count()); }
  i64 very_ample_count() const { return count(AmpleTag::very_ample); }
};

namespace detail {

// Candidates with a <= bound (b reduced mod a via upper-triangular shifts) or
// c <= bound (b reduced mod c via lower-triangular shifts, which stay in
// Gamma_0(m)).  The two scans are swapped into each other by the Fricke
// matrix [[0,-1],[m,0]], so together they reach orbits whose small coordinate
// sits on either side.
inline std::vector<NSClass> scan_candidates(i64 m, i64 d, i64 bound) {
  std::vector<NSClass> out;
  for (i64 a = 1; a <= bound; ++a)
    for (i64 b = 0; b < a; ++b) {
      i64 num = add(d, mul(mul(b, b), m));
      if (num % a == 0) out.push_back({m, a, b, num / a});
    }
  for (i64 c = 1; c <= bound; ++c)
    for (i64 b = 0; b < c; ++b) {
      i64 num = add(d, mul(mul(b, b), m));
      if (num % c == 0) out.push_back({m, num / c, b, c});
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Gamma_0(m)-inequivalent representatives among the candidates.  Candidates
// are bucketed by the GL2-canonical shape of their form first; classes in
// different buckets can never be Gamma_0(m)-equivalent.
inline std::vector<NSClass> dedup_orbits(i64 m, const std::vector<NSClass> &cands) {
  std::map<QuadForm, std::vector<QuadForm>> buckets;
  std::vector<NSClass> reps;
  for (const NSClass &L : cands) {
    QuadForm q = q_of(L);
    auto &seen = buckets[gl2_canonical(q)];
    bool fresh = true;
    for (const QuadForm &r : seen)
      if (equivalent(q, r, EquivMode::Gamma0, m)) {
        fresh = false;
        break;
      }
    if (fresh) {
      seen.push_back(q);
      reps.push_back(L);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace detail

inline OrbitReport enumerate_orbits(i64 m, i64 d) {
  require_surface(m);
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (mul(m, d) > 10000) throw std::length_error("enumeration guard: m*d must stay <= 10^4");

  i64 bound = mul(2, add(isqrt(mul(4, mul(m, d)) / 3), 1));
  std::vector<NSClass> reps = detail::dedup_orbits(m, detail::scan_candidates(m, d, bound));
  // saturation: the count must survive a doubling of the scan bound
  for (int tries = 0;; ++tries) {
    if (tries == 4) throw std::runtime_error("orbit enumeration did not saturate");
    bound = mul(2, bound);
    std::vector<NSClass> wider = detail::dedup_orbits(m, detail::scan_candidates(m, d, bound));
    if (wider.size() == reps.size()) {
      reps = std::move(wider);
      break;
    }
    reps = std::move(wider);
  }

  OrbitReport report{m, d, {}};
  bool sq = is_squarefree(d);
  for (const NSClass &L : reps) {
    OrbitInfo info{L, AmpleTag::nonsmooth, min_elliptic_intersection(L), std::nullopt};
    if (info.min_intersection <= 1)
      info.tag = AmpleTag::nonsmooth;
    else if (info.min_intersection == 2 || d < 5)
      info.tag = AmpleTag::smooth_merely_ample;
    else
      info.tag = AmpleTag::very_ample;
    if (sq) info.image = psi(L);
    report.orbits.push_back(std::move(info));
  }
  return report;
}

namespace detail {

// Determinant-1 completion with (x, y) as first column.
inline Mat2 complete_cusp(i64 x, i64 y) {
  Xgcd e = xgcd(x, y);
  if (e.g != 1) throw std::invalid_argument("cusp coordinates must be coprime");
  return Mat2{x, neg(e.v), y, e.u};  // det = x u + v y = 1
}

// Cusps M1(oo), M2(oo) lie in one det-+-1 Gamma_0(m) orbit iff some
// U = M2 [[s,t],[0,e]] M1^{-1} has lower-left divisible by m.  That entry is
// (s v1 y2 - e v2 y1) - t y1 y2, affine in the shift t, so solvability is a
// gcd test; sign pairs (s,e) and (-s,-e) give the same condition.
inline bool cusps_equivalent(const Mat2 &M1, const Mat2 &M2, i64 m) {
  i64 y1 = M1.r, v1 = M1.s, y2 = M2.r, v2 = M2.s;
  i64 step = gcd(mul(y1, y2), m);
  for (i64 e : {i64{1}, i64{-1}}) {
    i64 alpha = sub(mul(v1, y2), mul(e, mul(v2, y1)));
    if (mod_nonneg(alpha, step) == 0) return true;
  }
  return false;
}

}  // namespace detail

// Number of orbits of the determinant-+-1 congruence group of level m acting
// on P^1(Q).  Every cusp is equivalent to some x/y with y | m and x reduced
// mod y, so those (plus infinity) are exhaustive candidates.
inline i64 cusp_orbits(i64 m) {
  require_surface(m);
  std::vector<Mat2> found;
  auto consider = [&](i64 x, i64 y) {
    Mat2 M = detail::complete_cusp(x, y);
    for (const Mat2 &F : found)
      if (detail::cusps_equivalent(F, M, m)) return;
    found.push_back(M);
  };
  consider(1, 0);
  for (i64 y : divisors(m))
    for (i64 x = 0; x < y; ++x)
      if (gcd(x, y) == 1) consider(x, y);
  return static_cast<i64>(found.size());
}

}  // namespace nslat
