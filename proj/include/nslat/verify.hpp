#pragma once

// Cell-by-cell comparison of every closed-form count against the brute-force
// enumeration, plus the class-group self-checks (genus theory vs ambiguous
// classes, extension-kernel formula vs measured fibers, cusp orbits vs the
// elliptic-class count).  Failures are data in the report, not exceptions.

#include <string>
#include <vector>

#include "nslat/class_group.hpp"
#include "nslat/counting.hpp"
#include "nslat/oracle.hpp"

namespace nslat {

struct VerifyCell {
  i64 m = 0, d = 0;  // for disc-indexed checks m holds the discriminant
  std::string check;
  i64 formula = 0, oracle = 0;
  bool pass = false;
};

struct VerifyReport {
  i64 m_max = 0, d_max = 0;
  std::vector<VerifyCell> cells;
  bool all_pass = true;

  void add(i64 m, i64 d, const char *check, i64 formula, i64 oracle) {
    bool pass = formula == oracle;
    all_pass = all_pass && pass;
    cells.push_back({m, d, check, formula, oracle, pass});
  }
};

namespace detail {

// Expected number of smooth merely-ample orbits for odd squarefree d >= 5:
// 2^omega(m) when m is odd or divisible by 8, none otherwise.
inline i64 expected_merely_ample(i64 m) {
  int v2 = two_adic_valuation(m);
  if (v2 == 1 || v2 == 2) return 0;
  return pow2(distinct_prime_count(m));
}

}  // namespace detail

inline VerifyReport verify(i64 m_max, i64 d_max) {
  if (m_max < 1 || d_max < 1) throw std::invalid_argument("verification bounds must be positive");
  if (mul(m_max, d_max) > 10000) throw std::length_error("verification guard: m_max*d_max must stay <= 10^4");

  VerifyReport report;
  report.m_max = m_max;
  report.d_max = d_max;

  for (i64 m = 1; m <= m_max; ++m)
    for (i64 d = 1; d <= d_max; ++d) {
      OrbitReport orbits = enumerate_orbits(m, d);

      report.add(m, d, "nonsmooth-count", count_nonsmooth(m, d), orbits.nonsmooth_count());
      report.add(m, d, "exists-smooth", exists_smooth(m, d).answer ? 1 : 0,
                 orbits.smooth_count() > 0 ? 1 : 0);
      if (d >= 5)
        report.add(m, d, "exists-very-ample", exists_very_ample(m, d).answer ? 1 : 0,
                   orbits.very_ample_count() > 0 ? 1 : 0);

      if (in_closed_form_regime(m, d)) {
        report.add(m, d, "total-vs-enumeration", closed_form_total(m, d), orbits.total());
        if (d == 1 || is_prime(d))
          report.add(m, d, "smooth-count-prime-degree", count_smooth_prime_degree(m, d),
                     orbits.smooth_count());
        if (d >= 5 && is_prime(d))
          report.add(m, d, "very-ample-count-prime-degree", count_very_ample(m, d),
                     orbits.very_ample_count());
      }

      bool twice_odd_prime = d % 2 == 0 && is_prime(d / 2) && d / 2 > 2;
      if (d >= 5 && (is_prime(d) || twice_odd_prime) && (d % 2 == 1 || m % 2 == 1)) {
        i64 merely = 0, two_torsion = 0;
        for (const auto &o : orbits.orbits)
          if (o.tag == AmpleTag::smooth_merely_ample && o.image) {
            ++merely;
            // A non-primitive image has content exactly 2 here; its square is
            // taken in the class group of the halved form.
            const QuadForm &f = o.image->form_class;
            if (is_two_torsion_class(f.is_primitive() ? f : f.divided(2))) ++two_torsion;
          }
        report.add(m, d, "merely-ample-two-torsion", two_torsion, merely);
      }

      if (d >= 5 && d % 2 == 1 && is_squarefree(d))
        report.add(m, d, "merely-ample-split", detail::expected_merely_ample(m),
                   orbits.count(AmpleTag::smooth_merely_ample));
    }

  for (i64 m = 1; m <= mul(10, m_max); ++m)
    report.add(m, 0, "cusp-orbits", elliptic_class_count(m), cusp_orbits(m));

  i64 disc_bound = mul(4, mul(m_max, d_max));
  for (i64 D = -3; D >= neg(disc_bound); --D) {
    if (!is_valid_discriminant(D)) continue;
    report.add(D, 0, "two-torsion-vs-ambiguous", two_torsion_count(D),
               static_cast<i64>(ambiguous_classes(D).size()));
    for (i64 g : {i64{2}, i64{3}}) {
      i64 big = mul(mul(g, g), D);
      if (big < neg(disc_bound)) continue;
      i64 measured = 0;
      for (const QuadForm &h : reduced_forms(big))
        if (extend_class(h, g) == principal_form(D)) ++measured;
      report.add(D, g, "extension-kernel", kernel_size(D, g), measured);
    }
  }

  return report;
}

}  // namespace nslat
