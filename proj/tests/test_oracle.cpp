#include <catch2/catch_amalgamated.hpp>

#include "nslat/counting.hpp"
#include "nslat/oracle.hpp"
#include "nslat/verify.hpp"
#include "support/oracles.hpp"

using namespace nslat;

TEST_CASE("orbit enumeration matches frozen small cells") {
  OrbitReport r = enumerate_orbits(1, 1);
  REQUIRE(r.total() == 1);
  CHECK(r.orbits[0].rep == NSClass{1, 1, 0, 1});
  CHECK(r.orbits[0].tag == AmpleTag::nonsmooth);

  r = enumerate_orbits(1, 5);
  CHECK(r.total() == 2);
  CHECK(r.nonsmooth_count() == 1);
  CHECK(r.smooth_count() == 1);
  CHECK(r.very_ample_count() == 0);

  r = enumerate_orbits(6, 1);
  CHECK(r.total() == 2);
  CHECK(r.nonsmooth_count() == 2);

  r = enumerate_orbits(2, 2);
  CHECK(r.total() == 3);
  CHECK(r.nonsmooth_count() == 2);
  CHECK(r.smooth_count() == 1);
  CHECK(r.very_ample_count() == 0);

  // the resolved disagreement cell: one very ample class at level 2, degree 7
  r = enumerate_orbits(2, 7);
  CHECK(r.very_ample_count() == 1);
  CHECK(r.very_ample_count() == count_very_ample(2, 7));
}

TEST_CASE("orbit representatives are pairwise inequivalent and tagged consistently") {
  for (auto [m, d] : {std::pair<i64, i64>{1, 4}, {2, 2}, {3, 5}, {4, 3}, {6, 2}, {12, 1}}) {
    OrbitReport r = enumerate_orbits(m, d);
    for (size_t i = 0; i < r.orbits.size(); ++i) {
      const OrbitInfo &oi = r.orbits[i];
      CHECK(degree(oi.rep) == d);
      CHECK(is_ample(oi.rep));
      CHECK(oi.min_intersection == min_elliptic_intersection(oi.rep));
      CHECK(oi.tag == classify_tag(oi.rep));
      CHECK(oi.image.has_value() == is_squarefree(d));
      if (oi.image) {
        PsiImage direct = psi(oi.rep);
        CHECK(oi.image->g == direct.g);
        CHECK(oi.image->form_class == direct.form_class);
      }
      for (size_t j = i + 1; j < r.orbits.size(); ++j)
        CHECK_FALSE(equivalent(q_of(oi.rep), q_of(r.orbits[j].rep), EquivMode::Gamma0, m));
    }
  }
}

TEST_CASE("enumeration agrees with closed forms on a block of cells") {
  for (i64 m = 1; m <= 8; ++m)
    for (i64 d = 1; d <= 8; ++d) {
      OrbitReport r = enumerate_orbits(m, d);
      CHECK(r.nonsmooth_count() == count_nonsmooth(m, d));
      if (in_closed_form_regime(m, d)) CHECK(r.total() == closed_form_total(m, d));
      CHECK(exists_smooth(m, d).answer == (r.smooth_count() > 0));
      if (d >= 5) CHECK(exists_very_ample(m, d).answer == (r.very_ample_count() > 0));
    }
}

TEST_CASE("cusp orbit counts match the elliptic-class formula") {
  CHECK(cusp_orbits(1) == 1);
  CHECK(cusp_orbits(4) == 3);
  CHECK(cusp_orbits(6) == 4);
  CHECK(cusp_orbits(12) == 6);
  CHECK(cusp_orbits(25) == 4);
  for (i64 m = 1; m <= 60; ++m) CHECK(cusp_orbits(m) == elliptic_class_count(m));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_orbits(101, 100), std::length_error);
  CHECK_THROWS_AS(enumerate_orbits(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_orbits(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cusp_orbits(0), std::invalid_argument);
}

TEST_CASE("verification harness passes on a desk-scale block") {
  VerifyReport rep = verify(6, 6);
  CHECK(rep.all_pass);
  CHECK_FALSE(rep.cells.empty());
  bool saw_total = false, saw_cusp = false, saw_kernel = false;
  for (const VerifyCell &c : rep.cells) {
    CHECK(c.pass);
    if (c.check == "total-vs-enumeration") saw_total = true;
    if (c.check == "cusp-orbits") saw_cusp = true;
    if (c.check == "extension-kernel") saw_kernel = true;
  }
  CHECK(saw_total);
  CHECK(saw_cusp);
  CHECK(saw_kernel);
  CHECK_THROWS_AS(verify(200, 200), std::length_error);
  CHECK_THROWS_AS(verify(0, 1), std::invalid_argument);
}
