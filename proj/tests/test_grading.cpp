#include "doctest.h"
#include "support.hpp"
#include "toricflow/error.hpp"
#include "toricflow/grading.hpp"

using namespace toricflow;
using namespace toricflow::testing;

TEST_CASE("classify: A2") {
  const AffineMonoid a2(mvecs({{1, 0}, {0, 1}}));

  const GradingClass p = classify(a2, nvec({1, 0}));
  CHECK(p.kind == GradingKind::Parabolic);
  REQUIRE(p.zero_face);
  REQUIRE(p.zero_face->rays.size() == 1);
  CHECK(a2.weight_cone().rays()[p.zero_face->rays[0]] == mvec({0, 1}));
  CHECK(*p.fixed_divisor_ray == 0);
  CHECK(p.effective);
  CHECK(*p.invariant_trdeg == 1);

  CHECK(classify(a2, nvec({1, 1})).kind == GradingKind::Elliptic);
  CHECK(*classify(a2, nvec({1, 1})).invariant_trdeg == 0);
  CHECK(classify(a2, nvec({1, -1})).kind == GradingKind::Hyperbolic);
  CHECK_FALSE(classify(a2, nvec({1, -1})).zero_face);

  try {
    classify(a2, nvec({0, 0}));
    FAIL("l = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroVector);
  }
}

TEST_CASE("classify: A3 degenerate and cuspidal") {
  const AffineMonoid a3(mvecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const GradingClass g = classify(a3, nvec({1, 1, 0}));
  CHECK(g.kind == GradingKind::DegenerateNonnegative);
  CHECK(g.zero_face->dim == 1);

  const GradingClass c = classify(cuspidal_monoid(), nvec({1}));
  CHECK(c.kind == GradingKind::Parabolic);
  CHECK(c.effective);
  CHECK(c.degree_gcd == 1);
}

TEST_CASE("non-primitive subgroups are flagged as non-effective") {
  const AffineMonoid a2(mvecs({{1, 0}, {0, 1}}));
  const GradingClass g = classify(a2, nvec({3, 0}));
  CHECK(g.kind == GradingKind::Parabolic);
  CHECK(g.degree_gcd == 3);
  CHECK_FALSE(g.effective);
  CHECK(*g.fixed_divisor_ray == *classify(a2, nvec({1, 0})).fixed_divisor_ray);
  CHECK(g.zero_face == classify(a2, nvec({1, 0})).zero_face);
}

TEST_CASE("classification matches the Hilbert-basis sign oracle") {
  for (const auto& [name, mon] : saturated_suite()) {
    CAPTURE(name);
    const auto hb = hilbert_basis(mon.weight_cone());
    for (int trial = 0; trial < 200; ++trial) {
      LatticeVector l = random_vector(Side::N, mon.rank(), 4);
      if (l.is_zero()) continue;
      l = primitive(l);
      CHECK(classify(mon, l).kind == oracle_classify(hb, mon.rank(), l));
    }
    // The random box rarely hits rays of sigma; cover them explicitly.
    const Cone sigma = mon.sigma();
    for (const auto& p : sigma.rays()) {
      CHECK(oracle_classify(hb, mon.rank(), p) == GradingKind::Parabolic);
      CHECK(classify(mon, p).kind == GradingKind::Parabolic);
    }
  }
}

TEST_CASE("straightening subtori") {
  const AffineMonoid a2(mvecs({{1, 0}, {0, 1}}));
  const auto s = straightening_subtori(a2);
  REQUIRE(s.subtori.size() == 2);
  CHECK(s.subtori[0].subtorus == nvec({1, 0}));
  CHECK(s.subtori[1].subtorus == nvec({0, 1}));

  const AffineMonoid quadric(mvecs({{1, 0}, {1, 1}, {1, 2}}));
  const auto q = straightening_subtori(quadric);
  REQUIRE(q.subtori.size() == 2);
  CHECK(q.subtori[0].subtorus == nvec({0, 1}));
  CHECK(q.subtori[1].subtorus == nvec({2, -1}));

  const AffineMonoid line(mvecs({{1}}));
  const auto l = straightening_subtori(line);
  REQUIRE(l.subtori.size() == 1);
  CHECK(l.subtori[0].subtorus == nvec({1}));
  CHECK(fixed_locus(line, nvec({1})).vanishing == std::vector<std::size_t>{0});

  try {
    straightening_subtori(cuspidal_monoid());
    FAIL("non-normal monoid accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NormalityRequired);
  }
}

TEST_CASE("straightening invariants over the saturated suite") {
  for (const auto& [name, mon] : saturated_suite()) {
    CAPTURE(name);
    const auto set = straightening_subtori(mon);
    CHECK(set.subtori.size() == mon.sigma().rays().size());
    CHECK(set.subtori.size() == mon.weight_cone().facets().size());
    for (const auto& st : set.subtori) {
      const GradingClass g = classify(mon, st.subtorus);
      CHECK(g.kind == GradingKind::Parabolic);
      CHECK(*g.fixed_divisor_ray == st.ray);
      CHECK(g.zero_face->rays == st.facet.rays);

      const GradingClass neg = classify(mon, -st.subtorus);
      CHECK(neg.kind != GradingKind::Parabolic);

      // Positive scaling keeps facet and divisor.
      const GradingClass scaled = classify(mon, Integer(5) * st.subtorus);
      CHECK(scaled.kind == GradingKind::Parabolic);
      CHECK(scaled.fixed_divisor_ray == g.fixed_divisor_ray);
      CHECK(scaled.zero_face == g.zero_face);
      CHECK(scaled.degree_gcd == 5 * g.degree_gcd);
    }
  }
}

TEST_CASE("fixed locus") {
  const AffineMonoid a2(mvecs({{1, 0}, {0, 1}}));
  const FixedLocus d = fixed_locus(a2, nvec({1, 0}));
  CHECK(d.ray == 0);
  CHECK(d.vanishing == std::vector<std::size_t>{0});
  CHECK(d.free == std::vector<std::size_t>{1});
  CHECK(d.describe() == "x1 = 0");

  const AffineMonoid quadric(mvecs({{1, 0}, {1, 1}, {1, 2}}));
  const FixedLocus q = fixed_locus(quadric, nvec({0, 1}));
  CHECK(q.vanishing == std::vector<std::size_t>{1, 2});
  CHECK(q.free == std::vector<std::size_t>{0});
  CHECK(q.describe() == "x2 = x3 = 0");

  try {
    fixed_locus(a2, nvec({1, 1}));
    FAIL("elliptic accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotParabolic);
  }
}
