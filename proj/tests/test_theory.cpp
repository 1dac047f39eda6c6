#include "doctest.h"
#include "xmg/theory.hpp"

using namespace xmg;

TEST_CASE("homset shapes of standard theories") {
  Theory sym2 = make_standard_theory(2, MonoidKind::symmetric);
  CHECK(sym2.x_size() == 2);
  CHECK(sym2.m_size() == 2);
  CHECK_FALSE(sym2.reflexive);

  Theory rsym2 = make_standard_theory(2, MonoidKind::reflexive_symmetric);
  CHECK(rsym2.x_size() == 2);
  CHECK(rsym2.m_size() == 4);
  CHECK(rsym2.reflexive);
  CHECK(rsym2.fix_elems == std::vector<Idx>{1, 3});

  // bouquet theory: one object pair with a single connecting arrow
  Theory bouquet = make_standard_theory(1, MonoidKind::oriented);
  CHECK(bouquet.x_size() == 1);
  CHECK(bouquet.m_size() == 1);
}

TEST_CASE("composition rules") {
  Theory t = make_standard_theory(2, MonoidKind::reflexive_symmetric);
  const Idx c_s = 1, i = 2, c_t = 3;

  // m after x is the action
  auto r = compose(t, TheoryMorphism::m(i), TheoryMorphism::x(0));
  CHECK(r.kind == TheoryMorphism::Kind::X);
  CHECK(r.index == 1);

  // m after m' is "m' then m"
  r = compose(t, TheoryMorphism::m(i), TheoryMorphism::m(c_s));
  CHECK(r.kind == TheoryMorphism::Kind::M);
  CHECK(r.index == c_t);

  // ell absorbs monoid elements
  r = compose(t, TheoryMorphism::ell(), TheoryMorphism::m(i));
  CHECK(r.kind == TheoryMorphism::Kind::Ell);

  // ell after x is the vertex identity
  r = compose(t, TheoryMorphism::ell(), TheoryMorphism::x(1));
  CHECK(r.kind == TheoryMorphism::Kind::IdV);

  // x after ell is the fixed element naming x
  r = compose(t, TheoryMorphism::x(1), TheoryMorphism::ell());
  CHECK(r.kind == TheoryMorphism::Kind::M);
  CHECK(r.index == c_t);

  CHECK_THROWS_AS(compose(t, TheoryMorphism::x(0), TheoryMorphism::m(i)),
                  UsageError);
}

TEST_CASE("axiom check passes for every standard theory up to |X| = 3") {
  for (MonoidKind k :
       {MonoidKind::oriented, MonoidKind::symmetric, MonoidKind::hereditary,
        MonoidKind::reflexive_oriented, MonoidKind::reflexive_symmetric,
        MonoidKind::reflexive_hereditary}) {
    for (Idx n = monoid_kind_reflexive(k) ? 1 : 0; n <= 3; ++n) {
      Theory t = make_standard_theory(n, k);
      AxiomReport report = check_axioms(t);
      INFO(monoid_kind_name(k), " x", n);
      for (const auto& v : report.violations) INFO(v);
      CHECK(report.ok());
    }
  }
}

TEST_CASE("corrupted multiplication surfaces as violations, not throws") {
  Theory t = make_standard_theory(3, MonoidKind::symmetric);
  // swap two entries by hand
  t.monoid.mul[1 * 6 + 2] = t.monoid.mul[1 * 6 + 3];
  AxiomReport report = check_axioms(t);
  CHECK_FALSE(report.ok());
  bool has_assoc = false;
  for (const auto& v : report.violations)
    if (v.find("associativity") != std::string::npos) has_assoc = true;
  CHECK(has_assoc);
}

TEST_CASE("reflexive closure patterns stay inside the homset table") {
  Theory t = make_standard_theory(2, MonoidKind::reflexive_symmetric);
  // ell o x o ell patterns close
  for (Idx x = 0; x < t.x_size(); ++x) {
    auto m = compose(t, TheoryMorphism::x(x), TheoryMorphism::ell());
    auto back = compose(t, TheoryMorphism::ell(), m);
    CHECK(back == TheoryMorphism::ell());
    for (Idx y = 0; y < t.x_size(); ++y) {
      auto a = compose(t, m, TheoryMorphism::x(y));
      CHECK(a.kind == TheoryMorphism::Kind::X);
      CHECK(a.index == x);  // fixed element absorbs the incoming name
    }
  }
}

TEST_CASE("make_theory rejects mismatched carriers") {
  auto [m, x] = build_standard_monoid(2, MonoidKind::symmetric);
  CHECK_THROWS_AS(make_theory(m, x, true), UsageError);  // empty Fix

  auto [m2, x2] = build_standard_monoid(2, MonoidKind::reflexive_symmetric);
  RightMSet bad = x2;
  for (Idx xi = 0; xi < bad.size(); ++xi)
    for (Idx mi = 0; mi < m2.size(); ++mi)
      bad.act[xi * m2.size() + mi] = xi;  // trivial action, not Fix-shaped
  CHECK_THROWS_AS(make_theory(m2, bad, true), UsageError);
}
