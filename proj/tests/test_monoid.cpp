#include "doctest.h"
#include "xmg/monoid.hpp"

using namespace xmg;

TEST_CASE("standard monoid sizes") {
  CHECK(build_standard_monoid(2, MonoidKind::oriented).first.size() == 1);
  CHECK(build_standard_monoid(2, MonoidKind::symmetric).first.size() == 2);
  CHECK(build_standard_monoid(2, MonoidKind::hereditary).first.size() == 4);
  CHECK(build_standard_monoid(2, MonoidKind::reflexive_oriented).first.size() ==
        3);
  CHECK(build_standard_monoid(2, MonoidKind::reflexive_symmetric)
            .first.size() == 4);
  CHECK(build_standard_monoid(3, MonoidKind::symmetric).first.size() == 6);
  CHECK(build_standard_monoid(3, MonoidKind::hereditary).first.size() == 27);
  CHECK(build_standard_monoid(3, MonoidKind::reflexive_symmetric)
            .first.size() == 9);
  CHECK(build_standard_monoid(0, MonoidKind::symmetric).first.size() == 1);
  CHECK(build_standard_monoid(1, MonoidKind::reflexive_symmetric)
            .first.size() == 1);
}

TEST_CASE("canonical names") {
  auto [m, x] = build_standard_monoid(2, MonoidKind::reflexive_symmetric);
  REQUIRE(m.size() == 4);
  CHECK(m.names[0] == "id");
  CHECK(m.names[1] == "c_s");
  CHECK(m.names[2] == "i");
  CHECK(m.names[3] == "c_t");
  CHECK(x.names == std::vector<std::string>{"s", "t"});
  CHECK(m.identity == 0);
}

TEST_CASE("product convention applies left argument first") {
  auto [m, x] = build_standard_monoid(2, MonoidKind::reflexive_symmetric);
  const Idx c_s = 1, i = 2, c_t = 3;
  // apply c_s then i lands on t everywhere
  CHECK(m.product(c_s, i) == c_t);
  // apply i then c_s stays c_s
  CHECK(m.product(i, c_s) == c_s);
  CHECK(m.product(i, i) == m.identity);
  // evaluation action: s.i = t
  CHECK(x.apply(0, i, m.size()) == 1);
  CHECK(x.apply(1, i, m.size()) == 0);
  CHECK(x.apply(0, c_t, m.size()) == 1);
}

TEST_CASE("reflexive kinds reject an empty carrier") {
  CHECK_THROWS_AS(build_standard_monoid(0, MonoidKind::reflexive_oriented),
                  UsageError);
  CHECK_NOTHROW(build_standard_monoid(0, MonoidKind::hereditary));
}

TEST_CASE("hereditary size cap") {
  CHECK_THROWS_AS(build_standard_monoid(6, MonoidKind::hereditary),
                  CapacityError);
}

TEST_CASE("fix sets") {
  auto srx2 = build_standard_monoid(2, MonoidKind::reflexive_symmetric).first;
  CHECK(fix_set(srx2) == std::vector<Idx>{1, 3});  // the two constants

  auto sx2 = build_standard_monoid(2, MonoidKind::symmetric).first;
  CHECK(fix_set(sx2).empty());

  auto sx3 = build_standard_monoid(3, MonoidKind::symmetric).first;
  CHECK(fix_set(sx3).empty());

  auto trivial = build_standard_monoid(1, MonoidKind::oriented).first;
  CHECK(fix_set(trivial) == std::vector<Idx>{0});

  // Fix is closed under right multiplication
  auto hrx3 =
      build_standard_monoid(3, MonoidKind::reflexive_hereditary).first;
  auto fix = fix_set(hrx3);
  CHECK(fix.size() == 3);
  for (Idx f : fix)
    for (Idx n = 0; n < hrx3.size(); ++n) {
      Idx fn = hrx3.product(f, n);
      CHECK(std::find(fix.begin(), fix.end(), fn) != fix.end());
    }
}

TEST_CASE("invertibles") {
  auto srx2 = build_standard_monoid(2, MonoidKind::reflexive_symmetric).first;
  CHECK(invertibles(srx2) == std::vector<Idx>{0, 2});  // id and i

  auto sx3 = build_standard_monoid(3, MonoidKind::symmetric).first;
  CHECK(invertibles(sx3).size() == 6);

  auto rx2 = build_standard_monoid(2, MonoidKind::reflexive_oriented).first;
  CHECK(invertibles(rx2) == std::vector<Idx>{0});
}

TEST_CASE("validate catches corrupted tables") {
  auto m = build_standard_monoid(2, MonoidKind::symmetric).first;
  m.mul[0 * 2 + 0] = 1;  // id then id = i breaks the unit law
  CHECK_THROWS_AS(m.validate(), ValidationError);

  auto m3 = build_standard_monoid(3, MonoidKind::symmetric).first;
  m3.mul[1 * 6 + 2] = m3.mul[1 * 6 + 2] == 0 ? 1 : 0;
  CHECK_THROWS_AS(m3.validate(), ValidationError);
}

TEST_CASE("exhaustive unit and associativity for small standard monoids") {
  for (MonoidKind k :
       {MonoidKind::oriented, MonoidKind::symmetric, MonoidKind::hereditary,
        MonoidKind::reflexive_oriented, MonoidKind::reflexive_symmetric,
        MonoidKind::reflexive_hereditary}) {
    for (Idx n = monoid_kind_reflexive(k) ? 1 : 0; n <= 3; ++n) {
      auto [m, x] = build_standard_monoid(n, k);
      CHECK(m.size() <= 27);
      CHECK_NOTHROW(m.validate(27));
      CHECK_NOTHROW(x.validate(m));
    }
  }
}
