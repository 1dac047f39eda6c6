#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "xmg/bridge.hpp"
#include "xmg/homs.hpp"
#include "xmg/random.hpp"

using namespace xmg;

namespace {

Idx count_kind(const std::vector<ArcClass>& classes, ArcClassKind k) {
  Idx n = 0;
  for (const auto& c : classes)
    if (c.kind == k) ++n;
  return n;
}

}  // namespace

TEST_CASE("representable shapes match the four theories on two elements") {
  auto t_or = standard_theory(2, MonoidKind::oriented);
  auto t_sy = standard_theory(2, MonoidKind::symmetric);
  auto t_ro = standard_theory(2, MonoidKind::reflexive_oriented);
  auto t_rs = standard_theory(2, MonoidKind::reflexive_symmetric);

  auto A_or = representable(t_or, Obj::A);
  CHECK(A_or->nV == 2);
  CHECK(A_or->nA == 1);

  auto A_sy = representable(t_sy, Obj::A);
  CHECK(A_sy->nV == 2);
  CHECK(A_sy->nA == 2);

  auto A_ro = representable(t_ro, Obj::A);
  CHECK(A_ro->nV == 2);
  CHECK(A_ro->nA == 3);

  auto A_rs = representable(t_rs, Obj::A);
  CHECK(A_rs->nV == 2);
  CHECK(A_rs->nA == 4);

  auto V_rs = representable(t_rs, Obj::V);
  CHECK(V_rs->nV == 1);
  CHECK(V_rs->nA == 1);
  auto cls = classify_arcs(*V_rs);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0].kind == ArcClassKind::distinguished_loop);

  auto V_sy = representable(t_sy, Obj::V);
  CHECK(V_sy->nV == 1);
  CHECK(V_sy->nA == 0);
}

TEST_CASE("representables validate over a noncommutative group") {
  auto t = standard_theory(3, MonoidKind::symmetric);
  CHECK_NOTHROW(representable(t, Obj::A));
  auto t2 = standard_theory(3, MonoidKind::reflexive_hereditary);
  CHECK_NOTHROW(representable(t2, Obj::A));
}

TEST_CASE("representables have no unfixed loops") {
  for (MonoidKind k : {MonoidKind::symmetric, MonoidKind::reflexive_symmetric,
                       MonoidKind::reflexive_hereditary}) {
    for (Idx n = 1; n <= 3; ++n) {
      auto t = standard_theory(n, k);
      auto A = representable(t, Obj::A);
      for (const auto& c : classify_arcs(*A))
        CHECK(c.kind != ArcClassKind::unfixed_loop);
    }
  }
}

TEST_CASE("make_graph rejects an incidence table breaking compatibility") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  // one arc pair swapped by i, but the partner has the wrong incidences
  std::vector<Idx> inc = {0, 1, 0, 1};  // should be 1, 0 on the second arc
  std::vector<Idx> act = {0, 1, 1, 0};
  CHECK_THROWS_AS(make_graph(t, 2, inc, act), ValidationError);
}

TEST_CASE("make_graph names the failing law") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  std::vector<Idx> inc = {0, 1, 0, 1};
  std::vector<Idx> act = {0, 1, 1, 0};
  try {
    make_graph(t, 2, inc, act);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("compatibility") != std::string::npos);
    CHECK(msg.find("m=") != std::string::npos);
    CHECK(msg.find("x=") != std::string::npos);
  }
}

TEST_CASE("walking band graph matches its classification") {
  auto g = walking_band_graph();
  CHECK(g->nV == 3);
  CHECK(g->nA == 9);
  auto classes = classify_arcs(*g);
  CHECK(classes.size() == 6);
  CHECK(count_kind(classes, ArcClassKind::nonloop) == 2);
  CHECK(count_kind(classes, ArcClassKind::unfixed_loop) == 1);
  CHECK(count_kind(classes, ArcClassKind::distinguished_loop) == 3);
  CHECK(count_kind(classes, ArcClassKind::fixed_loop) == 0);
  // the band is the orbit {2, 3}
  for (const auto& c : classes)
    if (c.kind == ArcClassKind::unfixed_loop)
      CHECK(c.orbit == std::vector<Idx>{2, 3});
}

TEST_CASE("loop pair graph classifies as two fixed loops") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto L = loop_pair_graph(t);
  auto classes = classify_arcs(*L);
  CHECK(classes.size() == 2);
  CHECK(count_kind(classes, ArcClassKind::fixed_loop) == 2);

  auto tr = standard_theory(2, MonoidKind::reflexive_symmetric);
  auto Lr = loop_pair_graph(tr);
  auto rcls = classify_arcs(*Lr);
  CHECK(rcls.size() == 2);
  CHECK(count_kind(rcls, ArcClassKind::distinguished_loop) == 1);
  CHECK(count_kind(rcls, ArcClassKind::fixed_loop) == 1);
}

TEST_CASE("yoneda correspondence for hom counts") {
  for (MonoidKind k :
       {MonoidKind::oriented, MonoidKind::symmetric,
        MonoidKind::reflexive_symmetric, MonoidKind::reflexive_oriented}) {
    Idx lo = monoid_kind_reflexive(k) ? 1 : 1;
    for (Idx n = lo; n <= 2; ++n) {
      auto t = standard_theory(n, k);
      auto V = representable(t, Obj::V);
      auto A = representable(t, Obj::A);
      SplitMix64 rng(17 * n + static_cast<int>(k));
      for (int trial = 0; trial < 4; ++trial) {
        auto G = random_graph(t, 3, 6, rng);
        CHECK(enumerate_homs(V, G).size() == G->nV);
        CHECK(enumerate_homs(A, G).size() == G->nA);
      }
    }
  }
}

TEST_CASE("hom enumeration spot values") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto V = representable(t, Obj::V);
  auto A = representable(t, Obj::A);
  auto L = loop_pair_graph(t);
  CHECK(enumerate_homs(V, A).size() == 2);
  CHECK(enumerate_homs(A, L).size() == 2);
  CHECK(enumerate_homs(L, V).size() == 0);
}

TEST_CASE("hom enumeration agrees with the brute-force oracle") {
  for (MonoidKind k : {MonoidKind::oriented, MonoidKind::symmetric,
                       MonoidKind::reflexive_symmetric}) {
    auto t = standard_theory(2, k);
    SplitMix64 rng(91 + static_cast<int>(k));
    for (int trial = 0; trial < 6; ++trial) {
      auto G = random_graph(t, 2, 3, rng);
      auto H = random_graph(t, 2, 4, rng);
      auto fast = enumerate_homs(G, H);
      auto slow = oracle::all_homs_brute(G, H);
      REQUIRE(fast.size() == slow.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        CHECK(fast[i].fV == slow[i].fV);
        CHECK(fast[i].fA == slow[i].fA);
      }
    }
  }
}

TEST_CASE("parallel and serial kernels agree") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    auto G = random_graph(t, 3, 6, rng);
    auto H = random_graph(t, 3, 6, rng);
    HomOptions par;
    par.parallel = true;
    HomOptions ser;
    ser.parallel = false;
    auto a = enumerate_homs(G, H, par);
    auto b = enumerate_homs_serial(G, H, ser);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].fV == b[i].fV);
      CHECK(a[i].fA == b[i].fA);
    }
  }
}

TEST_CASE("budget exceeded raises a capacity error") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto A = representable(t, Obj::A);
  auto big = coproduct(coproduct(A, A).graph, coproduct(A, A).graph).graph;
  HomOptions opts;
  opts.budget = 3;
  CHECK_THROWS_AS(enumerate_homs(big, big, opts), CapacityError);
}

TEST_CASE("morphism composition and identity laws") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  SplitMix64 rng(23);
  auto G = random_graph(t, 3, 5, rng);
  auto H = random_graph(t, 3, 5, rng);
  auto K = random_graph(t, 3, 5, rng);
  auto gh = enumerate_homs(G, H);
  auto hk = enumerate_homs(H, K);
  if (!gh.empty() && !hk.empty()) {
    const auto& f = gh[rng.below(static_cast<Idx>(gh.size()))];
    const auto& g = hk[rng.below(static_cast<Idx>(hk.size()))];
    auto fg = compose_morphisms(g, f);
    CHECK_NOTHROW(validate_morphism(fg));
    auto idG = identity_morphism(G);
    auto idH = identity_morphism(H);
    CHECK(compose_morphisms(f, idG).same_tables(f));
    CHECK(compose_morphisms(idH, f).same_tables(f));
  }
  // associativity on a composable triple
  auto kk = enumerate_homs(K, K);
  if (!gh.empty() && !hk.empty() && !kk.empty()) {
    const auto& f = gh[0];
    const auto& g = hk[0];
    const auto& h = kk[0];
    auto left = compose_morphisms(h, compose_morphisms(g, f));
    auto right = compose_morphisms(compose_morphisms(h, g), f);
    CHECK(left.same_tables(right));
  }
}

TEST_CASE("random graphs always validate") {
  for (MonoidKind k :
       {MonoidKind::oriented, MonoidKind::symmetric, MonoidKind::hereditary,
        MonoidKind::reflexive_oriented, MonoidKind::reflexive_symmetric}) {
    for (Idx n = 1; n <= 3; ++n) {
      auto t = standard_theory(n, k);
      SplitMix64 rng(1000 * n + static_cast<int>(k));
      for (int trial = 0; trial < 8; ++trial) {
        auto g = random_graph(t, 4, 9, rng);
        CHECK_NOTHROW(validate_graph(*g));
      }
    }
  }
}

TEST_CASE("classification orbits partition the arc set") {
  auto t = standard_theory(3, MonoidKind::symmetric);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_graph(t, 4, 12, rng);
    std::vector<bool> seen(g->nA, false);
    for (const auto& c : classify_arcs(*g)) {
      for (Idx a : c.orbit) {
        CHECK_FALSE(seen[a]);
        seen[a] = true;
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}
