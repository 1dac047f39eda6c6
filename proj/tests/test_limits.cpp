#include "doctest.h"
#include "xmg/bridge.hpp"
#include "xmg/homs.hpp"
#include "xmg/limits.hpp"
#include "xmg/random.hpp"

using namespace xmg;

TEST_CASE("terminal and initial") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto one = terminal_graph(t);
  CHECK(one->nV == 1);
  CHECK(one->nA == 1);
  auto cls = classify_arcs(*one);
  CHECK(cls[0].kind == ArcClassKind::fixed_loop);

  auto tr = standard_theory(2, MonoidKind::reflexive_symmetric);
  auto oner = terminal_graph(tr);
  CHECK(oner->nV == 1);
  CHECK(oner->nA == 1);
  CHECK(classify_arcs(*oner)[0].kind == ArcClassKind::distinguished_loop);

  auto zero = initial_graph(t);
  CHECK(zero->nV == 0);
  CHECK(zero->nA == 0);

  // universal properties: unique map to terminal, unique map from initial
  SplitMix64 rng(3);
  auto G = random_graph(t, 3, 6, rng);
  CHECK(enumerate_homs(G, one).size() == 1);
  CHECK(enumerate_homs(zero, G).size() == 1);
}

TEST_CASE("product sizes are pointwise") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto V = representable(t, Obj::V);
  auto A = representable(t, Obj::A);

  auto VA = product(V, A);
  CHECK(VA.graph->nV == 2);
  CHECK(VA.graph->nA == 0);

  auto AA = product(A, A);
  CHECK(AA.graph->nV == 4);
  CHECK(AA.graph->nA == 4);
  CHECK_NOTHROW(validate_morphism(AA.proj1));
  CHECK_NOTHROW(validate_morphism(AA.proj2));
}

TEST_CASE("coproduct is disjoint union") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto L = loop_pair_graph(t);
  auto LL = coproduct(L, L);
  CHECK(LL.graph->nV == 2);
  CHECK(LL.graph->nA == 4);
  CHECK_NOTHROW(validate_morphism(LL.inj1));
  CHECK_NOTHROW(validate_morphism(LL.inj2));
}

TEST_CASE("product universal property on small random instances") {
  for (MonoidKind k : {MonoidKind::symmetric, MonoidKind::reflexive_symmetric}) {
    auto t = standard_theory(2, k);
    SplitMix64 rng(41 + static_cast<int>(k));
    for (int trial = 0; trial < 3; ++trial) {
      auto G = random_graph(t, 2, 4, rng);
      auto H = random_graph(t, 2, 4, rng);
      auto F = random_graph(t, 2, 4, rng);
      auto P = product(G, H);
      // pairs (F->G, F->H) correspond to maps F -> GxH
      auto to_g = enumerate_homs(F, G);
      auto to_h = enumerate_homs(F, H);
      auto to_p = enumerate_homs(F, P.graph);
      CHECK(to_p.size() == to_g.size() * to_h.size());
      for (const auto& m : to_p) {
        CHECK_NOTHROW(validate_morphism(compose_morphisms(P.proj1, m)));
        CHECK_NOTHROW(validate_morphism(compose_morphisms(P.proj2, m)));
      }
    }
  }
}

TEST_CASE("coproduct universal property") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  SplitMix64 rng(99);
  auto G = random_graph(t, 2, 4, rng);
  auto H = random_graph(t, 2, 4, rng);
  auto K = random_graph(t, 2, 4, rng);
  auto C = coproduct(G, H);
  auto from_g = enumerate_homs(G, K);
  auto from_h = enumerate_homs(H, K);
  auto from_c = enumerate_homs(C.graph, K);
  CHECK(from_c.size() == from_g.size() * from_h.size());
}

TEST_CASE("equalizer basics") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(11);
  auto G = random_graph(t, 3, 6, rng);
  auto H = random_graph(t, 3, 6, rng);
  auto homs = enumerate_homs(G, H);
  if (homs.size() >= 1) {
    auto e = equalizer(homs[0], homs[0]);
    CHECK(e.graph->nV == G->nV);
    CHECK(e.graph->nA == G->nA);
  }
  if (homs.size() >= 2) {
    auto e = equalizer(homs[0], homs[1]);
    CHECK_NOTHROW(validate_morphism(e.include));
    // equalized elements really agree
    for (Idx v = 0; v < e.graph->nV; ++v)
      CHECK(homs[0].fV[e.include.fV[v]] == homs[1].fV[e.include.fV[v]]);
  }
}

TEST_CASE("equalizer of distinct constant maps is empty") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto V = representable(t, Obj::V);
  auto VV = coproduct(V, V).graph;  // two isolated vertices
  auto homs = enumerate_homs(VV, VV);
  // constant maps at the two vertices
  GraphMorphism c0, c1;
  for (const auto& m : homs) {
    if (m.fV == std::vector<Idx>{0, 0}) c0 = m;
    if (m.fV == std::vector<Idx>{1, 1}) c1 = m;
  }
  REQUIRE(!c0.fV.empty());
  REQUIRE(!c1.fV.empty());
  auto e = equalizer(c0, c1);
  CHECK(e.graph->nV == 0);
  CHECK(e.graph->nA == 0);
}

TEST_CASE("coequalizer of the two vertex names of the oriented arc") {
  auto t = standard_theory(2, MonoidKind::oriented);
  auto V = representable(t, Obj::V);
  auto A = representable(t, Obj::A);
  auto homs = enumerate_homs(V, A);  // the two vertex inclusions
  REQUIRE(homs.size() == 2);
  auto q = coequalizer(homs[0], homs[1]);
  CHECK(q.graph->nV == 1);
  CHECK(q.graph->nA == 1);
  CHECK(is_loop_arc(*q.graph, 0));
  CHECK_NOTHROW(validate_morphism(q.quotient));
}

TEST_CASE("coequalizer congruence is least: oracle by brute closure") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  SplitMix64 rng(7);
  for (int trial = 0; trial < 4; ++trial) {
    auto G = random_graph(t, 2, 4, rng);
    auto H = random_graph(t, 3, 6, rng);
    auto homs = enumerate_homs(G, H);
    if (homs.size() < 2) continue;
    const auto& f = homs[0];
    const auto& g = homs[1];
    auto q = coequalizer(f, g);
    // brute-force closure on pairs
    std::vector<std::vector<bool>> relV(H->nV, std::vector<bool>(H->nV));
    std::vector<std::vector<bool>> relA(H->nA, std::vector<bool>(H->nA));
    for (Idx v = 0; v < H->nV; ++v) relV[v][v] = true;
    for (Idx a = 0; a < H->nA; ++a) relA[a][a] = true;
    for (Idx v = 0; v < G->nV; ++v)
      relV[f.fV[v]][g.fV[v]] = relV[g.fV[v]][f.fV[v]] = true;
    for (Idx a = 0; a < G->nA; ++a)
      relA[f.fA[a]][g.fA[a]] = relA[g.fA[a]][f.fA[a]] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      // transitivity
      for (Idx a = 0; a < H->nV; ++a)
        for (Idx b = 0; b < H->nV; ++b)
          for (Idx c = 0; c < H->nV; ++c)
            if (relV[a][b] && relV[b][c] && !relV[a][c])
              relV[a][c] = relV[c][a] = changed = true;
      for (Idx a = 0; a < H->nA; ++a)
        for (Idx b = 0; b < H->nA; ++b)
          for (Idx c = 0; c < H->nA; ++c)
            if (relA[a][b] && relA[b][c] && !relA[a][c])
              relA[a][c] = relA[c][a] = changed = true;
      // congruence closure
      for (Idx a = 0; a < H->nA; ++a)
        for (Idx b = 0; b < H->nA; ++b)
          if (relA[a][b]) {
            for (Idx m = 0; m < t->m_size(); ++m) {
              Idx am = H->action(a, m), bm = H->action(b, m);
              if (!relA[am][bm]) relA[am][bm] = relA[bm][am] = changed = true;
            }
            for (Idx x = 0; x < t->x_size(); ++x) {
              Idx ax = H->incidence(a, x), bx = H->incidence(b, x);
              if (!relV[ax][bx]) relV[ax][bx] = relV[bx][ax] = changed = true;
            }
          }
      for (Idx v = 0; v < H->nV; ++v)
        for (Idx w = 0; w < H->nV; ++w)
          if (relV[v][w]) {
            Idx lv = H->loop_of(v), lw = H->loop_of(w);
            if (!relA[lv][lw]) relA[lv][lw] = relA[lw][lv] = changed = true;
          }
    }
    // classes agree with the quotient tables
    for (Idx v = 0; v < H->nV; ++v)
      for (Idx w = 0; w < H->nV; ++w)
        CHECK(relV[v][w] == (q.quotient.fV[v] == q.quotient.fV[w]));
    for (Idx a = 0; a < H->nA; ++a)
      for (Idx b = 0; b < H->nA; ++b)
        CHECK(relA[a][b] == (q.quotient.fA[a] == q.quotient.fA[b]));
  }
}

TEST_CASE("coequalizer universal property via mediating morphisms") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(13);
  for (int trial = 0; trial < 3; ++trial) {
    auto G = random_graph(t, 2, 4, rng);
    auto H = random_graph(t, 2, 4, rng);
    auto homs = enumerate_homs(G, H);
    if (homs.size() < 2) continue;
    auto q = coequalizer(homs[0], homs[1]);
    auto K = random_graph(t, 2, 4, rng);
    // every map H -> K coequalizing the pair factors uniquely
    for (const auto& m : enumerate_homs(H, K)) {
      auto mf = compose_morphisms(m, homs[0]);
      auto mg = compose_morphisms(m, homs[1]);
      if (!mf.same_tables(mg)) continue;
      Idx count = 0;
      for (const auto& u : enumerate_homs(q.graph, K))
        if (compose_morphisms(u, q.quotient).same_tables(m)) ++count;
      CHECK(count == 1);
    }
  }
}
