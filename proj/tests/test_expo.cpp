#include <set>

#include "doctest.h"
#include "xmg/bridge.hpp"
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

TEST_CASE("matching arcs") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto L = loop_pair_graph(t);
  CHECK(matching_arcs(*L, {0, 0}) == std::vector<Idx>{0, 1});

  auto A = representable(t, Obj::A);
  CHECK(matching_arcs(*A, {0, 1}) == std::vector<Idx>{0});  // only a_1
  CHECK(matching_arcs(*A, {1, 0}) == std::vector<Idx>{1});  // only a_i

  auto V = representable(t, Obj::V);
  auto VV = coproduct(V, V).graph;
  CHECK(matching_arcs(*VV, {0, 1}).empty());
}

TEST_CASE("two-loop graph to the arc representable over the symmetric pair") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  auto L = loop_pair_graph(t);
  auto A = representable(t, Obj::A);
  Exponential E = exponential(L, A);
  CHECK(E.graph->nV == 1);
  CHECK(E.graph->nA == 4);

  auto classes = classify_arcs(*E.graph);
  REQUIRE(classes.size() == 3);
  // arc digits are (g(a_1), g(a_i)); order: 00, 01, 10, 11
  CHECK(classes[0].orbit == std::vector<Idx>{0});
  CHECK(classes[0].kind == ArcClassKind::fixed_loop);
  CHECK(classes[1].orbit == std::vector<Idx>{1, 2});
  CHECK(classes[1].kind == ArcClassKind::unfixed_loop);
  CHECK(classes[2].orbit == std::vector<Idx>{3});
  CHECK(classes[2].kind == ArcClassKind::fixed_loop);

  // evaluation projects to the first digit at a_1
  GraphMorphism ev = eval_morphism(E);
  for (Idx p = 0; p < 4; ++p) {
    // product arc (p, j) has index p * |H(A)| + j
    CHECK(ev.fA[p * 2 + 0] == E.arcs[p].g[0]);
    CHECK(ev.fA[p * 2 + 0] == (p >> 1));  // digit x of xy
  }
  // the formula route agrees
  CHECK(exponential_arc_count_formula(L, A) == 4);
}

TEST_CASE("reflexive two-loop graph to the arc representable") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  auto L = loop_pair_graph(t);
  auto A = representable(t, Obj::A);
  Exponential E = exponential(L, A);
  CHECK(E.graph->nV == 2);
  CHECK(E.graph->nA == 64);

  auto classes = classify_arcs(*E.graph);
  Idx fixed = 0, unfixed = 0, cross = 0, distinguished = 0;
  Idx fixed_at_0 = 0, fixed_at_1 = 0;
  for (const auto& c : classes) {
    switch (c.kind) {
      case ArcClassKind::fixed_loop:
        fixed += static_cast<Idx>(c.orbit.size());
        (E.graph->incidence(c.orbit[0], 0) == 0 ? fixed_at_0 : fixed_at_1)++;
        break;
      case ArcClassKind::distinguished_loop:
        ++distinguished;
        ++fixed;
        (E.graph->incidence(c.orbit[0], 0) == 0 ? fixed_at_0 : fixed_at_1)++;
        break;
      case ArcClassKind::unfixed_loop:
        CHECK(c.orbit.size() == 2);
        ++unfixed;
        break;
      case ArcClassKind::nonloop:
        CHECK(c.orbit.size() == 2);
        ++cross;
        break;
    }
  }
  CHECK(fixed == 16);
  CHECK(distinguished == 2);
  CHECK(fixed_at_0 == 8);
  CHECK(fixed_at_1 == 8);
  CHECK(unfixed == 8);
  CHECK(cross == 16);
  CHECK(16 + 2 * 8 + 2 * 16 == 64);

  CHECK(exponential_arc_count_formula(L, A) == 64);
}

TEST_CASE("evaluation digits in the reflexive example") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  auto L = loop_pair_graph(t);
  auto A = representable(t, Obj::A);
  Exponential E = exponential(L, A);
  GraphMorphism ev = eval_morphism(E);
  // H arcs are the monoid elements [id, c_s, i, c_t]; evaluation at the
  // distinguished loop c_s projects to the g-entry at index 1
  for (Idx p = 0; p < E.graph->nA; ++p)
    CHECK(ev.fA[p * 4 + 1] == E.arcs[p].g[1]);
  // the distinguished loops of the exponential itself are the vertex
  // morphisms, whose arc component sends distinguished to distinguished
  for (Idx k = 0; k < E.graph->nV; ++k) {
    CHECK(E.vertex_homs[k].fA[1] == 0);
    const ExponentialArc& l = E.arcs[E.graph->loop_of(k)];
    CHECK(l.family == std::vector<Idx>{k, k});
    CHECK(l.g == E.vertex_homs[k].fA);
  }
  // i-action on a pair: swap family, swap the two middle digits
  for (Idx p = 0; p < E.graph->nA; ++p) {
    const ExponentialArc& a = E.arcs[p];
    const ExponentialArc& b = E.arcs[E.graph->action(p, 2)];  // i has index 2
    CHECK(b.family == std::vector<Idx>{a.family[1], a.family[0]});
    CHECK(b.g[0] == a.g[2]);
    CHECK(b.g[2] == a.g[0]);
    CHECK(b.g[1] == a.g[1]);
    CHECK(b.g[3] == a.g[3]);
  }
}

TEST_CASE("vertex representable exponentials collapse to the terminal") {
  for (Idx n : {2u, 3u}) {
    auto t = standard_theory(n, MonoidKind::symmetric);
    auto V = representable(t, Obj::V);
    Exponential E = exponential(V, V);
    CHECK(E.graph->nV == 1);
    CHECK(E.graph->nA == 1);
    CHECK(is_loop_arc(*E.graph, 0));
    CHECK(classify_arcs(*E.graph)[0].kind == ArcClassKind::fixed_loop);
  }
}

TEST_CASE("exponential by the vertex representable") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(2024);
  auto V = representable(t, Obj::V);
  for (int trial = 0; trial < 5; ++trial) {
    auto G = random_graph(t, 3, 6, rng);
    Exponential E = exponential(G, V);
    CHECK(E.graph->nV == G->nV);
    std::uint64_t expect = 1;
    for (Idx x = 0; x < t->x_size(); ++x) expect *= G->nV;
    CHECK(E.graph->nA == expect);
    // right-actions: the arc family is the incidence tuple, f.x = f(x)
    for (Idx p = 0; p < E.graph->nA; ++p) {
      const auto& fam = E.arcs[p].family;
      for (Idx x = 0; x < t->x_size(); ++x) {
        CHECK(E.graph->incidence(p, x) == fam[x]);
        CHECK(E.vertex_maps[fam[x]][0] == fam[x]);
      }
      // f.sigma = f o sigma
      for (Idx m = 0; m < t->m_size(); ++m) {
        const auto& fam2 = E.arcs[E.graph->action(p, m)].family;
        for (Idx x = 0; x < t->x_size(); ++x)
          CHECK(fam2[x] == fam[t->x_act(x, m)]);
      }
    }
  }
}

TEST_CASE("every emitted arc satisfies the commuting square") {
  for (MonoidKind k : {MonoidKind::symmetric, MonoidKind::reflexive_symmetric}) {
    auto t = standard_theory(2, k);
    SplitMix64 rng(55 + static_cast<Idx>(k));
    auto G = random_graph(t, 2, 4, rng);
    auto H = random_graph(t, 2, 4, rng);
    Exponential E = exponential(G, H);
    for (const auto& arc : E.arcs) {
      for (Idx j = 0; j < H->nA; ++j)
        for (Idx x = 0; x < t->x_size(); ++x)
          CHECK(G->incidence(arc.g[j], x) ==
                E.vertex_apply(arc.family[x], H->incidence(j, x)));
    }
    CHECK(exponential_arc_count_formula(G, H) == E.arcs.size());
  }
}

TEST_CASE("terminal exponent leaves the base unchanged up to iso") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(77);
  auto one = terminal_graph(t);
  for (int trial = 0; trial < 3; ++trial) {
    auto G = random_graph(t, 3, 5, rng);
    Exponential E = exponential(G, one);
    CHECK(E.graph->nV == G->nV);
    CHECK(E.graph->nA == G->nA);
    // hom-count comparison against G from a probe
    auto F = random_graph(t, 2, 4, rng);
    CHECK(enumerate_homs(F, E.graph).size() == enumerate_homs(F, G).size());
  }
}

TEST_CASE("exponential of a coproduct exponent is a product") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(88);
  auto G = random_graph(t, 2, 4, rng);
  auto H1 = random_graph(t, 2, 3, rng);
  auto H2 = random_graph(t, 2, 3, rng);
  auto H = coproduct(H1, H2).graph;
  Exponential E = exponential(G, H);
  auto P = product(exponential(G, H1).graph, exponential(G, H2).graph);
  CHECK(E.graph->nV == P.graph->nV);
  CHECK(E.graph->nA == P.graph->nA);
  auto F = random_graph(t, 2, 3, rng);
  CHECK(enumerate_homs(F, E.graph).size() ==
        enumerate_homs(F, P.graph).size());
}

TEST_CASE("adjunction hom-count and curry round-trips") {
  const struct {
    Idx n;
    MonoidKind k;
  } theories[] = {
      {2, MonoidKind::oriented},
      {2, MonoidKind::symmetric},
      {2, MonoidKind::reflexive_symmetric},
      {3, MonoidKind::symmetric},
  };
  for (const auto& spec : theories) {
    auto t = standard_theory(spec.n, spec.k);
    SplitMix64 rng(1234 + 10 * spec.n + static_cast<Idx>(spec.k));
    for (int trial = 0; trial < 6; ++trial) {
      auto F = random_graph(t, 2, 3, rng);
      auto H = random_graph(t, 2, 3, rng);
      auto G = random_graph(t, 2, 3, rng);
      Exponential E = exponential(G, H);
      auto P = product(F, H);
      auto direct = enumerate_homs(P.graph, G);
      auto curried = enumerate_homs(F, E.graph);
      REQUIRE(direct.size() == curried.size());

      std::set<std::pair<std::vector<Idx>, std::vector<Idx>>> seen;
      for (const auto& h : direct) {
        GraphMorphism k = curry(h, F, H, E);
        CHECK_NOTHROW(validate_morphism(k));
        seen.insert({k.fV, k.fA});
        GraphMorphism back = uncurry(k, F, H, E);
        CHECK(back.same_tables(h));
      }
      CHECK(seen.size() == direct.size());  // injective transpose
      for (const auto& k : curried) {
        GraphMorphism h = uncurry(k, F, H, E);
        GraphMorphism again = curry(h, F, H, E);
        CHECK(again.same_tables(k));
      }
    }
  }
}

TEST_CASE("curry of evaluation is the identity") {
  auto t = standard_theory(2, MonoidKind::reflexive_symmetric);
  auto L = loop_pair_graph(t);
  auto A = representable(t, Obj::A);
  Exponential E = exponential(L, A);
  GraphMorphism ev = eval_morphism(E);
  GraphMorphism k = curry(ev, E.graph, A, E);
  CHECK(k.same_tables(identity_morphism(E.graph)));
}

TEST_CASE("capacity guard rejects oversized exponentials") {
  auto t = standard_theory(2, MonoidKind::symmetric);
  SplitMix64 rng(6);
  auto G = random_graph(t, 3, 6, rng);
  auto H = random_graph(t, 3, 6, rng);
  ExpoOptions opts;
  opts.max_vertices = 1;
  if (G->nV > 1 && H->nV > 0)
    CHECK_THROWS_AS(exponential(G, H, opts), CapacityError);
}
