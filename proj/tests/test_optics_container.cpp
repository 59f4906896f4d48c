#include <gtest/gtest.h>

#include "polyrep/polyrep.hpp"

using namespace polyrep;

namespace {

Fin2 const a0{0}, a1{1};
auto const singleton = [](Fin2 a) { return Const<Fin2, Fin2>{{a}}; };

using P = std::pair<Fin2, Fin3>;

std::vector<Fin2> bits(std::initializer_list<std::size_t> vs) {
  std::vector<Fin2> out;
  for (auto v : vs) out.push_back(Fin2{v});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lenses

TEST(Lens, FstGetSet) {
  auto const k = vlens_to_klens(fst_lens<Fin2, Fin2, Fin3>());
  EXPECT_EQ(lens_get(k, P{a0, Fin3{2}}), a0);
  EXPECT_EQ(lens_set(k, P{a0, Fin3{2}}, a1), (P{a1, Fin3{2}}));
}

TEST(Lens, VlensToKlensOfFst) {
  auto const s = vlens_to_klens(fst_lens<Fin2, Fin2, Fin3>())(P{a1, Fin3{1}});
  EXPECT_EQ(s.pos, a1);
  EXPECT_EQ(s.peek(a0), (P{a0, Fin3{1}}));
}

TEST(Lens, FstAtIdentityAndConst) {
  auto const v = fst_lens<Fin2, Fin2, Fin3>();
  EXPECT_EQ(v.apply(Identity{}, [](Fin2 a) { return Fin2{1 - a.value}; }, P{a0, Fin3{2}}), (P{a1, Fin3{2}}));
  EXPECT_EQ(v.apply(ConstList<Fin2>{}, singleton, P{a1, Fin3{0}}).items, bits({1}));
  auto const rebuilt = klens_to_vlens(vlens_to_klens(v));
  EXPECT_EQ(rebuilt.apply(ConstList<Fin2>{}, singleton, P{a1, Fin3{0}}).items, bits({1}));
}

TEST(Lens, FromGetSetRoundTrip) {
  auto const k = lens_from_get_set<P, P, Fin2, Fin2>([](P const& p) { return p.first; },
                                                     [](P const& p, Fin2 b) { return P{b, p.second}; });
  auto const js = product(fin<2>(), fin<3>());
  for (auto const& j : js.values()) {
    EXPECT_EQ(lens_get(k, j), j.first);
    for (auto b : fin<2>().values()) EXPECT_EQ(lens_set(k, j, b), (P{b, j.second}));
  }
  EXPECT_TRUE(all_passed(check_lens_laws("t", k, js, fin<2>())));
}

TEST(Lens, FstLawsAreExhaustive) {
  auto const js = product(fin<2>(), fin<3>());
  auto const rs = check_lens_laws("t", vlens_to_klens(fst_lens<Fin2, Fin2, Fin3>()), js, fin<2>());
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(find_law(rs, "get-put").cases, 6u);
  EXPECT_EQ(find_law(rs, "put-get").cases, 12u);
  EXPECT_EQ(find_law(rs, "put-put").cases, 24u);
  EXPECT_TRUE(all_passed(rs));
  for (auto const& r : rs) EXPECT_FALSE(r.sampled);
}

TEST(Lens, ProjectionCoalgebraPasses) {
  auto const js = product(fin<2>(), fin<3>());
  EXPECT_TRUE(all_passed(check_lens_coalgebra("t", projection_klens<Fin2, Fin2, Fin3>(), js, fin<2>())));
}

TEST(Lens, SetIgnoringIsFlagged) {
  auto const js = product(fin<2>(), fin<3>());
  auto const bad = set_ignoring_lens<P, Fin2>([](P const& p) { return p.first; });
  auto const getset = find_law(check_lens_laws("t", bad, js, fin<2>()), "put-get");
  auto const coalg = find_law(check_lens_coalgebra("t", bad, js, fin<2>()), "comult-coalgebra");
  EXPECT_FALSE(getset.passed);
  EXPECT_FALSE(coalg.passed);
  EXPECT_EQ(getset.counterexample, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(getset.counterexample, coalg.counterexample);
}

TEST(Lens, IdentityRoundTrips) {
  auto const k = vlens_to_klens(identity_vlens<Fin2, Fin2>());
  for (auto a : fin<2>().values()) {
    EXPECT_EQ(lens_get(k, a), a);
    EXPECT_EQ(lens_set(k, a, Fin2{1 - a.value}), Fin2{1 - a.value});
  }
}

TEST(Lens, ComposeFstFst) {
  using Inner = std::pair<Fin2, Fin2>;
  using Outer = std::pair<Inner, Fin2>;
  auto const v = vlens_compose(fst_lens<Inner, Inner, Fin2>(), fst_lens<Fin2, Fin2, Fin2>());
  auto const k = vlens_to_klens(v);
  Outer const j{{a1, a0}, a0};
  EXPECT_EQ(lens_get(k, j), a1);
  EXPECT_EQ(lens_set(k, j, a0), (Outer{{a0, a0}, a0}));
  auto const with_identity = vlens_compose(identity_vlens<Outer, Outer>(), v);
  EXPECT_EQ(lens_get(vlens_to_klens(with_identity), j), a1);
}

// ---------------------------------------------------------------------------
// Partial lenses and traversals

TEST(Partial, ElementFocus) {
  auto const v = element_vpartial<Fin2>(1);
  auto const k = vpartial_to_kpartial(v);
  EXPECT_TRUE(k(bits({0})).is_unit());
  auto const s = k(bits({0, 1}));
  ASSERT_FALSE(s.is_unit());
  EXPECT_EQ(s.store_value().pos, a1);
  EXPECT_EQ(s.store_value().peek(a0), bits({0, 0}));
}

TEST(Traversal, DimensionIsLength) {
  auto const k = vtrav_to_ktrav(list_traversal<Fin2>());
  for (auto const& xs : lists(fin<2>(), 3).values()) {
    auto const r = k(xs);
    EXPECT_EQ(r.dim(), xs.size());
    EXPECT_EQ(r.positions(), xs);
  }
}

TEST(Traversal, IdentityIsMap) {
  auto const flip = [](Fin2 a) { return Fin2{1 - a.value}; };
  EXPECT_EQ(list_traversal<Fin2>().apply(Identity{}, flip, bits({0, 0, 1})), bits({1, 1, 0}));
}

TEST(Traversal, RoundTripOnShortLists) {
  auto const k2 = fin<2>();
  auto const t = vtrav_to_ktrav(list_traversal<Fin2>());
  auto const back = vtrav_to_ktrav(ktrav_to_vtrav(t));
  auto const fl = FunListFunctor<Fin2, Fin2>(k2, k2, 3);
  auto const ls = lists(k2, 3);
  for (auto const& xs : ls.values()) EXPECT_TRUE(fl.eq_at(ls, back(xs), t(xs)));
}

TEST(Traversal, CollectAtConst) {
  EXPECT_EQ(collect<Fin2>(ConstList<Fin2>{}, singleton, bits({0, 1})).items, bits({0, 1}));
  auto const none = collect<Fin2>(Identity{}, [](Fin2 a) { return a; }, std::vector<Fin2>{});
  EXPECT_TRUE(none.empty());
}

// ---------------------------------------------------------------------------
// Traversable instances and containers

TEST(Traversable, CoalgebraOfList) {
  auto const r = coalgebra_from_traverse<Fin2>(list_traversable(), bits({1, 0}));
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_EQ(r.positions(), bits({1, 0}));
  EXPECT_EQ(r.peek(bits({0, 0})), bits({0, 0}));
  EXPECT_EQ(coalgebra_from_traverse<Fin2>(list_traversable(), std::vector<Fin2>{}).dim(), 0u);
}

TEST(Traversable, PairAlwaysHasDimensionTwo) {
  for (auto const& p : pair_traversable().carrier(fin<2>(), 0).values())
    EXPECT_EQ(coalgebra_from_traverse<Fin2>(pair_traversable(), p).dim(), 2u);
}

TEST(Traversable, ListAtConstIsContents) {
  for (auto const& xs : lists(fin<2>(), 3).values()) {
    EXPECT_EQ(list_traversable().traverse<Fin2>(ConstList<Fin2>{}, singleton, xs).items, xs);
    auto const t = [](auto const& x) { return coalgebra_from_traverse<Fin2>(list_traversable(), x); };
    EXPECT_EQ(traverse_from_coalgebra(t, ConstList<Fin2>{}, singleton, xs).items, xs);
    EXPECT_EQ(traverse_from_coalgebra(t, Identity{}, [](Fin2 a) { return a; }, xs), xs);
  }
}

TEST(Container, ListPhiAndPsi) {
  auto const c = to_container(list_traversable(), bits({0, 1}));
  EXPECT_EQ(c.shape.size(), 2u);
  EXPECT_EQ(c.contents, bits({0, 1}));
  EXPECT_EQ(from_container(list_traversable(), c), bits({0, 1}));
  ContainerValue<std::vector<Unit>, Fin2> const empty{{}, {}};
  EXPECT_TRUE(from_container(list_traversable(), empty).empty());
  ContainerValue<std::vector<Unit>, Fin2> const wrong{{Unit{}}, {}};
  EXPECT_THROW(from_container(list_traversable(), wrong), DimensionMismatch);
}

TEST(Container, PairPhi) {
  auto const c = to_container(pair_traversable(), std::array<Fin2, 2>{a1, a0});
  EXPECT_EQ(c.contents, bits({1, 0}));
  EXPECT_EQ(pair_traversable().render(c.shape), "(*,*)");
}

TEST(Container, ListRoundTrips) {
  auto const l4 = lists(fin<2>(), 4);
  for (auto const& xs : l4.values()) EXPECT_EQ(from_container(list_traversable(), to_container(list_traversable(), xs)), xs);
  auto const container = extract_container(list_traversable(), 3);
  auto const cs = container_values(container, fin<2>());
  EXPECT_EQ(cs.size(), 15u);
  for (auto const& c : cs.values())
    EXPECT_TRUE(cs.eq(to_container(list_traversable(), from_container(list_traversable(), c)), c));
}

TEST(Container, ListShapesAndArities) {
  auto const c = extract_container(list_traversable(), 3);
  ASSERT_EQ(c.shapes.size(), 4u);
  for (std::size_t n = 0; n < 4; ++n) {
    EXPECT_EQ(c.arity(c.shapes[n]), n);
    EXPECT_EQ(list_traversable().render(c.shapes[n]).size(), n == 0 ? 2u : 2 * n + 1);
  }
}

TEST(Container, VecHasOneShape) {
  auto const c = extract_container(vec_traversable(2), 0);
  ASSERT_EQ(c.shapes.size(), 1u);
  EXPECT_EQ(c.arity(c.shapes[0]), 2u);
}

TEST(Container, TreeArityIsNodeCount) {
  auto const t = tree_traversable();
  auto const c = extract_container(t, 3);
  // Catalan numbers: 1 + 1 + 2 + 5 shapes.
  ASSERT_EQ(c.shapes.size(), 9u);
  for (auto const& s : c.shapes.values()) EXPECT_EQ(c.arity(s), s.size());
  EXPECT_EQ(t.carrier(fin<2>(), 7).size(), 64979u);
}

TEST(Container, CanonicalTraverseAtIdentityMapsContents) {
  auto const c = to_container(list_traversable(), bits({0, 1, 1}));
  auto const r = canonical_traverse<Fin2>(Identity{}, [](Fin2 a) { return Fin2{1 - a.value}; }, c);
  EXPECT_EQ(r.contents, bits({1, 0, 0}));
  EXPECT_EQ(r.shape.size(), 3u);
}

TEST(Container, CommutationAtState) {
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const fb = state.carrier(k);
  auto const shapes = lists(unit_type(), 3);
  auto const ceq = [shapes, k](auto const& a, auto const& b) { return container_eq(shapes, k, a, b); };
  auto const phi = [](auto const& x) { return to_container(list_traversable(), x); };
  for (auto const& xs : lists(k, 3).values())
    for (std::size_t i = 0; i < function_count(k, fb); ++i) {
      auto const f = function_at(k, fb, i);
      auto const lhs = state.map(phi, list_traversable().traverse<Fin2>(state, f, xs));
      EXPECT_TRUE(state.eq_at(ceq, lhs, canonical_traverse<Fin2>(state, f, phi(xs))));
    }
}

// ---------------------------------------------------------------------------
// Law harness on small instances

TEST(Harness, IdentityPassesEverything) {
  auto const k = fin<2>();
  EXPECT_TRUE(all_passed(check_functor_laws("t", Identity{}, k)));
  EXPECT_TRUE(all_passed(check_pointed_laws("t", Identity{}, k)));
  EXPECT_TRUE(all_passed(check_applicative_laws("t", Identity{}, k)));
  EXPECT_TRUE(all_passed(check_monad_laws("t", Identity{}, k)));
}

TEST(Harness, SwappedSplitFailsAssociativity) {
  auto const k = fin<2>();
  auto const r = find_law(check_applicative_laws("t", FunListSwappedSplit<Fin2, Fin2>(k, k, 2), k), "associativity");
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.counterexample.empty());
}

TEST(Harness, ReversedRebuildFailsUnity) {
  auto const k = fin<2>();
  auto const rs = check_traversable_laws("t", ReversingListTraversable{}, k, 3, std::tuple<>{}, std::tuple<>{});
  EXPECT_FALSE(find_law(rs, "unity").passed);
}

TEST(Harness, ListTraversalIsLinear) {
  auto const k = fin<2>();
  auto const z = make_zoo();
  EXPECT_TRUE(all_passed(check_linearity_unity("t", list_traversal<Fin2>(), lists(k, 2), k, std::tuple(compose(z.state, z.state)))));
}

TEST(Harness, IdentityMorphismPasses) {
  auto const k = fin<2>();
  ConstList<Fin2> const c(k, 2);
  EXPECT_TRUE(all_passed(check_applicative_morphism("t", [](auto const& x) { return x; }, c, c, k)));
}

TEST(Harness, CounitMorphismPasses) {
  auto const k = fin<2>();
  FunListFunctor<Fin2, Fin2> const fl(k, k, 1);
  EXPECT_TRUE(all_passed(check_applicative_morphism("t", [](auto const& r) { return funlist_counit(r); }, fl, Identity{}, k)));
}
