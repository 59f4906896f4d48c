#include <gtest/gtest.h>

#include "polyrep/polyrep.hpp"

using namespace polyrep;

namespace {

Fin2 const a0{0}, a1{1};
auto const swap2 = [](Fin2 b) { return Fin2{1 - b.value}; };

}  // namespace

// ---------------------------------------------------------------------------
// Finite carriers

TEST(FinType, FunctionCounts) {
  EXPECT_EQ(function_count(fin<2>(), fin<3>()), 9u);
  EXPECT_EQ(enumerate_functions(fin<2>(), fin<3>()).size(), 9u);
  auto const none = FinType<Fin2>("Empty", {}, [](Fin2, Fin2) { return true; });
  EXPECT_EQ(enumerate_functions(none, fin<3>()).size(), 1u);
}

TEST(FinType, FunctionsIncludeIdAndSwap) {
  auto const k = fin<2>();
  auto const fs = function_type(k, k);
  EXPECT_TRUE(fs.contains(TabFun<Fin2, Fin2>(k, {a0, a1})));
  EXPECT_TRUE(fs.contains(TabFun<Fin2, Fin2>(k, {a1, a0})));
  EXPECT_EQ(fs.index(TabFun<Fin2, Fin2>(k, {a1, a0})), 2u);
}

TEST(FinType, ListsAndVectors) {
  auto const k = fin<2>();
  EXPECT_EQ(lists(k, 4).size(), 31u);
  EXPECT_EQ(vectors(k, 3).size(), 8u);
  auto const v = vectors(k, 3);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v.index(v[i]), i);
  EXPECT_EQ(product(k, fin<3>()).size(), 6u);
}

TEST(FinType, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_functions(fin<3>(), fin<3>(), 10), BudgetExceeded);
  EXPECT_THROW(vectors(fin<2>(), 5, 16), BudgetExceeded);
}

// ---------------------------------------------------------------------------
// PStore

TEST(PStore, MapExamples) {
  auto const k = fin<2>();
  PStore<Fin2, Fin2, Fin2> const s{a1, [](Fin2 b) { return b; }};
  EXPECT_TRUE(pstore_eq(k, k, k, pstore_map([](Fin2 x) { return x; }, s), s));
  auto const c = pstore_map([](Fin2) { return Fin3{2}; }, s);
  EXPECT_EQ(c.pos, a1);
  EXPECT_EQ(c.peek(a0), Fin3{2});
  EXPECT_EQ(c.peek(a1), Fin3{2});
  auto const swapped = pstore_map(swap2, s);
  EXPECT_EQ(swapped.pos, a1);
  EXPECT_EQ(swapped.peek(a0), a1);
  EXPECT_EQ(swapped.peek(a1), a0);
}

TEST(PStore, CounitExamples) {
  EXPECT_EQ(pstore_counit(PStore<Fin2, Fin2, Fin2>{a0, [](Fin2 b) { return b; }}), a0);
  EXPECT_EQ(pstore_counit(PStore<Fin2, Fin2, Fin3>{a1, [](Fin2) { return Fin3{1}; }}), Fin3{1});
  auto const succ = [](Fin3 a) { return Fin3{(a.value + 1) % 3}; };
  EXPECT_EQ(pstore_counit(PStore<Fin3, Fin3, Fin3>{Fin3{2}, succ}), Fin3{0});
}

TEST(PStore, CoassociativityOnAllEightStores) {
  auto const k = fin<2>();
  auto const stores = PStoreFunctor<Fin2, Fin2>(k, k).carrier(k);
  ASSERT_EQ(stores.size(), 8u);
  for (auto const& s : stores.values()) {
    auto const lhs = pstore_map([](auto const& t) { return pstore_comult<Fin2, Fin2, Fin2>(t); },
                                pstore_comult<Fin2, Fin2, Fin2>(s));
    auto const rhs = pstore_comult<Fin2, Fin2, Fin2>(pstore_comult<Fin2, Fin2, Fin2>(s));
    for (auto b : k.values())
      for (auto c : k.values()) {
        EXPECT_EQ(lhs.pos, rhs.pos);
        auto const l = lhs.peek(b).peek(c);
        auto const r = rhs.peek(b).peek(c);
        EXPECT_EQ(l.pos, r.pos);
        for (auto d : k.values()) EXPECT_EQ(l.peek(d), r.peek(d));
      }
  }
}

TEST(PStore, AlphaAtIdentityUnfolds) {
  auto const tau = alpha(Identity{}, [](Fin2 a) { return a; });
  EXPECT_EQ(tau(PStore<Fin2, Fin2, Fin3>{a1, [](Fin2 b) { return Fin3{b.value + 1}; }}), Fin3{2});
}

TEST(PStore, AlphaOfProbeIsIdentity) {
  auto const k = fin<2>();
  PStoreFunctor<Fin2, Fin2> const store(k, k);
  auto const tau = alpha(store, [](Fin2 a) { return PStore<Fin2, Fin2, Fin2>{a, [](Fin2 b) { return b; }}; });
  for (auto const& s : store.carrier(fin<3>()).values()) EXPECT_TRUE(store.eq_at(fin<3>(), tau(s), s));
}

TEST(PStore, AlphaInverseRoundTripsAtState) {
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const fb = state.carrier(k);
  for (std::size_t i = 0; i < function_count(k, fb); ++i) {
    auto const f = function_at(k, fb, i);
    auto const back = alpha_inv<Fin2, Fin2>(alpha(state, f));
    for (auto a : k.values()) EXPECT_TRUE(state.eq_at(k, back(a), f(a)));
  }
}

// ---------------------------------------------------------------------------
// FunList

TEST(FunList, PureAndWrap) {
  auto const p = funlist_pure<Fin2, Fin2>(Fin3{2});
  EXPECT_EQ(p.dim(), 0u);
  EXPECT_EQ(p.peek({}), Fin3{2});
  auto const w = funlist_wrap<Fin2, Fin2>(a1);
  EXPECT_EQ(w.dim(), 1u);
  EXPECT_EQ(funlist_counit(w), a1);
  EXPECT_THROW(w.peek({}), DimensionMismatch);
}

TEST(FunList, StarConcatenatesPositions) {
  auto const r = funlist_star(funlist_wrap<Fin2, Fin2>(a0), funlist_wrap<Fin2, Fin2>(a1));
  ASSERT_EQ(r.dim(), 2u);
  EXPECT_EQ(r.positions(), (std::vector<Fin2>{a0, a1}));
  EXPECT_EQ(r.peek({a1, a0}), (std::pair{a1, a0}));
  auto const s = funlist_star(r, funlist_pure<Fin2, Fin2>(Fin3{0}));
  EXPECT_EQ(s.dim(), 2u);
}

TEST(FunList, MoreExtendsByOne) {
  auto const id = funlist_pure<Fin2, Fin2>(std::function<Fin2(Fin2 const&)>([](Fin2 const& b) { return b; }));
  auto const m = funlist_more(id, a1);
  auto const k = fin<2>();
  EXPECT_EQ(m.dim(), 1u);
  EXPECT_TRUE((FunListFunctor<Fin2, Fin2>(k, k, 1).eq_at(k, m, funlist_wrap<Fin2, Fin2>(a1))));
}

TEST(FunList, EmbedPStoreIsWrapAtProbe) {
  auto const k = fin<2>();
  auto const e = embed_pstore(PStore<Fin2, Fin2, Fin2>{a0, [](Fin2 b) { return b; }});
  EXPECT_TRUE((FunListFunctor<Fin2, Fin2>(k, k, 1).eq_at(k, e, funlist_wrap<Fin2, Fin2>(a0))));
}

TEST(FunList, CarrierSizeAtDimensionTwo) {
  // Sum over n of 2^n positions times 2^(2^n) peeks: 2 + 8 + 64.
  auto const k = fin<2>();
  EXPECT_EQ((FunListFunctor<Fin2, Fin2>(k, k, 2).carrier(k).size()), 74u);
}

TEST(FunList, RunAtConstCollectsPositions) {
  auto const k = fin<2>();
  auto const fl = FunListFunctor<Fin2, Fin2>(k, k, 2);
  ConstList<Fin2> const c(k, 2);
  auto const singleton = [](Fin2 a) { return Const<Fin2, Fin2>{{a}}; };
  for (auto const& r : fl.carrier(k).values()) EXPECT_EQ(run_funlist(c, singleton, r).items, r.positions());
}

TEST(FunList, RunAtIdentityIsPeekOfPositions) {
  auto const k = fin<2>();
  for (auto const& r : FunListFunctor<Fin2, Fin2>(k, k, 2).carrier(k).values()) {
    std::vector<Fin2> flipped;
    for (auto a : r.positions()) flipped.push_back(swap2(a));
    EXPECT_EQ(run_funlist(Identity{}, swap2, r), r.peek(flipped));
  }
}

TEST(FunList, RunWithWrapIsIdentity) {
  auto const k = fin<2>();
  auto const fl = FunListFunctor<Fin2, Fin2>(k, k, 2);
  for (auto const& r : fl.carrier(k).values())
    EXPECT_TRUE(fl.eq_at(k, run_funlist(fl, [](Fin2 a) { return funlist_wrap<Fin2, Fin2>(a); }, r), r));
}

TEST(FunList, ComonadLawsAtDimensionTwo) {
  auto const k = fin<2>();
  auto const fl = FunListFunctor<Fin2, Fin2>(k, k, 2);
  for (auto const& r : fl.carrier(k).values()) {
    auto const w = funlist_comult<Fin2>(r);
    EXPECT_TRUE(fl.eq_at(k, funlist_counit(w), r));
    EXPECT_TRUE(fl.eq_at(k, funlist_map([](auto const& x) { return funlist_counit(x); }, w), r));
  }
  EXPECT_EQ(funlist_comult<Fin2>(funlist_wrap<Fin2, Fin2>(a0)).dim(), 1u);
}

// ---------------------------------------------------------------------------
// Free pointed functor, free monad, Church encoding

TEST(FreePointed, UnitCase) {
  auto const p = freepointed_point<Fin2, Fin2>(Fin3{1});
  EXPECT_TRUE(p.is_unit());
  EXPECT_EQ(run_freepointed(Identity{}, swap2, p), Fin3{1});
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const f = [state](Fin2 a) { return state.pure(a); };
  EXPECT_TRUE(state.eq_at(fin<3>(), run_freepointed(state, f, p), state.pure(Fin3{1})));
}

TEST(FreePointed, StoreCaseAppliesF) {
  auto const v = FreePointedPStore<Fin2, Fin2, Fin2>::store({a0, [](Fin2 b) { return b; }});
  EXPECT_EQ(run_freepointed(Identity{}, swap2, v), a1);
}

TEST(FreeMonad, CarrierSizes) {
  auto const k = fin<2>();
  PStoreFunctor<Fin2, Fin2> const sig(k, k);
  EXPECT_EQ((FreeMonad<PStoreFunctor<Fin2, Fin2>>{sig, 1}.carrier(k).size()), 10u);
  EXPECT_EQ((FreeMonad<PStoreFunctor<Fin2, Fin2>>{sig, 2}.carrier(k).size()), 202u);
}

TEST(FreeMonad, BindOnUnitAppliesContinuation) {
  auto const k = fin<2>();
  FreeMonad<PStoreFunctor<Fin2, Fin2>> const m{PStoreFunctor<Fin2, Fin2>(k, k), 1};
  auto const cont = [](Fin2 x) { return free_op<Fin2>(swap2(x)); };
  EXPECT_TRUE(m.eq_at(k, m.bind(m.pure(a0), cont), cont(a0)));
  auto const op = free_op<Fin2>(a1);
  EXPECT_TRUE(m.eq_at(k, m.bind(op, [m](Fin2 x) { return m.pure(x); }), op));
}

TEST(FreeMonad, InterpretIntoStateByHand) {
  // op a replaces the state by a and returns the old state.
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const exchange = [](Fin2 a) { return StateFn<Fin2, Fin2>{[a](Fin2 s) { return std::pair{s, a}; }}; };
  auto const handler = alpha(state, exchange);
  using T = Free<PStoreFunctor<Fin2, Fin2>, Fin2>;
  auto const tree = T::branch({a1, [](Fin2 b) { return T::branch({swap2(b), [](Fin2 c) { return T::unit(c); }}); }});
  for (auto s : k.values()) {
    auto const [x, s2] = interpret(tree, state, handler).run(s);
    // first: old state s, state becomes 1; second: op(swap s) returns 1.
    EXPECT_EQ(x, a1);
    EXPECT_EQ(s2, swap2(s));
  }
}

TEST(Church, RoundTripsOnAllDepthTwoTrees) {
  auto const k = fin<2>();
  FreeMonad<PStoreFunctor<Fin2, Fin2>> const m{PStoreFunctor<Fin2, Fin2>(k, k), 2};
  auto const trees = m.carrier(k);
  for (auto const& t : trees.values()) EXPECT_TRUE(m.eq_at(k, from_church<Fin2, Fin2>(to_church(t)), t));
  auto const u = Free<PStoreFunctor<Fin2, Fin2>, Fin2>::unit(a1);
  EXPECT_TRUE(m.eq_at(k, from_church<Fin2, Fin2>(to_church(u)), u));
}

TEST(Church, ReturnAtIdentity) {
  EXPECT_EQ(church_return(Fin3{2}).run(Identity{}, [](Fin2 a) { return a; }), Fin3{2});
}

TEST(Church, BindSequencesOperations) {
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const exchange = [](Fin2 a) { return StateFn<Fin2, Fin2>{[a](Fin2 s) { return std::pair{s, a}; }}; };
  auto const prog = church_bind(church_op<Fin2>(a1), [](Fin2 old) { return church_op<Fin2>(old); });
  for (auto s : k.values()) {
    auto const [x, s2] = prog.run(state, exchange).run(s);
    EXPECT_EQ(x, a1);
    EXPECT_EQ(s2, s);
  }
}

TEST(Effects, ThrowAtEither) {
  using M = EitherMonad<int>;
  M const m;
  ExcOp<int, M> const ops{[m](int const& e) { return m.fail<Empty>(e); }};
  auto const r = exc_throw(42).run(m, ops);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.error(), 42);
}

TEST(Effects, AskAtReader) {
  using M = ReaderMonad<Fin3>;
  M const m{fin<3>()};
  EnvOp<Fin3, M> const ops{[m](Unit) { return m.ask(); }};
  EXPECT_EQ(env_ask<Fin3>().run(m, ops).run(Fin3{2}), Fin3{2});
  auto const twice = church_bind(env_ask<Fin3>(), [](Fin3 r1) {
    return church_map([r1](Fin3 r2) { return std::pair{r1, r2}; }, env_ask<Fin3>());
  });
  EXPECT_EQ(twice.run(m, ops).run(Fin3{1}), (std::pair{Fin3{1}, Fin3{1}}));
}

TEST(Representation, ApplicativeFunctionalOfTwoReads) {
  auto const h = [](auto const& F, auto const& g) {
    return F.map([](auto p) { return Fin3{p.first.value + p.second.value}; }, F.star(g(a0), g(a1)));
  };
  FunList<Fin2, Fin2, Fin3> const r = applicative_phi<Fin2, Fin2>(h);
  EXPECT_EQ(r.dim(), 2u);
  EXPECT_EQ(r.positions(), (std::vector<Fin2>{a0, a1}));
  EXPECT_EQ(r.peek({a1, a1}), Fin3{2});
  auto const back = applicative_phi_inv(r);
  auto const k = fin<2>();
  State<Fin2> const state(k);
  auto const tick = [](Fin2 a) { return StateFn<Fin2, Fin2>{[a](Fin2 s) { return std::pair{Fin2{a.value ^ s.value}, a}; }}; };
  EXPECT_TRUE(state.eq_at(fin<3>(), back(state, tick), h(state, tick)));
}
