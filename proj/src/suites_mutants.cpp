#include "polyrep/container.hpp"
#include "polyrep/roundtrip.hpp"
#include "polyrep/suites.hpp"
#include "polyrep/zoo.hpp"

// Deliberately broken instances. Each must be caught by the law it breaks,
// with a concrete counterexample; otherwise that law check is vacuous.

namespace polyrep::suites {

namespace {

/// map reverses the recorded items: breaks map-identity.
struct ReversingConst : ConstList<Fin2> {
  using ConstList<Fin2>::ConstList;
  std::string name() const { return "Const[reversing-map]"; }
  template <class H, class X>
  Const<Fin2, result_t<H, X>> map(H const&, Const<Fin2, X> const& c) const {
    return {std::vector<Fin2>(c.items.rbegin(), c.items.rend())};
  }
};

/// pure inspects its argument's type: not parametric, breaks pure-naturality.
struct PureZero : FreePointedFunctor<Fin2, Fin2> {
  using FreePointedFunctor<Fin2, Fin2>::FreePointedFunctor;
  std::string name() const { return "FreePointed[pure-zero]"; }
  template <class X>
  FreePointedPStore<Fin2, Fin2, X> pure(X const& x) const {
    if constexpr (std::is_same_v<X, Fin2>) return freepointed_point<Fin2, Fin2>(Fin2{0});
    else return freepointed_point<Fin2, Fin2>(x);
  }
};

/// bind runs the continuation from the initial state: breaks right-identity.
struct ForgetfulState : State<Fin2> {
  using State<Fin2>::State;
  std::string name() const { return "State[forgetful-bind]"; }
  template <class X, class K>
  result_t<K, X> bind(StateFn<Fin2, X> const& m, K const& k) const {
    return {[run = m.run, k](Fin2 const& s) { return k(run(s).first).run(s); }};
  }
};

/// ConstList morphism appending one item: breaks the unit square.
auto extra_point = [](auto const& c) {
  auto items = c.items;
  items.push_back(Fin2{0});
  return std::decay_t<decltype(c)>{items};
};

CheckResult target(std::string const& mutant, std::vector<CheckResult> const& rs, std::string const& law) {
  return expect_failure(mutant, find_law(rs, law));
}

}  // namespace

std::vector<CheckResult> mutants(CheckConfig const& cfg) {
  auto const k = fin<2>();
  auto const k3 = fin<3>();
  auto const z = make_zoo();
  std::vector<CheckResult> out;

  out.push_back(target("funlist[swapped-split]",
                       check_applicative_laws("funlist", FunListSwappedSplit<Fin2, Fin2>(k, k, 2), k, cfg),
                       "associativity"));
  out.push_back(target("const[reversing-map]", check_functor_laws("const", ReversingConst(k, 2), k, cfg),
                       "map-identity"));
  out.push_back(target("freepointed[pure-zero]", check_pointed_laws("freepointed", PureZero(k, k), k, cfg),
                       "pure-naturality"));
  out.push_back(target("state[forgetful-bind]", check_monad_laws("state", ForgetfulState(k), k, cfg),
                       "right-identity"));

  PStoreFunctor<Fin2, Fin2> const store(k, k);
  auto const stale_comult = [](auto const& s) {
    using S = std::decay_t<decltype(s)>;
    return PStore<Fin2, Fin2, S>{s.pos, [s](Fin2 const&) { return s; }};
  };
  out.push_back(target("pstore[stale-comult]",
                       check_comonad_laws(
                           "pstore", store, k, [](auto const& s) { return pstore_counit(s); }, stale_comult, cfg),
                       "counit-after-comult"));

  // Lenses on Fin2 x Fin3 focusing the first component. Both formulations
  // must flag the same inputs.
  auto const js = product(k, k3);
  auto const get = [](std::pair<Fin2, Fin3> const& p) { return p.first; };
  using J = std::pair<Fin2, Fin3>;
  auto const ignoring = set_ignoring_lens<J, Fin2>(get);
  auto const ignoring_getset = find_law(check_lens_laws("lens", ignoring, js, k, cfg), "put-get");
  auto const ignoring_coalg = find_law(check_lens_coalgebra("lens", ignoring, js, k, cfg), "comult-coalgebra");
  out.push_back(expect_failure("lens[set-ignoring]", ignoring_getset));
  out.push_back(expect_failure("lens[set-ignoring]", ignoring_coalg));
  out.push_back(for_all("mutants", "lens[set-ignoring]:same-counterexample", {1}, cfg, [&](auto const&) {
    return !ignoring_getset.counterexample.empty() && ignoring_getset.counterexample == ignoring_coalg.counterexample;
  }));
  auto const constant = constant_set_lens<J, Fin2>(get, J{Fin2{0}, Fin3{0}});
  auto const constant_getset = find_law(check_lens_laws("lens", constant, js, k, cfg), "get-put");
  auto const constant_coalg = find_law(check_lens_coalgebra("lens", constant, js, k, cfg), "counit-coalgebra");
  out.push_back(expect_failure("lens[constant-set]", constant_getset));
  out.push_back(expect_failure("lens[constant-set]", constant_coalg));
  out.push_back(for_all("mutants", "lens[constant-set]:same-counterexample", {1}, cfg, [&](auto const&) {
    return !constant_getset.counterexample.empty() && constant_getset.counterexample == constant_coalg.counterexample;
  }));
  out.push_back(target("lens[set-ignoring]",
                       check_linearity_unity("vlens", klens_to_vlens(ignoring), js, k,
                                             std::tuple(compose(z.store, z.store)), cfg),
                       "linearity[PStore.PStore]"));
  out.push_back(target("lens[constant-set]",
                       check_linearity_unity("vlens", klens_to_vlens(constant), js, k, std::tuple<>{}, cfg), "unity"));

  auto const no_morphisms = std::tuple<>{};
  out.push_back(target("traversable[reversed-rebuild]",
                       check_traversable_laws("list", ReversingListTraversable{}, k, 3, std::tuple<>{}, no_morphisms,
                                              cfg),
                       "unity"));
  out.push_back(target("traversable[duplicated-effects]",
                       check_traversable_laws("list", DuplicatingListTraversable{}, k, 3,
                                              std::tuple(compose(z.state, z.constant)), no_morphisms, cfg),
                       "linearity[State.Const[list]]"));

  ConstList<Fin2> const short_const(k, 2);
  ConstList<Fin2> const long_const(k, 8);
  out.push_back(target("morphism[extra-point]",
                       check_applicative_morphism("const", extra_point, short_const, long_const, k, cfg),
                       "morphism-unit"));

  // phi_inv with the continuation precomposed with negation: not inverse to phi.
  auto const c3 = fin<3>();
  auto const reps = PStoreFunctor<Fin2, Fin2>(k, k).carrier(c3);
  out.push_back(expect_failure("roundtrip[twisted-inverse]",
                               for_all("roundtrip-functor", "phi-after-inverse", {reps.size()}, cfg, [&](auto const& i) {
                                 auto const& r = reps[i[0]];
                                 PStore<Fin2, Fin2, Fin3> const twisted{
                                     r.pos, [peek = r.peek](Fin2 b) { return peek(Fin2{1 - b.value}); }};
                                 return pstore_eq(k, k, c3, functor_phi<Fin2, Fin2>(functor_phi_inv(twisted)), r);
                               })));

  // Church bind running the first computation twice.
  State<Fin2> const state(k);
  auto const sx = state.carrier(k);
  auto const trees = FreeMonad<PStoreFunctor<Fin2, Fin2>>{store, 1}.carrier(k);
  out.push_back(expect_failure(
      "church[bind-twice]",
      for_all("church", "right-identity[State]", {trees.size(), function_count(k, sx)}, cfg, [&](auto const& i) {
        auto const op = function_at(k, sx, i[1]);
        auto const c = to_church(trees[i[0]]);
        auto const twice = polyrep::church<Fin2>([c](auto const& m, auto const& ops) {
          return m.bind(c.run(m, ops), [m, c, ops](Fin2) { return c.run(m, ops); });
        });
        return state.eq_at(k, twice.run(state, op), c.run(state, op));
      })));

  // Psi reading the contents back to front.
  auto const lists4 = lists(k, 4);
  out.push_back(expect_failure(
      "container[reversed-psi]",
      for_all("container", "psi-after-phi[list]", {lists4.size()}, cfg, [&](auto const& i) {
        auto c = to_container(list_traversable(), lists4[i[0]]);
        std::reverse(c.contents.begin(), c.contents.end());
        return lists4.eq(from_container(list_traversable(), c), lists4[i[0]]);
      })));
  return out;
}

}  // namespace polyrep::suites
