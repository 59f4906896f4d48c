#include "polyrep/suites.hpp"
#include "polyrep/zoo.hpp"

namespace polyrep::suites {

namespace {

/// alpha_inv(alpha(F, f)) = f, and alpha(F, f) is natural, for every
/// tabulated f : A -> F B.
template <class A, class B, class F>
std::vector<CheckResult> check_alpha(std::string const& suite, F const& functor, FinType<A> const& as,
                                     FinType<B> const& bs, CheckConfig const& cfg) {
  auto const fb = functor.carrier(bs, cfg.budget);
  auto const nf = function_count(as, fb);
  auto const stores = PStoreFunctor<A, B>(as, bs).carrier(bs, cfg.budget);
  auto const tag = "[" + functor.name() + "," + as.name() + "]";
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "alpha-inverse" + tag, {nf}, cfg, [&](auto const& i) {
    auto const f = function_at(as, fb, i[0]);
    return extensionally_equal(as, lift_eq(functor, bs), alpha_inv<A, B>(alpha(functor, f)), f);
  }));
  out.push_back(
      for_all(suite, "alpha-naturality" + tag, {nf, stores.size(), function_count(bs, bs)}, cfg, [&](auto const& i) {
        auto const tau = alpha(functor, function_at(as, fb, i[0]));
        auto const h = function_at(bs, bs, i[2]);
        auto const& s = stores[i[1]];
        return functor.eq_at(bs, tau(pstore_map(h, s)), functor.map(h, tau(s)));
      }));
  return out;
}

/// run_funlist(F, f, -) extends f and is an applicative morphism FunList => F.
template <class F>
std::vector<CheckResult> check_run_funlist(std::string const& suite, F const& app,
                                           FunListFunctor<Fin2, Fin2> const& source, CheckConfig const& cfg) {
  auto const k = fin<2>();
  auto const fb = app.carrier(k, cfg.budget);
  auto const nf = function_count(k, fb);
  auto const fx = source.carrier(k, cfg.budget);
  auto const tag = "[" + app.name() + "]";
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "run-extends" + tag, {nf, k.size()}, cfg, [&](auto const& i) {
    auto const f = function_at(k, fb, i[0]);
    auto const& a = k[i[1]];
    return app.eq_at(k, run_funlist(app, f, funlist_wrap<Fin2>(a)), f(a));
  }));
  out.push_back(for_all(suite, "run-unit" + tag, {nf, k.size()}, cfg, [&](auto const& i) {
    auto const f = function_at(k, fb, i[0]);
    auto const& x = k[i[1]];
    return app.eq_at(k, run_funlist(app, f, funlist_pure<Fin2, Fin2>(x)), app.pure(x));
  }));
  out.push_back(for_all(suite, "run-multiplication" + tag, {nf, fx.size(), fx.size()}, cfg, [&](auto const& i) {
    auto const f = function_at(k, fb, i[0]);
    auto const& r = fx[i[1]];
    auto const& s = fx[i[2]];
    return app.eq_at(pair_eq(k, k), run_funlist(app, f, funlist_star(r, s)),
                     app.star(run_funlist(app, f, r), run_funlist(app, f, s)));
  }));
  return out;
}


}  // namespace

std::vector<CheckResult> pstore(CheckConfig const& cfg) {
  auto const k2 = fin<2>();
  auto const k3 = fin<3>();
  PStoreFunctor<Fin2, Fin2> const s2(k2, k2);
  PStoreFunctor<Fin3, Fin3> const s3(k3, k3);
  auto const counit = [](auto const& s) { return pstore_counit(s); };
  auto const comult = [](auto const& s) { return pstore_comult<std::decay_t<decltype(s.pos)>>(s); };

  std::vector<CheckResult> out;
  append(out, check_functor_laws("pstore[Fin2]", s2, k2, cfg));
  append(out, check_functor_laws("pstore[Fin3]", s3, k3, cfg));
  append(out, check_comonad_laws("pstore[Fin2]", s2, k2, counit, comult, cfg));
  append(out, check_comonad_laws("pstore[Fin3]", s3, k2, counit, comult, cfg));

  auto const stores = s2.carrier(k3, cfg.budget);
  out.push_back(for_all("pstore", "alpha-of-probe", {stores.size()}, cfg, [&](auto const& i) {
    auto const probe = [](Fin2 a) { return PStore<Fin2, Fin2, Fin2>{a, identity}; };
    auto const& s = stores[i[0]];
    return s2.eq_at(k3, alpha(s2, probe)(s), s);
  }));
  std::apply([&](auto const&... f) { (append(out, check_alpha("pstore", f, k2, k2, cfg)), ...); },
             zoo_functors(make_zoo()));
  std::apply([&](auto const&... f) { (append(out, check_alpha("pstore", f, k3, k3, cfg)), ...); },
             std::tuple(Identity{}, State<Fin3>(k3), PStoreFunctor<Fin2, Fin2>(k2, k2), ConstList<Fin2>(k2, 2)));
  return out;
}

std::vector<CheckResult> funlist(CheckConfig const& cfg) {
  auto const k = fin<2>();
  FunListFunctor<Fin2, Fin2> const w(k, k, 2);
  FunListFunctor<Fin2, Fin2> const w1(k, k, 1);
  std::vector<CheckResult> out;
  append(out, check_functor_laws("funlist", w, k, cfg));
  append(out, check_pointed_laws("funlist", w, k, cfg));
  append(out, check_applicative_laws("funlist", w, k, cfg));
  append(out, check_comonad_laws(
                  "funlist", w, k, [](auto const& r) { return funlist_counit(r); },
                  [](auto const& r) { return funlist_comult<Fin2>(r); }, cfg));

  auto const fx = w.carrier(k, cfg.budget);
  out.push_back(for_all("funlist", "run-wrap-identity", {fx.size()}, cfg, [&](auto const& i) {
    return w.eq_at(k, run_funlist(w, [](Fin2 a) { return funlist_wrap<Fin2>(a); }, fx[i[0]]), fx[i[0]]);
  }));
  auto const stores = PStoreFunctor<Fin2, Fin2>(k, k).carrier(k);
  out.push_back(for_all("funlist", "embed-dimension-one", {stores.size()}, cfg, [&](auto const& i) {
    auto const r = embed_pstore(stores[i[0]]);
    return r.dim() == 1 && w.eq_at(k, r, funlist_map(stores[i[0]].peek, funlist_wrap<Fin2>(stores[i[0]].pos)));
  }));
  std::apply([&](auto const&... f) { (append(out, check_run_funlist("funlist", f, w1, cfg)), ...); },
             zoo_applicatives(make_zoo()));

  auto counit = [](auto const& r) { return funlist_counit(r); };
  for (auto r : check_applicative_morphism("funlist", counit, w, Identity{}, k, cfg)) {
    r.law += "[counit]";
    out.push_back(std::move(r));
  }
  ConstList<Fin2> const positions_target(k, 4);
  auto positions = [](auto const& r) {
    using C = Const<Fin2, std::decay_t<decltype(r.peek(std::vector<Fin2>{}))>>;
    return C{r.positions()};
  };
  for (auto r : check_applicative_morphism("funlist", positions, w, positions_target, k, cfg)) {
    r.law += "[positions]";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> freepointed(CheckConfig const& cfg) {
  auto const k = fin<2>();
  FreePointedFunctor<Fin2, Fin2> const w(k, k);
  std::vector<CheckResult> out;
  append(out, check_functor_laws("freepointed", w, k, cfg));
  append(out, check_pointed_laws("freepointed", w, k, cfg));
  append(out, check_comonad_laws(
                  "freepointed", w, k, [](auto const& v) { return freepointed_counit(v); },
                  [](auto const& v) { return freepointed_comult<Fin2>(v); }, cfg));
  return out;
}

std::vector<CheckResult> free_monad(CheckConfig const& cfg) {
  auto const k = fin<2>();
  using Sig = PStoreFunctor<Fin2, Fin2>;
  FreeMonad<Sig> const free2{Sig(k, k), 2};
  auto const trees = free2.carrier(k, cfg.budget);
  auto const shallow = free2.carrier_at_depth(k, 1, cfg.budget);
  std::vector<CheckResult> out;
  append(out, check_monad_laws("free", free2, k, trees, shallow, cfg));
  append(out, check_applicative_laws("free", FreeMonad<Sig>{Sig(k, k), 1}, k, cfg));

  State<Fin2> const state(k);
  auto const sx = state.carrier(k);
  auto const nops = function_count(k, sx);
  auto const nk = function_count(k, shallow);
  auto run = [&](auto const& t, std::size_t op) {
    return interpret(t, state, alpha(state, function_at(k, sx, op)), free2.signature);
  };
  out.push_back(for_all("free", "interpret-op[State]", {k.size(), nops}, cfg, [&](auto const& i) {
    return state.eq_at(k, run(free_op<Fin2>(k[i[0]]), i[1]), function_at(k, sx, i[1])(k[i[0]]));
  }));
  out.push_back(for_all("free", "interpret-return[State]", {k.size(), nops}, cfg, [&](auto const& i) {
    return state.eq_at(k, run(free2.pure(k[i[0]]), i[1]), state.pure(k[i[0]]));
  }));
  out.push_back(for_all("free", "interpret-bind[State]", {trees.size(), nk, nops}, cfg, [&](auto const& i) {
    auto const kont = function_at(k, shallow, i[1]);
    auto const lhs = run(free2.bind(trees[i[0]], kont), i[2]);
    auto const rhs = state.bind(run(trees[i[0]], i[2]), [&](Fin2 x) { return run(kont(x), i[2]); });
    return state.eq_at(k, lhs, rhs);
  }));
  return out;
}

std::vector<CheckResult> church(CheckConfig const& cfg) {
  auto const k = fin<2>();
  using Sig = PStoreFunctor<Fin2, Fin2>;
  FreeMonad<Sig> const free2{Sig(k, k), 2};
  FreeMonad<Sig> const free1{Sig(k, k), 1};
  auto const trees = free2.carrier(k, cfg.budget);
  auto const shallow = free1.carrier(k, cfg.budget);
  auto const nk = function_count(k, shallow);
  State<Fin2> const state(k);
  auto const sx = state.carrier(k);
  auto const nops = function_count(k, sx);
  auto const church_k = [&](std::size_t idx) {
    return [kont = function_at(k, shallow, idx)](Fin2 x) { return to_church(kont(x)); };
  };

  std::vector<CheckResult> out;
  out.push_back(for_all("church", "left-identity[State]", {k.size(), nk, nops}, cfg, [&](auto const& i) {
    auto const op = function_at(k, sx, i[2]);
    auto const kont = church_k(i[1]);
    auto const& x = k[i[0]];
    return state.eq_at(k, church_bind(church_return(x), kont).run(state, op), kont(x).run(state, op));
  }));
  out.push_back(for_all("church", "right-identity[State]", {trees.size(), nops}, cfg, [&](auto const& i) {
    auto const op = function_at(k, sx, i[1]);
    auto const c = to_church(trees[i[0]]);
    return state.eq_at(k, church_bind(c, [](Fin2 x) { return church_return(x); }).run(state, op), c.run(state, op));
  }));
  out.push_back(for_all("church", "associativity[State]", {trees.size(), nk, nk, nops}, cfg, [&](auto const& i) {
    auto const op = function_at(k, sx, i[3]);
    auto const c = to_church(trees[i[0]]);
    auto const k1 = church_k(i[1]);
    auto const k2 = church_k(i[2]);
    auto const lhs = church_bind(church_bind(c, k1), k2).run(state, op);
    auto const rhs = church_bind(c, [k1, k2](Fin2 x) { return church_bind(k1(x), k2); }).run(state, op);
    return state.eq_at(k, lhs, rhs);
  }));
  auto const ops_free = free1.carrier(k, cfg.budget);
  out.push_back(for_all("church", "right-identity[Free]", {trees.size(), function_count(k, ops_free)}, cfg,
                        [&](auto const& i) {
                          auto const op = function_at(k, ops_free, i[1]);
                          auto const c = to_church(trees[i[0]]);
                          return free2.eq_at(k, church_bind(c, [](Fin2 x) { return church_return(x); }).run(free2, op),
                                             c.run(free2, op));
                        }));

  EitherMonad<Fin2> const either;
  out.push_back(for_all("church", "throw-at-Either", {k.size()}, cfg, [&](auto const& i) {
    ExcOp<Fin2, EitherMonad<Fin2>> const ops{[&](Fin2 e) { return either.fail<Empty>(e); }};
    auto const program = church_bind(church_return(Unit{}), [e = k[i[0]]](Unit) { return exc_throw(e); });
    auto const r = program.run(either, ops);
    return r.failed() && r.error() == k[i[0]];
  }));
  ReaderMonad<Fin2> const reader{k};
  out.push_back(for_all("church", "ask-at-Reader", {k.size()}, cfg, [&](auto const&) {
    EnvOp<Fin2, ReaderMonad<Fin2>> const ops{[&](Unit) { return reader.ask(); }};
    auto const program = church_map([](Fin2 r) { return Fin2{1 - r.value}; }, env_ask<Fin2>());
    auto const r = program.run(reader, ops);
    return extensionally_equal(k, k, r.run, [](Fin2 e) { return Fin2{1 - e.value}; });
  }));
  return out;
}

}  // namespace polyrep::suites
