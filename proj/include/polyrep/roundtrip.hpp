#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "free.hpp"
#include "funlist.hpp"
#include "laws.hpp"
#include "pstore.hpp"
#include "zoo.hpp"

// Representation theorems as executable round trips. A second-order
// functional is a generic callable h(F, g) with g : A -> F B, returning
// F C; phi runs it at the representing witness with the generic probe, and
// phi_inv turns a representation value back into a functional.

namespace polyrep {

// Functor case: A x (B -> C).
template <class A, class B, class C>
auto functor_phi_inv(PStore<A, B, C> r) {
  return [r = std::move(r)](auto const& functor, auto const& g) { return functor.map(r.peek, g(r.pos)); };
}

template <class A, class B, class H>
auto functor_phi(H const& h) {
  return h(PStoreFunctor<A, B>{}, [](A const& a) { return PStore<A, B, B>{a, [](B const& b) { return b; }}; });
}

// Pointed case: (A x (B -> C)) + C.
template <class A, class B, class C>
auto pointed_phi_inv(FreePointedPStore<A, B, C> r) {
  return [r = std::move(r)](auto const& pointed, auto const& g) { return run_freepointed(pointed, g, r); };
}

template <class A, class B, class H>
auto pointed_phi(H const& h) {
  return h(FreePointedFunctor<A, B>{}, [](A const& a) {
    return FreePointedPStore<A, B, B>::store({a, [](B const& b) { return b; }});
  });
}

// Applicative case: sum over n of A^n x (B^n -> C).
template <class A, class B, class C>
auto applicative_phi_inv(FunList<A, B, C> r) {
  return [r = std::move(r)](auto const& app, auto const& g) { return run_funlist(app, g, r); };
}

template <class A, class B, class H>
auto applicative_phi(H const& h) {
  return h(FunListFunctor<A, B>{}, [](A const& a) { return funlist_wrap<B>(a); });
}

/// Calls fn on the i-th element of a tuple.
template <class Tuple, class Fn>
bool visit_at(Tuple const& t, std::size_t i, Fn const& fn) {
  bool result = false;
  std::size_t k = 0;
  std::apply([&](auto const&... e) { ((k++ == i ? (result = fn(e), 0) : 0), ...); }, t);
  return result;
}

/// phi_inv(phi(h)) = h at every witness in `witnesses`, for every tabulated
/// probe g : A -> F B, over the handcrafted functionals and phi_inv(r) for
/// each r in reps.
template <class A, class B, class C, class Witnesses, class Hand, class R, class Phi, class PhiInv>
std::vector<CheckResult> check_inverse_after_phi(std::string const& suite, Witnesses const& witnesses,
                                                 Hand const& handcrafted, FinType<R> const& reps,
                                                 FinType<A> const& as, FinType<B> const& bs, FinType<C> const& cs,
                                                 Phi const& phi, PhiInv const& phi_inv, CheckConfig const& cfg) {
  constexpr std::size_t n_hand = std::tuple_size_v<Hand>;
  std::vector<CheckResult> out;
  auto one = [&](auto const& w) {
    auto const fb = w.carrier(bs, cfg.budget);
    return for_all(suite, "inverse-after-phi[" + w.name() + "]", {n_hand + reps.size(), function_count(as, fb)}, cfg,
                   [&](auto const& i) {
                     auto const g = function_at(as, fb, i[1]);
                     auto agree = [&](auto const& h) { return w.eq_at(cs, h(w, g), phi_inv(phi(h))(w, g)); };
                     if (i[0] < n_hand) return visit_at(handcrafted, i[0], agree);
                     return agree(phi_inv(reps[i[0] - n_hand]));
                   });
  };
  std::apply([&](auto const&... w) { (out.push_back(one(w)), ...); }, witnesses);
  return out;
}

namespace handcrafted {

inline constexpr Fin2 a0{0};
inline constexpr Fin2 a1{1};

inline auto functor_functionals() {
  return std::tuple([](auto const& f, auto const& g) { return f.map([](Fin2 b) { return Fin3{b.value}; }, g(a0)); },
                    [](auto const& f, auto const& g) { return f.map([](Fin2 b) { return Fin3{2 - b.value}; }, g(a1)); },
                    [](auto const& f, auto const& g) { return f.map([](Fin2) { return Fin3{2}; }, g(a0)); });
}

inline auto pointed_functionals() {
  return std::tuple_cat(functor_functionals(),
                        std::tuple([](auto const& f, auto const&) { return f.pure(Fin3{1}); }));
}

inline auto applicative_functionals() {
  return std::tuple_cat(
      pointed_functionals(),
      std::tuple(
          [](auto const& f, auto const& g) {
            return f.map([](std::pair<Fin2, Fin2> p) { return Fin3{p.first.value + p.second.value}; },
                         f.star(g(a0), g(a1)));
          },
          [](auto const& f, auto const& g) {
            return f.map([](std::pair<Fin2, Fin2> p) { return Fin3{(2 * p.first.value + p.second.value) % 3}; },
                         f.star(g(a1), g(a1)));
          },
          [](auto const& f, auto const& g) {
            return f.map([](auto const& p) { return Fin3{p.first.first.value * p.second.value}; },
                         f.star(f.star(g(a1), g(a0)), g(a1)));
          }));
}

}  // namespace handcrafted

inline std::vector<CheckResult> roundtrip_functor_case(CheckConfig const& cfg = {}) {
  auto const k = fin<2>();
  auto const c = fin<3>();
  auto const reps = PStoreFunctor<Fin2, Fin2>(k, k).carrier(c);
  std::vector<CheckResult> out;
  out.push_back(for_all("roundtrip-functor", "phi-after-inverse", {reps.size()}, cfg, [&](auto const& i) {
    return pstore_eq(k, k, c, functor_phi<Fin2, Fin2>(functor_phi_inv(reps[i[0]])), reps[i[0]]);
  }));
  append(out, check_inverse_after_phi(
                  "roundtrip-functor", zoo_functors(make_zoo()), handcrafted::functor_functionals(), reps, k, k, c,
                  [](auto const& h) { return functor_phi<Fin2, Fin2>(h); },
                  [](auto const& r) { return functor_phi_inv(r); }, cfg));
  return out;
}

inline std::vector<CheckResult> roundtrip_pointed_case(CheckConfig const& cfg = {}) {
  auto const k = fin<2>();
  auto const c = fin<3>();
  FreePointedFunctor<Fin2, Fin2> const w(k, k);
  auto const reps = w.carrier(c);
  std::vector<CheckResult> out;
  out.push_back(for_all("roundtrip-pointed", "phi-after-inverse", {reps.size()}, cfg, [&](auto const& i) {
    return w.eq_at(c, pointed_phi<Fin2, Fin2>(pointed_phi_inv(reps[i[0]])), reps[i[0]]);
  }));
  append(out, check_inverse_after_phi(
                  "roundtrip-pointed", zoo_pointed(make_zoo()), handcrafted::pointed_functionals(), reps, k, k, c,
                  [](auto const& h) { return pointed_phi<Fin2, Fin2>(h); },
                  [](auto const& r) { return pointed_phi_inv(r); }, cfg));
  return out;
}

/// All representation values of dim <= 2 round-trip exactly; the other
/// direction is exhaustive over dim <= 1 and sampled at dim 2.
inline std::vector<CheckResult> roundtrip_applicative_case(CheckConfig const& cfg = {}) {
  auto const k = fin<2>();
  auto const c = fin<3>();
  FunListFunctor<Fin2, Fin2> const w(k, k, 2);
  auto const reps = w.carrier(c);
  std::vector<FunList<Fin2, Fin2, Fin3>> low, high;
  for (auto const& r : reps.values()) (r.dim() <= 1 ? low : high).push_back(r);
  auto const eq = [w, c](auto const& a, auto const& b) { return w.eq_at(c, a, b); };
  FinType<FunList<Fin2, Fin2, Fin3>> const low_reps("FunList(Fin3)<=1", low, eq);
  FinType<FunList<Fin2, Fin2, Fin3>> const dim2_reps("FunList(Fin3)=2", high, eq);

  std::vector<CheckResult> out;
  out.push_back(for_all("roundtrip-applicative", "phi-after-inverse", {reps.size()}, cfg, [&](auto const& i) {
    return w.eq_at(c, applicative_phi<Fin2, Fin2>(applicative_phi_inv(reps[i[0]])), reps[i[0]]);
  }));
  auto const phi = [](auto const& h) { return applicative_phi<Fin2, Fin2>(h); };
  auto const phi_inv = [](auto const& r) { return applicative_phi_inv(r); };
  auto const zoo = zoo_applicatives(make_zoo());
  append(out, check_inverse_after_phi("roundtrip-applicative", zoo, handcrafted::applicative_functionals(), low_reps,
                                      k, k, c, phi, phi_inv, cfg));
  CheckConfig sampled = cfg;
  sampled.always_sample = true;
  append(out, check_inverse_after_phi("roundtrip-applicative-dim2", zoo, std::tuple<>{}, dim2_reps, k, k, c, phi,
                                      phi_inv, sampled));
  return out;
}

namespace handcrafted {

/// Small Church programs over the single operation Fin2 ~> Fin2.
inline auto church_programs() {
  return std::tuple(church_return(Fin2{1}), church_op<Fin2>(a0),
                    church_bind(church_op<Fin2>(a1), [](Fin2 b) { return church_op<Fin2>(b); }),
                    church_map([](Fin2 b) { return Fin2{1 - b.value}; }, church_op<Fin2>(a0)),
                    church_bind(church_op<Fin2>(a0), [](Fin2 b) {
                      return church_bind(church_op<Fin2>(Fin2{1 - b.value}), [b](Fin2 d) {
                        return church_return(Fin2{b.value * d.value});
                      });
                    }));
}

}  // namespace handcrafted

/// from_church . to_church = id structurally on every tree of depth <= 2;
/// to_church . from_church is observed at Identity, State and Free.
inline std::vector<CheckResult> roundtrip_monad_case(CheckConfig const& cfg = {}) {
  auto const k = fin<2>();
  using Sig = PStoreFunctor<Fin2, Fin2>;
  FreeMonad<Sig> const free2{Sig(k, k), 2};
  auto const trees = free2.carrier(k);
  std::vector<CheckResult> out;
  out.push_back(for_all("roundtrip-monad", "from-after-to", {trees.size()}, cfg, [&](auto const& i) {
    return free2.eq_at(k, from_church<Fin2, Fin2>(to_church(trees[i[0]])), trees[i[0]]);
  }));

  auto const programs = handcrafted::church_programs();
  constexpr std::size_t n_hand = std::tuple_size_v<decltype(programs)>;
  auto const z = make_zoo();
  auto observe = [&](auto const& m) {
    auto const mb = m.carrier(k, cfg.budget);
    return for_all("roundtrip-monad", "to-after-from[" + m.name() + "]", {n_hand + trees.size(), function_count(k, mb)},
                   cfg, [&](auto const& i) {
                     auto const op = function_at(k, mb, i[1]);
                     auto agree = [&](auto const& c) {
                       return m.eq_at(k, c.run(m, op), to_church(from_church<Fin2, Fin2>(c)).run(m, op));
                     };
                     if (i[0] < n_hand) return visit_at(programs, i[0], agree);
                     return agree(to_church(trees[i[0] - n_hand]));
                   });
  };
  std::apply([&](auto const&... m) { (out.push_back(observe(m)), ...); }, zoo_monads(z));
  return out;
}

}  // namespace polyrep
