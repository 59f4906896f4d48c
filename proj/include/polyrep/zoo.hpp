#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "free.hpp"
#include "funlist.hpp"
#include "laws.hpp"
#include "pstore.hpp"
#include "witnesses.hpp"

// The fixed family of witnesses at which capabilities are observed. All
// parameter carriers are Fin2; the bounds keep every carrier over Fin2
// small enough to enumerate functions into it.

namespace polyrep {

struct Zoo {
  using K = Fin2;
  using Store = PStoreFunctor<K, K>;

  Identity identity;
  ConstList<K> constant;
  Store store;
  FreePointedFunctor<K, K> free_pointed;
  FunListFunctor<K, K> funlist;
  FreeMonad<Store> free;
  State<K> state;
  Compose<State<K>, ConstList<K>> state_const;
  Compose<FunListFunctor<K, K>, ConstList<K>> funlist_const;
};

inline Zoo make_zoo() {
  auto const k = fin<2>();
  Zoo::Store const store(k, k);
  FunListFunctor<Fin2, Fin2> const funlist(k, k, 1);
  ConstList<Fin2> const short_const(k, 1);
  return Zoo{Identity{},
             ConstList<Fin2>(k, 2),
             store,
             FreePointedFunctor<Fin2, Fin2>(k, k),
             funlist,
             FreeMonad<Zoo::Store>{store, 1},
             State<Fin2>(k),
             {State<Fin2>(k), short_const},
             {funlist, short_const}};
}

inline auto zoo_functors(Zoo const& z) {
  return std::tuple(z.identity, z.constant, z.store, z.free_pointed, z.funlist, z.free, z.state, z.state_const,
                    z.funlist_const);
}

inline auto zoo_pointed(Zoo const& z) {
  return std::tuple(z.identity, z.constant, z.free_pointed, z.funlist, z.free, z.state, z.state_const,
                    z.funlist_const);
}

inline auto zoo_applicatives(Zoo const& z) {
  return std::tuple(z.identity, z.constant, z.funlist, z.free, z.state, z.state_const, z.funlist_const);
}

inline auto zoo_monads(Zoo const& z) { return std::tuple(z.identity, z.free, z.state); }

/// Pairs (F, G) at which linearity is checked for lenses: any functors.
inline auto lens_pairs(Zoo const& z) {
  return std::tuple(compose(z.identity, z.constant), compose(z.store, z.identity), compose(z.constant, z.store),
                    compose(z.state, z.constant), compose(z.funlist, z.store), compose(z.free_pointed, z.constant));
}

/// Pairs at which linearity is checked for partial lenses: pointed functors.
inline auto pointed_pairs(Zoo const& z) {
  return std::tuple(compose(z.identity, z.constant), compose(z.free_pointed, z.identity),
                    compose(z.state, z.constant), compose(z.constant, z.free_pointed));
}

/// Pairs at which linearity is checked for traversals: applicatives.
inline auto applicative_pairs(Zoo const& z) {
  return std::tuple(compose(z.identity, z.constant), compose(z.constant, z.identity), compose(z.state, z.constant),
                    compose(z.funlist, z.constant), compose(z.free, z.constant), compose(z.funlist, z.state));
}

/// Each zoo member against the laws of its category.
inline std::vector<CheckResult> validate_zoo(Zoo const& z, CheckConfig const& cfg = {}) {
  auto const xs = fin<2>();
  std::vector<CheckResult> out;
  std::apply([&](auto const&... f) { (append(out, check_functor_laws("zoo/" + f.name(), f, xs, cfg)), ...); },
             zoo_functors(z));
  std::apply([&](auto const&... f) { (append(out, check_pointed_laws("zoo/" + f.name(), f, xs, cfg)), ...); },
             zoo_pointed(z));
  std::apply([&](auto const&... f) { (append(out, check_applicative_laws("zoo/" + f.name(), f, xs, cfg)), ...); },
             zoo_applicatives(z));
  std::apply([&](auto const&... f) { (append(out, check_monad_laws("zoo/" + f.name(), f, xs, cfg)), ...); },
             zoo_monads(z));
  return out;
}

}  // namespace polyrep
