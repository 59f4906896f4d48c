#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "fintype.hpp"
#include "pstore.hpp"

namespace polyrep {

// ---------------------------------------------------------------------------
// Free pointed functor on PStore: (A x (B -> X)) + X

template <class A, class B, class X>
class FreePointedPStore {
 public:
  static FreePointedPStore unit(X x) { return FreePointedPStore(std::in_place_index<0>, std::move(x)); }
  static FreePointedPStore store(PStore<A, B, X> s) {
    return FreePointedPStore(std::in_place_index<1>, std::move(s));
  }

  bool is_unit() const noexcept { return rep_.index() == 0; }
  X const& unit_value() const { return std::get<0>(rep_); }
  PStore<A, B, X> const& store_value() const { return std::get<1>(rep_); }

 private:
  template <std::size_t I, class T>
  FreePointedPStore(std::in_place_index_t<I> tag, T&& v) : rep_(tag, std::forward<T>(v)) {}

  std::variant<X, PStore<A, B, X>> rep_;
};

template <class A, class B, class X>
FreePointedPStore<A, B, X> freepointed_point(X x) {
  return FreePointedPStore<A, B, X>::unit(std::move(x));
}

template <class A, class B, class X, class H>
FreePointedPStore<A, B, result_t<H, X>> freepointed_map(H const& h, FreePointedPStore<A, B, X> const& v) {
  using R = FreePointedPStore<A, B, result_t<H, X>>;
  if (v.is_unit()) return R::unit(h(v.unit_value()));
  return R::store(pstore_map(h, v.store_value()));
}

/// unit x |-> point_F x;  store (a, k) |-> F(k)(f a)
template <PointedWitness F, class Fn, class A, class B, class X>
auto run_freepointed(F const& pointed, Fn const& f, FreePointedPStore<A, B, X> const& v) {
  if (v.is_unit()) return pointed.pure(v.unit_value());
  auto const& s = v.store_value();
  return pointed.map(s.peek, f(s.pos));
}

template <class A, class X>
X freepointed_counit(FreePointedPStore<A, A, X> const& v) {
  return v.is_unit() ? v.unit_value() : pstore_counit(v.store_value());
}

template <class B, class A, class C, class X>
FreePointedPStore<A, B, FreePointedPStore<B, C, X>> freepointed_comult(FreePointedPStore<A, C, X> const& v) {
  using Inner = FreePointedPStore<B, C, X>;
  using Outer = FreePointedPStore<A, B, Inner>;
  if (v.is_unit()) return Outer::unit(Inner::unit(v.unit_value()));
  auto const& s = v.store_value();
  return Outer::store({s.pos, [peek = s.peek](B const& y) { return Inner::store({y, peek}); }});
}

template <class A, class B>
struct FreePointedFunctor {
  using category = pointed_tag;
  template <class X>
  using apply = FreePointedPStore<A, B, X>;

  std::optional<FinType<A>> positions;
  std::optional<FinType<B>> arguments;

  FreePointedFunctor() = default;
  FreePointedFunctor(FinType<A> as, FinType<B> bs) : positions(std::move(as)), arguments(std::move(bs)) {}

  std::string name() const { return "FreePointed"; }

  template <class H, class X>
  auto map(H const& h, FreePointedPStore<A, B, X> const& v) const {
    return freepointed_map(h, v);
  }
  template <class X>
  FreePointedPStore<A, B, X> pure(X const& x) const {
    return FreePointedPStore<A, B, X>::unit(x);
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, FreePointedPStore<A, B, X> const& v, FreePointedPStore<A, B, X> const& w) const {
    if (!positions || !arguments) throw MissingCarrier(name());
    if (v.is_unit() != w.is_unit()) return false;
    if (v.is_unit()) return eqx(v.unit_value(), w.unit_value());
    return pstore_eq(*positions, *arguments, eqx, v.store_value(), w.store_value());
  }

  /// Units first, then stores.
  template <class X>
  FinType<FreePointedPStore<A, B, X>> carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    if (!positions || !arguments) throw MissingCarrier(name());
    std::vector<FreePointedPStore<A, B, X>> vs;
    for (auto const& x : xs.values()) vs.push_back(FreePointedPStore<A, B, X>::unit(x));
    for (auto const& s : PStoreFunctor<A, B>(*positions, *arguments).carrier(xs, budget).values())
      vs.push_back(FreePointedPStore<A, B, X>::store(s));
    return FinType<FreePointedPStore<A, B, X>>(
        "FreePointed(" + xs.name() + ")", std::move(vs),
        [self = *this, xs](auto const& v, auto const& w) { return self.eq_at(xs, v, w); });
  }
};

// ---------------------------------------------------------------------------
// Free monad over a signature functor: Unit x | Branch (Sig (Free Sig x))

template <class Sig, class X>
class Free {
 public:
  using Node = typename Sig::template apply<Free>;

  static Free unit(X x) { return Free(std::in_place_index<0>, std::move(x)); }
  static Free branch(Node node) {
    return Free(std::in_place_index<1>, std::make_shared<const Node>(std::move(node)));
  }

  bool is_unit() const noexcept { return rep_.index() == 0; }
  X const& value() const { return std::get<0>(rep_); }
  Node const& node() const { return *std::get<1>(rep_); }

 private:
  template <std::size_t I, class T>
  Free(std::in_place_index_t<I> tag, T&& v) : rep_(tag, std::forward<T>(v)) {}

  std::variant<X, std::shared_ptr<const Node>> rep_;
};

template <FunctorWitness Sig>
struct FreeMonad {
  using category = monad_tag;
  template <class X>
  using apply = Free<Sig, X>;

  Sig signature{};
  std::size_t max_depth = 1;

  std::string name() const { return "Free"; }

  template <class X>
  Free<Sig, X> pure(X const& x) const {
    return Free<Sig, X>::unit(x);
  }

  /// Branch xs >>= k = Branch (fmap (>>= k) xs)
  template <class X, class K>
  result_t<K, X> bind(Free<Sig, X> const& m, K const& k) const {
    using R = result_t<K, X>;
    if (m.is_unit()) return k(m.value());
    return R::branch(signature.map([self = *this, k](Free<Sig, X> const& sub) { return self.bind(sub, k); },
                                   m.node()));
  }

  template <class H, class X>
  Free<Sig, result_t<H, X>> map(H const& h, Free<Sig, X> const& m) const {
    using Y = result_t<H, X>;
    return bind(m, [h](X const& x) { return Free<Sig, Y>::unit(h(x)); });
  }

  template <class X, class Y>
  Free<Sig, std::pair<X, Y>> star(Free<Sig, X> const& a, Free<Sig, Y> const& b) const {
    return bind(a, [self = *this, b](X const& x) {
      return self.map([x](Y const& y) { return std::pair<X, Y>{x, y}; }, b);
    });
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, Free<Sig, X> const& a, Free<Sig, X> const& b) const {
    if (a.is_unit() != b.is_unit()) return false;
    if (a.is_unit()) return eqx(a.value(), b.value());
    return signature.eq_at([this, &eqx](Free<Sig, X> const& s, Free<Sig, X> const& t) { return eq_at(eqx, s, t); },
                           a.node(), b.node());
  }

  /// Trees of depth <= max_depth: units, then branches over shallower trees.
  template <class X>
  FinType<Free<Sig, X>> carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    return carrier_at_depth(xs, max_depth, budget);
  }

  template <class X>
  FinType<Free<Sig, X>> carrier_at_depth(FinType<X> const& xs, std::size_t depth,
                                         std::size_t budget = default_budget) const {
    std::vector<Free<Sig, X>> vs;
    for (auto const& x : xs.values()) vs.push_back(Free<Sig, X>::unit(x));
    if (depth > 0) {
      auto const shallower = carrier_at_depth(xs, depth - 1, budget);
      for (auto const& n : signature.carrier(shallower, budget).values()) vs.push_back(Free<Sig, X>::branch(n));
    }
    if (vs.size() > budget) throw BudgetExceeded("Free carrier", vs.size(), budget);
    return FinType<Free<Sig, X>>("Free(" + xs.name() + ")<=" + std::to_string(depth), std::move(vs),
                                 [self = *this, xs](auto const& a, auto const& b) { return self.eq_at(xs, a, b); });
  }
};

/// The generic effect of the single-operation signature A ~> B.
template <class B, class A>
Free<PStoreFunctor<A, B>, B> free_op(A a) {
  using T = Free<PStoreFunctor<A, B>, B>;
  return T::branch(PStore<A, B, T>{std::move(a), [](B const& b) { return T::unit(b); }});
}

/// Folds a tree into M: units become returns, each node is handed to the
/// handler (a natural transformation Sig => M) and the result joined.
template <class Sig, class X, MonadWitness M, class H>
typename M::template apply<X> interpret(Free<Sig, X> const& m, M const& monad, H const& handler,
                                        Sig const& signature = Sig{}) {
  if (m.is_unit()) return monad.pure(m.value());
  auto inner = signature.map(
      [monad, handler, signature](Free<Sig, X> const& sub) { return interpret(sub, monad, handler, signature); },
      m.node());
  return monad.bind(handler(inner), [](auto const& mx) { return mx; });
}

// ---------------------------------------------------------------------------
// Church (final) encoding: a capability runnable at any monad once the
// operations are supplied.

template <class X, class Fn>
struct ChurchOp {
  using value_type = X;
  Fn capability;

  template <MonadWitness M, class Ops>
  typename M::template apply<X> run(M const& monad, Ops const& ops) const {
    return capability(monad, ops);
  }
};

template <class X, class Fn>
ChurchOp<X, Fn> church(Fn fn) {
  return {std::move(fn)};
}

template <class X>
auto church_return(X x) {
  return church<X>([x = std::move(x)](auto const& monad, auto const&) { return monad.pure(x); });
}

/// runOp (c >>= k) ops = runOp c ops >>= \x. runOp (k x) ops
template <class X, class Fn, class K>
auto church_bind(ChurchOp<X, Fn> c, K k) {
  using Y = typename result_t<K, X>::value_type;
  return church<Y>([c = std::move(c), k = std::move(k)](auto const& monad, auto const& ops) {
    return monad.bind(c.run(monad, ops), [k, monad, ops](X const& x) { return k(x).run(monad, ops); });
  });
}

template <class X, class Fn, class H>
auto church_map(H h, ChurchOp<X, Fn> c) {
  using Y = result_t<H, X>;
  return church<Y>([c = std::move(c), h = std::move(h)](auto const& monad, auto const& ops) {
    return monad.map(h, c.run(monad, ops));
  });
}

/// Free (PStore a b) x  ->  forall m. (a -> m b) -> m x
template <class A, class B, class X>
auto to_church(Free<PStoreFunctor<A, B>, X> t) {
  return church<X>([t = std::move(t)](auto const& monad, auto const& op) { return interpret(t, monad, alpha(monad, op)); });
}

/// Runs the capability at the free monad with the generic effect. This and
/// to_church are inverse only for capabilities that treat every monad
/// uniformly; one that inspects the monad it is given is not caught here.
template <class A, class B, class X, class Fn>
Free<PStoreFunctor<A, B>, X> from_church(ChurchOp<X, Fn> const& c) {
  return c.run(FreeMonad<PStoreFunctor<A, B>>{}, [](A const& a) { return free_op<B>(a); });
}

/// The single operation of the A ~> B signature, in Church form.
template <class B, class A>
auto church_op(A a) {
  return church<B>([a = std::move(a)](auto const&, auto const& op) { return op(a); });
}

// Operation records. Each field is one operation; a record for a monad M is
// what a Church capability needs to run at M.

template <class E, class M>
struct ExcOp {
  std::function<typename M::template apply<Empty>(E const&)> throw_error;
};

template <class R, class M>
struct EnvOp {
  std::function<typename M::template apply<R>(Unit)> ask;
};

template <class E>
auto exc_throw(E e) {
  return church<Empty>([e = std::move(e)](auto const&, auto const& ops) { return ops.throw_error(e); });
}

template <class R>
auto env_ask() {
  return church<R>([](auto const&, auto const& ops) { return ops.ask(Unit{}); });
}

}  // namespace polyrep
