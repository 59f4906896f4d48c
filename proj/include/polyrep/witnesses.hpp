#pragma once

#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "fintype.hpp"

// Concrete witnesses used throughout: Identity, Const over the list monoid,
// composition, and a handful of small monads (State, Either, Reader).
//
// Every witness exposes
//   template <class X> using apply;              the type F X
//   map(h, fx)                                   functor action
//   pure(x), star(fx, fy)                        pointed / applicative
//   bind(mx, k)                                  monad
//   eq_at(eq, fx, fy)                            equality at F X given equality at X
//   carrier(FinType<X>)                          a finite enumeration of F X values
// as far as its category allows.

namespace polyrep {

struct Identity {
  using category = monad_tag;
  template <class X>
  using apply = X;

  std::string name() const { return "Identity"; }

  template <class H, class X>
  auto map(H const& h, X const& x) const {
    return h(x);
  }
  template <class X>
  X pure(X const& x) const {
    return x;
  }
  template <class X, class Y>
  std::pair<X, Y> star(X const& x, Y const& y) const {
    return {x, y};
  }
  template <class X, class K>
  auto bind(X const& x, K const& k) const {
    return k(x);
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, X const& a, X const& b) const {
    return eqx(a, b);
  }
  template <class X>
  FinType<X> carrier(FinType<X> const& xs, std::size_t = default_budget) const {
    return xs;
  }
};

/// Const M X for the list monoid over E: a list that ignores X.
template <class E, class X>
struct Const {
  std::vector<E> items;
};

template <class E>
struct ConstList {
  using category = applicative_tag;
  template <class X>
  using apply = Const<E, X>;

  std::optional<FinType<E>> elements;
  std::size_t max_len = 2;

  ConstList() = default;
  ConstList(FinType<E> es, std::size_t len) : elements(std::move(es)), max_len(len) {}

  std::string name() const { return "Const[list]"; }

  template <class H, class X>
  Const<E, result_t<H, X>> map(H const&, Const<E, X> const& c) const {
    return {c.items};
  }
  template <class X>
  Const<E, X> pure(X const&) const {
    return {};
  }
  template <class X, class Y>
  Const<E, std::pair<X, Y>> star(Const<E, X> const& a, Const<E, Y> const& b) const {
    auto items = a.items;
    items.insert(items.end(), b.items.begin(), b.items.end());
    return {std::move(items)};
  }
  template <class EqX, class X>
  bool eq_at(EqX const&, Const<E, X> const& a, Const<E, X> const& b) const {
    if (elements) return vector_eq(*elements, a.items, b.items);
    return a.items == b.items;
  }
  template <class X>
  FinType<Const<E, X>> carrier(FinType<X> const&, std::size_t budget = default_budget) const {
    if (!elements) throw MissingCarrier(name());
    std::vector<Const<E, X>> vs;
    for (auto const& l : lists(*elements, max_len, budget).values()) vs.push_back({l});
    return FinType<Const<E, X>>("Const(" + elements->name() + ")", std::move(vs),
                                [self = *this](Const<E, X> const& a, Const<E, X> const& b) {
                                  return self.eq_at(std::equal_to<>{}, a, b);
                                });
  }
};

template <class F, class G>
using compose_category =
    std::conditional_t<ApplicativeWitness<F> && ApplicativeWitness<G>, applicative_tag,
                       std::conditional_t<PointedWitness<F> && PointedWitness<G>, pointed_tag,
                                          functor_tag>>;

/// (F . G) X = F (G X). Applicative when both components are.
template <FunctorWitness F, FunctorWitness G>
struct Compose {
  using category = compose_category<F, G>;
  template <class X>
  using apply = typename F::template apply<typename G::template apply<X>>;

  F outer;
  G inner;

  std::string name() const { return outer.name() + "." + inner.name(); }

  template <class H, class FGX>
  auto map(H const& h, FGX const& v) const {
    return outer.map([g = inner, h](auto const& gx) { return g.map(h, gx); }, v);
  }

  template <class X>
  auto pure(X const& x) const
    requires PointedWitness<F> && PointedWitness<G>
  {
    return outer.pure(inner.pure(x));
  }

  template <class FGX, class FGY>
  auto star(FGX const& a, FGY const& b) const
    requires ApplicativeWitness<F> && ApplicativeWitness<G>
  {
    return outer.map([g = inner](auto const& p) { return g.star(p.first, p.second); },
                     outer.star(a, b));
  }

  template <class EqX, class FGX>
  bool eq_at(EqX const& eqx, FGX const& a, FGX const& b) const {
    return outer.eq_at([this, &eqx](auto const& x, auto const& y) { return inner.eq_at(eqx, x, y); },
                       a, b);
  }

  template <class X>
  auto carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    return outer.carrier(inner.carrier(xs, budget), budget);
  }
};

template <class F, class G>
Compose<F, G> compose(F f, G g) {
  return {std::move(f), std::move(g)};
}

/// S -> (X, S)
template <class S, class X>
struct StateFn {
  std::function<std::pair<X, S>(S const&)> run;
};

template <class S>
struct State {
  using category = monad_tag;
  template <class X>
  using apply = StateFn<S, X>;

  std::optional<FinType<S>> states;

  State() = default;
  explicit State(FinType<S> ss) : states(std::move(ss)) {}

  std::string name() const { return "State"; }

  template <class X>
  StateFn<S, X> pure(X const& x) const {
    return {[x](S const& s) { return std::pair<X, S>{x, s}; }};
  }
  template <class H, class X>
  StateFn<S, result_t<H, X>> map(H const& h, StateFn<S, X> const& m) const {
    return {[h, run = m.run](S const& s) {
      auto [x, s2] = run(s);
      return std::pair<result_t<H, X>, S>{h(x), s2};
    }};
  }
  template <class X, class Y>
  StateFn<S, std::pair<X, Y>> star(StateFn<S, X> const& a, StateFn<S, Y> const& b) const {
    return {[ra = a.run, rb = b.run](S const& s) {
      auto [x, s1] = ra(s);
      auto [y, s2] = rb(s1);
      return std::pair<std::pair<X, Y>, S>{{x, y}, s2};
    }};
  }
  template <class X, class K>
  result_t<K, X> bind(StateFn<S, X> const& m, K const& k) const {
    return {[run = m.run, k](S const& s) {
      auto [x, s1] = run(s);
      return k(x).run(s1);
    }};
  }

  StateFn<S, S> get() const {
    return {[](S const& s) { return std::pair<S, S>{s, s}; }};
  }
  StateFn<S, Unit> put(S s) const {
    return {[s](S const&) { return std::pair<Unit, S>{Unit{}, s}; }};
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, StateFn<S, X> const& a, StateFn<S, X> const& b) const {
    if (!states) throw MissingCarrier(name());
    for (auto const& s : states->values()) {
      auto [x, sx] = a.run(s);
      auto [y, sy] = b.run(s);
      if (!eqx(x, y) || !states->eq(sx, sy)) return false;
    }
    return true;
  }

  template <class X>
  FinType<StateFn<S, X>> carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    if (!states) throw MissingCarrier(name());
    std::vector<StateFn<S, X>> vs;
    for (auto const& t : enumerate_functions(*states, product(xs, *states), budget))
      vs.push_back({t});
    return FinType<StateFn<S, X>>(
        "State(" + xs.name() + ")", std::move(vs),
        [self = *this, xs](StateFn<S, X> const& a, StateFn<S, X> const& b) {
          return self.eq_at(xs, a, b);
        });
  }
};

template <class E>
struct Failure {
  E error;
};

template <class E, class X>
struct Either {
  std::variant<Failure<E>, X> value;

  bool failed() const { return value.index() == 0; }
  E const& error() const { return std::get<0>(value).error; }
  X const& result() const { return std::get<1>(value); }
};

/// Exceptions: the first failure short-circuits.
template <class E>
struct EitherMonad {
  using category = monad_tag;
  template <class X>
  using apply = Either<E, X>;

  std::string name() const { return "Either"; }

  template <class X>
  Either<E, X> pure(X const& x) const {
    return {std::variant<Failure<E>, X>(std::in_place_index<1>, x)};
  }
  template <class X>
  Either<E, X> fail(E e) const {
    return {std::variant<Failure<E>, X>(std::in_place_index<0>, Failure<E>{std::move(e)})};
  }
  template <class X, class K>
  result_t<K, X> bind(Either<E, X> const& m, K const& k) const {
    using R = result_t<K, X>;
    if (m.failed()) return R{decltype(R::value)(std::in_place_index<0>, Failure<E>{m.error()})};
    return k(m.result());
  }
  template <class H, class X>
  Either<E, result_t<H, X>> map(H const& h, Either<E, X> const& m) const {
    return bind(m, [this, &h](X const& x) { return pure(h(x)); });
  }
  template <class X, class Y>
  Either<E, std::pair<X, Y>> star(Either<E, X> const& a, Either<E, Y> const& b) const {
    return bind(a, [this, &b](X const& x) {
      return bind(b, [this, &x](Y const& y) { return pure(std::pair<X, Y>{x, y}); });
    });
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, Either<E, X> const& a, Either<E, X> const& b) const {
    if (a.failed() != b.failed()) return false;
    if (a.failed()) return a.error() == b.error();
    return eqx(a.result(), b.result());
  }
};

/// R -> X
template <class R, class X>
struct ReaderFn {
  std::function<X(R const&)> run;
};

template <class R>
struct ReaderMonad {
  using category = monad_tag;
  template <class X>
  using apply = ReaderFn<R, X>;

  std::optional<FinType<R>> environments;

  std::string name() const { return "Reader"; }

  template <class X>
  ReaderFn<R, X> pure(X const& x) const {
    return {[x](R const&) { return x; }};
  }
  ReaderFn<R, R> ask() const {
    return {[](R const& r) { return r; }};
  }
  template <class X, class K>
  result_t<K, X> bind(ReaderFn<R, X> const& m, K const& k) const {
    return {[run = m.run, k](R const& r) { return k(run(r)).run(r); }};
  }
  template <class H, class X>
  ReaderFn<R, result_t<H, X>> map(H const& h, ReaderFn<R, X> const& m) const {
    return {[h, run = m.run](R const& r) { return h(run(r)); }};
  }
  template <class X, class Y>
  ReaderFn<R, std::pair<X, Y>> star(ReaderFn<R, X> const& a, ReaderFn<R, Y> const& b) const {
    return {[ra = a.run, rb = b.run](R const& r) { return std::pair<X, Y>{ra(r), rb(r)}; }};
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, ReaderFn<R, X> const& a, ReaderFn<R, X> const& b) const {
    if (!environments) throw MissingCarrier(name());
    return extensionally_equal(*environments, eqx, a.run, b.run);
  }
};

/// collect_n f (x1..xn) = f x1 * ... * f xn, left-nested and flattened into
/// a vector. The empty vector collects to pure().
template <class B, ApplicativeWitness F, class Fn, class A>
auto collect(F const& app, Fn const& f, std::vector<A> const& as) {
  auto acc = app.pure(std::vector<B>{});
  for (auto const& a : as) {
    acc = app.map(
        [](std::pair<std::vector<B>, B> const& p) {
          auto v = p.first;
          v.push_back(p.second);
          return v;
        },
        app.star(acc, f(a)));
  }
  return acc;
}

/// F's unit u : 1 -> F 1.
template <PointedWitness F>
auto unit_of(F const& f) {
  return f.pure(Unit{});
}

}  // namespace polyrep
