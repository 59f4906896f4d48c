#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "core.hpp"
#include "fintype.hpp"

namespace polyrep {

/// The parameterised store comonad R_{A,B} X = A x (B -> X): a stored
/// position together with a continuation from replacement values.
template <class A, class B, class X>
struct PStore {
  A pos;
  std::function<X(B const&)> peek;
};

template <class A, class B, class X, class H>
PStore<A, B, result_t<H, X>> pstore_map(H h, PStore<A, B, X> const& s) {
  return {s.pos, [h = std::move(h), peek = s.peek](B const& b) { return h(peek(b)); }};
}

template <class A, class X>
X pstore_counit(PStore<A, A, X> const& s) {
  return s.peek(s.pos);
}

/// delta (x, f) = (x, \y. (y, f)). The middle parameter B cannot be deduced.
template <class B, class A, class C, class X>
PStore<A, B, PStore<B, C, X>> pstore_comult(PStore<A, C, X> const& s) {
  return {s.pos, [peek = s.peek](B const& y) { return PStore<B, C, X>{y, peek}; }};
}

template <class A, class B, class X, class EqX>
bool pstore_eq(FinType<A> const& as, FinType<B> const& bs, EqX const& eqx, PStore<A, B, X> const& s,
               PStore<A, B, X> const& t) {
  if (!as.eq(s.pos, t.pos)) return false;
  for (auto const& b : bs.values())
    if (!eqx(s.peek(b), t.peek(b))) return false;
  return true;
}

/// Functor witness for PStore<A,B,->. The carriers are only needed for
/// equality and enumeration; running code can default-construct it.
template <class A, class B>
struct PStoreFunctor {
  using category = functor_tag;
  template <class X>
  using apply = PStore<A, B, X>;

  std::optional<FinType<A>> positions;
  std::optional<FinType<B>> arguments;

  PStoreFunctor() = default;
  PStoreFunctor(FinType<A> as, FinType<B> bs) : positions(std::move(as)), arguments(std::move(bs)) {}

  std::string name() const { return "PStore"; }

  template <class H, class X>
  auto map(H const& h, PStore<A, B, X> const& s) const {
    return pstore_map(h, s);
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, PStore<A, B, X> const& s, PStore<A, B, X> const& t) const {
    require();
    return pstore_eq(*positions, *arguments, eqx, s, t);
  }

  template <class X>
  FinType<PStore<A, B, X>> carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    require();
    auto const count = saturating_mul(positions->size(), function_count(*arguments, xs));
    if (count > budget) throw BudgetExceeded("PStore carrier", count, budget);
    std::vector<PStore<A, B, X>> vs;
    vs.reserve(count);
    auto const peeks = enumerate_functions(*arguments, xs, budget);
    for (auto const& a : positions->values())
      for (auto const& k : peeks) vs.push_back(PStore<A, B, X>{a, k});
    return FinType<PStore<A, B, X>>(
        "PStore(" + xs.name() + ")", std::move(vs),
        [self = *this, xs](PStore<A, B, X> const& s, PStore<A, B, X> const& t) {
          return self.eq_at(xs, s, t);
        });
  }

 private:
  void require() const {
    if (!positions || !arguments) throw MissingCarrier(name());
  }
};

/// alpha_F(f)_X (a, g) = F(g)(f a): the natural transformation
/// PStore<A,B,-> => F determined by f : A -> F B.
template <FunctorWitness F, class Fn>
auto alpha(F const& functor, Fn f) {
  return [functor, f = std::move(f)](auto const& s) { return functor.map(s.peek, f(s.pos)); };
}

/// Inverse of `alpha`: evaluate the transformation at (a, id).
template <class A, class B, class Tau>
auto alpha_inv(Tau tau) {
  return [tau = std::move(tau)](A const& a) {
    return tau(PStore<A, B, B>{a, [](B const& b) { return b; }});
  };
}

}  // namespace polyrep
