#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "fintype.hpp"
#include "pstore.hpp"
#include "witnesses.hpp"

namespace polyrep {

/// The free applicative on PStore<A,B,->: sum over n of A^n x (B^n -> X).
///
/// Stored flat as (dim, positions, peek). The peek is only defined on
/// vectors of length dim; any other length raises DimensionMismatch.
template <class A, class B, class X>
class FunList {
 public:
  using Peek = std::function<X(std::vector<B> const&)>;

  FunList(std::vector<A> positions, Peek peek)
      : positions_(std::move(positions)), peek_(std::make_shared<const Peek>(std::move(peek))) {}

  std::size_t dim() const noexcept { return positions_.size(); }
  std::vector<A> const& positions() const noexcept { return positions_; }

  X peek(std::vector<B> const& bs) const {
    if (bs.size() != dim()) throw DimensionMismatch(dim(), bs.size());
    return (*peek_)(bs);
  }

 private:
  std::vector<A> positions_;
  std::shared_ptr<const Peek> peek_;
};

template <class A, class B, class X, class H>
FunList<A, B, result_t<H, X>> funlist_map(H h, FunList<A, B, X> const& r) {
  return {r.positions(), [h = std::move(h), r](std::vector<B> const& bs) { return h(r.peek(bs)); }};
}

/// (0, <>, \<>. x)
template <class A, class B, class X>
FunList<A, B, X> funlist_pure(X x) {
  return {{}, [x = std::move(x)](std::vector<B> const&) { return x; }};
}

/// (n+m, as ++ as', \bs. (f (take n bs), g (drop n bs)))
template <class A, class B, class X, class Y>
FunList<A, B, std::pair<X, Y>> funlist_star(FunList<A, B, X> const& r, FunList<A, B, Y> const& s) {
  auto positions = r.positions();
  positions.insert(positions.end(), s.positions().begin(), s.positions().end());
  return {std::move(positions), [r, s](std::vector<B> const& bs) {
            auto const n = static_cast<std::ptrdiff_t>(r.dim());
            std::vector<B> front(bs.begin(), bs.begin() + n);
            std::vector<B> back(bs.begin() + n, bs.end());
            return std::pair<X, Y>{r.peek(front), s.peek(back)};
          }};
}

/// Appends one position: the nested-constructor view of a FunList.
template <class A, class B, class K>
auto funlist_more(FunList<A, B, K> const& f, A a) {
  using X = result_t<K, B>;
  auto positions = f.positions();
  positions.push_back(std::move(a));
  return FunList<A, B, X>(std::move(positions), [f](std::vector<B> const& bs) {
    if (bs.size() != f.dim() + 1) throw DimensionMismatch(f.dim() + 1, bs.size());
    std::vector<B> front(bs.begin(), bs.end() - 1);
    return f.peek(front)(bs.back());
  });
}

/// wrap a = (1, <a>, id)
template <class B, class A>
FunList<A, B, B> funlist_wrap(A a) {
  return {{std::move(a)}, [](std::vector<B> const& bs) { return bs.front(); }};
}

template <class A, class B, class X>
FunList<A, B, X> embed_pstore(PStore<A, B, X> const& s) {
  return {{s.pos}, [peek = s.peek](std::vector<B> const& bs) { return peek(bs.front()); }};
}

template <class A, class X>
X funlist_counit(FunList<A, A, X> const& r) {
  return r.peek(r.positions());
}

/// delta (n, as, f) = (n, as, \bs. (n, bs, f))
template <class B, class A, class C, class X>
FunList<A, B, FunList<B, C, X>> funlist_comult(FunList<A, C, X> const& r) {
  return {r.positions(), [r](std::vector<B> const& bs) {
            return FunList<B, C, X>(bs, [r](std::vector<C> const& cs) { return r.peek(cs); });
          }};
}

/// F(peek r)(collect f (positions r)): the unique applicative morphism out
/// of the free applicative extending f.
template <ApplicativeWitness F, class Fn, class A, class B, class X>
auto run_funlist(F const& app, Fn const& f, FunList<A, B, X> const& r) {
  return app.map([r](std::vector<B> const& bs) { return r.peek(bs); }, collect<B>(app, f, r.positions()));
}

template <class A, class B>
struct FunListFunctor {
  using category = applicative_tag;
  template <class X>
  using apply = FunList<A, B, X>;

  std::optional<FinType<A>> positions;
  std::optional<FinType<B>> arguments;
  std::size_t max_dim = 1;

  FunListFunctor() = default;
  FunListFunctor(FinType<A> as, FinType<B> bs, std::size_t max_dimension)
      : positions(std::move(as)), arguments(std::move(bs)), max_dim(max_dimension) {
    auto cache = std::make_shared<std::vector<FinType<std::vector<B>>>>();
    for (std::size_t n = 0; n <= cached_dims && saturating_pow(arguments->size(), n) <= 4096; ++n)
      cache->push_back(vectors(*arguments, n));
    argument_vectors_ = std::move(cache);
  }

  std::string name() const { return "FunList"; }

  template <class H, class X>
  auto map(H const& h, FunList<A, B, X> const& r) const {
    return funlist_map(h, r);
  }
  template <class X>
  FunList<A, B, X> pure(X const& x) const {
    return funlist_pure<A, B>(x);
  }
  template <class X, class Y>
  FunList<A, B, std::pair<X, Y>> star(FunList<A, B, X> const& r, FunList<A, B, Y> const& s) const {
    return funlist_star(r, s);
  }

  FinType<std::vector<B>> argument_vectors(std::size_t n) const {
    require();
    if (argument_vectors_ && n < argument_vectors_->size()) return (*argument_vectors_)[n];
    return vectors(*arguments, n);
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, FunList<A, B, X> const& r, FunList<A, B, X> const& s) const {
    require();
    if (r.dim() != s.dim()) return false;
    if (!vector_eq(*positions, r.positions(), s.positions())) return false;
    for (auto const& bs : argument_vectors(r.dim()).values())
      if (!eqx(r.peek(bs), s.peek(bs))) return false;
    return true;
  }

  /// All FunLists of dimension <= max_dim.
  template <class X>
  FinType<FunList<A, B, X>> carrier(FinType<X> const& xs, std::size_t budget = default_budget) const {
    require();
    std::vector<FunList<A, B, X>> vs;
    for (std::size_t n = 0; n <= max_dim; ++n) {
      auto const bvecs = argument_vectors(n);
      auto const count = saturating_mul(saturating_pow(positions->size(), n), function_count(bvecs, xs));
      if (count > budget || vs.size() + count > budget) throw BudgetExceeded("FunList carrier", count, budget);
      auto const avecs = vectors(*positions, n);
      auto const peeks = enumerate_functions(bvecs, xs, budget);
      for (auto const& as : avecs.values())
        for (auto const& k : peeks) vs.emplace_back(as, k);
    }
    return FinType<FunList<A, B, X>>(
        "FunList(" + xs.name() + ")<=" + std::to_string(max_dim), std::move(vs),
        [self = *this, xs](FunList<A, B, X> const& r, FunList<A, B, X> const& s) {
          return self.eq_at(xs, r, s);
        });
  }

 protected:
  static constexpr std::size_t cached_dims = 6;

  void require() const {
    if (!positions || !arguments) throw MissingCarrier(name());
  }

 private:
  std::shared_ptr<const std::vector<FinType<std::vector<B>>>> argument_vectors_;
};

/// Mutant: star with take and drop exchanged. Used to show the applicative
/// law suite is not vacuous.
template <class A, class B>
struct FunListSwappedSplit : FunListFunctor<A, B> {
  using FunListFunctor<A, B>::FunListFunctor;

  std::string name() const { return "FunList[swapped-split]"; }

  template <class X, class Y>
  FunList<A, B, std::pair<X, Y>> star(FunList<A, B, X> const& r, FunList<A, B, Y> const& s) const {
    auto positions = r.positions();
    positions.insert(positions.end(), s.positions().begin(), s.positions().end());
    return {std::move(positions), [r, s](std::vector<B> const& bs) {
              auto const n = static_cast<std::ptrdiff_t>(r.dim());
              std::vector<B> taken(bs.begin(), bs.begin() + n);
              std::vector<B> dropped(bs.begin() + n, bs.end());
              return std::pair<X, Y>{r.peek(dropped), s.peek(taken)};
            }};
  }
};

}  // namespace polyrep
