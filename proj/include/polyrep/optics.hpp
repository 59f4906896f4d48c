#pragma once

#include <concepts>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "core.hpp"
#include "free.hpp"
#include "funlist.hpp"
#include "pstore.hpp"
#include "witnesses.hpp"

// Two presentations of each optic:
//
//   K-form  a coalgebra  JA -> C<KA,KB,JB>  for C one of PStore,
//           FreePointedPStore or FunList (lens, partial lens, traversal);
//   V-form  a capability  (F, f : KA -> F KB) -> JA -> F JB  runnable at any
//           witness of the matching category (functor, pointed, applicative).
//
// The converters below are mutually inverse on lawful optics.

namespace polyrep {

template <class JA, class JB, class KA, class KB>
struct KLens {
  std::function<PStore<KA, KB, JB>(JA const&)> run;
  PStore<KA, KB, JB> operator()(JA const& j) const { return run(j); }
};

template <class JA, class JB, class KA, class KB>
struct KPartialLens {
  std::function<FreePointedPStore<KA, KB, JB>(JA const&)> run;
  FreePointedPStore<KA, KB, JB> operator()(JA const& j) const { return run(j); }
};

template <class JA, class JB, class KA, class KB>
struct KTraversal {
  std::function<FunList<KA, KB, JB>(JA const&)> run;
  FunList<KA, KB, JB> operator()(JA const& j) const { return run(j); }
};

/// A Van Laarhoven optic. `Tag` is the weakest witness category the
/// capability may be run at; `Impl` is called as impl(witness, f, ja).
template <class Tag, class JA, class JB, class KA, class KB, class Impl>
class VOptic {
 public:
  using tag = Tag;
  using source_type = JA;
  using target_type = JB;
  using focus_type = KA;
  using replacement_type = KB;

  explicit VOptic(Impl impl) : impl_(std::move(impl)) {}

  template <class F, class Fn>
    requires std::derived_from<typename F::category, Tag>
  auto apply(F const& witness, Fn const& f, JA const& j) const {
    return impl_(witness, f, j);
  }

  /// v(F, f) as a function JA -> F JB.
  template <class F, class Fn>
    requires std::derived_from<typename F::category, Tag>
  auto operator()(F witness, Fn f) const {
    return [impl = impl_, witness = std::move(witness), f = std::move(f)](JA const& j) { return impl(witness, f, j); };
  }

  Impl const& impl() const noexcept { return impl_; }

 private:
  Impl impl_;
};

template <class JA, class JB, class KA, class KB, class Impl>
using VLens = VOptic<functor_tag, JA, JB, KA, KB, Impl>;
template <class JA, class JB, class KA, class KB, class Impl>
using VPartialLens = VOptic<pointed_tag, JA, JB, KA, KB, Impl>;
template <class JA, class JB, class KA, class KB, class Impl>
using VTraversal = VOptic<applicative_tag, JA, JB, KA, KB, Impl>;

template <class JA, class JB, class KA, class KB, class Impl>
auto make_vlens(Impl impl) {
  return VLens<JA, JB, KA, KB, Impl>(std::move(impl));
}
template <class JA, class JB, class KA, class KB, class Impl>
auto make_vpartial(Impl impl) {
  return VPartialLens<JA, JB, KA, KB, Impl>(std::move(impl));
}
template <class JA, class JB, class KA, class KB, class Impl>
auto make_vtraversal(Impl impl) {
  return VTraversal<JA, JB, KA, KB, Impl>(std::move(impl));
}

/// Every lens is a partial lens and every partial lens a traversal.
template <class Tag, class JA, class JB, class KA, class KB, class Impl>
auto as_vpartial(VOptic<Tag, JA, JB, KA, KB, Impl> const& v) {
  static_assert(std::derived_from<pointed_tag, Tag>);
  return make_vpartial<JA, JB, KA, KB>(v.impl());
}
template <class Tag, class JA, class JB, class KA, class KB, class Impl>
auto as_vtraversal(VOptic<Tag, JA, JB, KA, KB, Impl> const& v) {
  static_assert(std::derived_from<applicative_tag, Tag>);
  return make_vtraversal<JA, JB, KA, KB>(v.impl());
}

// ---------------------------------------------------------------------------
// Converters

/// v(F, f) = \j. let (a, h) = k j in F(h)(f a)
template <class JA, class JB, class KA, class KB>
auto klens_to_vlens(KLens<JA, JB, KA, KB> k) {
  return make_vlens<JA, JB, KA, KB>([k = std::move(k)](auto const& functor, auto const& f, JA const& j) {
    auto const s = k.run(j);
    return functor.map(s.peek, f(s.pos));
  });
}

/// Run the capability at PStore with probe \a. (a, id).
template <class Tag, class JA, class JB, class KA, class KB, class Impl>
KLens<JA, JB, KA, KB> vlens_to_klens(VOptic<Tag, JA, JB, KA, KB, Impl> const& v) {
  static_assert(std::same_as<Tag, functor_tag>, "only lenses run at PStore");
  return {[v](JA const& j) {
    return v.apply(PStoreFunctor<KA, KB>{}, [](KA const& a) { return PStore<KA, KB, KB>{a, [](KB const& b) { return b; }}; }, j);
  }};
}

template <class JA, class JB, class KA, class KB>
auto kpartial_to_vpartial(KPartialLens<JA, JB, KA, KB> k) {
  return make_vpartial<JA, JB, KA, KB>([k = std::move(k)](auto const& pointed, auto const& f, JA const& j) {
    return run_freepointed(pointed, f, k.run(j));
  });
}

template <class Tag, class JA, class JB, class KA, class KB, class Impl>
KPartialLens<JA, JB, KA, KB> vpartial_to_kpartial(VOptic<Tag, JA, JB, KA, KB, Impl> const& v) {
  using Store = FreePointedPStore<KA, KB, KB>;
  return {[v](JA const& j) {
    return v.apply(FreePointedFunctor<KA, KB>{},
                   [](KA const& a) { return Store::store({a, [](KB const& b) { return b; }}); }, j);
  }};
}

template <class JA, class JB, class KA, class KB>
auto ktrav_to_vtrav(KTraversal<JA, JB, KA, KB> k) {
  return make_vtraversal<JA, JB, KA, KB>([k = std::move(k)](auto const& app, auto const& f, JA const& j) {
    return run_funlist(app, f, k.run(j));
  });
}

/// Run the capability at the free applicative with probe wrap.
template <class Tag, class JA, class JB, class KA, class KB, class Impl>
KTraversal<JA, JB, KA, KB> vtrav_to_ktrav(VOptic<Tag, JA, JB, KA, KB, Impl> const& v) {
  return {[v](JA const& j) { return v.apply(FunListFunctor<KA, KB>{}, [](KA const& a) { return funlist_wrap<KB>(a); }, j); }};
}

template <class JA, class JB, class KA, class KB>
KPartialLens<JA, JB, KA, KB> klens_to_kpartial(KLens<JA, JB, KA, KB> k) {
  return {[k = std::move(k)](JA const& j) { return FreePointedPStore<KA, KB, JB>::store(k.run(j)); }};
}

template <class JA, class JB, class KA, class KB>
KTraversal<JA, JB, KA, KB> klens_to_ktrav(KLens<JA, JB, KA, KB> k) {
  return {[k = std::move(k)](JA const& j) { return embed_pstore(k.run(j)); }};
}

template <class T1, class T2>
using stronger_tag = std::conditional_t<std::derived_from<T1, T2>, T1, T2>;

/// outer . inner, by plain composition of capabilities.
template <class T1, class T2, class JA, class JB, class KA, class KB, class LA, class LB, class I1, class I2>
auto vlens_compose(VOptic<T1, JA, JB, KA, KB, I1> const& outer, VOptic<T2, KA, KB, LA, LB, I2> const& inner) {
  using Tag = stronger_tag<T1, T2>;
  auto impl = [o = outer.impl(), i = inner.impl()](auto const& witness, auto const& f, JA const& j) {
    return o(witness, [&i, &witness, &f](KA const& ka) { return i(witness, f, ka); }, j);
  };
  return VOptic<Tag, JA, JB, LA, LB, decltype(impl)>(std::move(impl));
}

// ---------------------------------------------------------------------------
// get / set

template <class JA, class JB, class KA, class KB>
KA lens_get(KLens<JA, JB, KA, KB> const& k, JA const& j) {
  return k.run(j).pos;
}

template <class JA, class JB, class KA, class KB>
JB lens_set(KLens<JA, JB, KA, KB> const& k, JA const& j, KB const& b) {
  return k.run(j).peek(b);
}

/// (JA -> KA) x (JA x KB -> JB)  ~=  JA -> PStore<KA,KB,JB>
template <class JA, class JB, class KA, class KB, class Get, class Set>
KLens<JA, JB, KA, KB> lens_from_get_set(Get get, Set set) {
  return {[get = std::move(get), set = std::move(set)](JA const& j) {
    return PStore<KA, KB, JB>{get(j), [set, j](KB const& b) { return set(j, b); }};
  }};
}

template <class A, class B>
auto identity_vlens() {
  return make_vlens<A, B, A, B>([](auto const&, auto const& f, A const& a) { return f(a); });
}

/// fstLens f (a, y) = (\b. (b, y)) <$> f a
template <class A, class B, class Y>
auto fst_lens() {
  return make_vlens<std::pair<A, Y>, std::pair<B, Y>, A, B>(
      [](auto const& functor, auto const& f, std::pair<A, Y> const& p) {
        return functor.map([y = p.second](B const& b) { return std::pair<B, Y>{b, y}; }, f(p.first));
      });
}

/// k (a, c) = (a, \b. (b, c)): the coalgebra of the first projection.
template <class A, class B, class C>
KLens<std::pair<A, C>, std::pair<B, C>, A, B> projection_klens() {
  return {[](std::pair<A, C> const& p) {
    return PStore<A, B, std::pair<B, C>>{p.first, [c = p.second](B const& b) { return std::pair<B, C>{b, c}; }};
  }};
}

/// Focus on the element of a list at `index`, or nothing if it is out of range.
template <class A>
auto element_vpartial(std::size_t index) {
  using L = std::vector<A>;
  return make_vpartial<L, L, A, A>([index](auto const& pointed, auto const& f, L const& xs) {
    if (index >= xs.size()) return pointed.pure(xs);
    return pointed.map(
        [xs, index](A const& b) {
          auto ys = xs;
          ys[index] = b;
          return ys;
        },
        f(xs[index]));
  });
}

/// All elements of a list, left to right.
template <class A, class B = A>
auto list_traversal() {
  return make_vtraversal<std::vector<A>, std::vector<B>, A, B>(
      [](auto const& app, auto const& f, std::vector<A> const& xs) { return collect<B>(app, f, xs); });
}

// Unlawful lenses used to check the law suites are not vacuous.

/// set (j, b) = j: violates get (set j b) = b.
template <class J, class K, class Get>
KLens<J, J, K, K> set_ignoring_lens(Get get) {
  return lens_from_get_set<J, J, K, K>(std::move(get), [](J const& j, K const&) { return j; });
}

/// set (j, b) = j0 for a fixed j0: violates set (j, get j) = j.
template <class J, class K, class Get>
KLens<J, J, K, K> constant_set_lens(Get get, J j0) {
  return lens_from_get_set<J, J, K, K>(std::move(get), [j0](J const&, K const&) { return j0; });
}

}  // namespace polyrep
