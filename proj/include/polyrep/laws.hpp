#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "fintype.hpp"
#include "optics.hpp"
#include "pstore.hpp"
#include "witnesses.hpp"

namespace polyrep {

struct CheckConfig {
  std::size_t budget = default_budget;
  std::size_t samples = default_sample_count;
  std::uint64_t seed = default_seed;
  // Sample even when exhaustive enumeration would fit in the budget.
  bool always_sample = false;
};

/// Outcome of one law. Counterexamples are indices into the enumerations
/// the law quantifies over, outermost first, so a failure can be replayed.
struct CheckResult {
  std::string suite;
  std::string law;
  std::size_t cases = 0;
  bool passed = true;
  bool sampled = false;
  std::vector<std::size_t> counterexample;
  std::string error;
};

inline std::string format_result(CheckResult const& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.law << " cases=" << r.cases;
  if (!r.counterexample.empty() || !r.passed) {
    os << " counterexample=[";
    for (std::size_t i = 0; i < r.counterexample.size(); ++i) os << (i ? "," : "") << r.counterexample[i];
    os << ']';
  }
  return os.str();
}

inline bool all_passed(std::vector<CheckResult> const& rs) {
  for (auto const& r : rs)
    if (!r.passed) return false;
  return true;
}

inline void append(std::vector<CheckResult>& to, std::vector<CheckResult> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Checks `pred` on every index tuple in dims[0] x dims[1] x ..., or on
/// cfg.samples uniformly drawn tuples when the product exceeds the budget.
/// The sample stream depends only on the seed and the law's name. A thrown
/// exception counts as a failure at that tuple. Stops at the first failure.
template <class Pred>
CheckResult for_all(std::string suite, std::string law, std::vector<std::size_t> const& dims, CheckConfig const& cfg,
                    Pred const& pred) {
  CheckResult r;
  r.suite = std::move(suite);
  r.law = std::move(law);
  std::size_t total = 1;
  for (auto d : dims) total = saturating_mul(total, d);

  auto run_case = [&](std::vector<std::size_t> const& idx) {
    ++r.cases;
    bool ok = false;
    try {
      ok = pred(idx);
    } catch (std::exception const& e) {
      r.error = e.what();
    }
    if (!ok) {
      r.passed = false;
      r.counterexample = idx;
    }
    return ok;
  };

  std::vector<std::size_t> idx(dims.size(), 0);
  if (total <= cfg.budget && !cfg.always_sample) {
    for (std::size_t k = 0; k < total; ++k) {
      if (!run_case(idx)) return r;
      for (std::size_t i = dims.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) break;
        idx[i] = 0;
      }
    }
    return r;
  }

  r.sampled = true;
  std::mt19937_64 rng(cfg.seed ^ fnv1a(r.suite + "/" + r.law));
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    for (std::size_t i = 0; i < dims.size(); ++i) idx[i] = std::uniform_int_distribution<std::size_t>(0, dims[i] - 1)(rng);
    if (!run_case(idx)) return r;
  }
  return r;
}

/// Reports whether a deliberately broken instance was caught: passes when
/// `r` failed with a concrete counterexample.
inline CheckResult expect_failure(std::string const& mutant, CheckResult const& r) {
  CheckResult out = r;
  out.suite = "mutants";
  out.law = mutant + ":" + r.suite + "/" + r.law;
  out.passed = !r.passed && !r.counterexample.empty();
  return out;
}

/// Picks one law out of a suite's results; a missing law is reported as a failure.
inline CheckResult find_law(std::vector<CheckResult> const& rs, std::string const& law) {
  for (auto const& r : rs)
    if (r.law == law) return r;
  CheckResult missing;
  missing.law = law;
  missing.passed = false;
  return missing;
}

// ---------------------------------------------------------------------------
// Equalities on products

template <class EqA, class EqB>
auto pair_eq(EqA eqa, EqB eqb) {
  return [eqa, eqb](auto const& p, auto const& q) { return eqa(p.first, q.first) && eqb(p.second, q.second); };
}

/// The equality F(eqx) lifted through a witness.
template <class F, class EqX>
auto lift_eq(F const& functor, EqX eqx) {
  return [functor, eqx](auto const& a, auto const& b) { return functor.eq_at(eqx, a, b); };
}

// ---------------------------------------------------------------------------
// Functor, pointed, applicative, monad

template <FunctorWitness F, class X>
std::vector<CheckResult> check_functor_laws(std::string const& suite, F const& functor, FinType<X> const& xs,
                                            CheckConfig const& cfg = {}) {
  auto const fx = functor.carrier(xs, cfg.budget);
  auto const endos = function_count(xs, xs);
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "map-identity", {fx.size()}, cfg, [&](auto const& i) {
    return functor.eq_at(xs, functor.map(identity, fx[i[0]]), fx[i[0]]);
  }));
  out.push_back(for_all(suite, "map-composition", {fx.size(), endos, endos}, cfg, [&](auto const& i) {
    auto const f = function_at(xs, xs, i[1]);
    auto const g = function_at(xs, xs, i[2]);
    auto const& v = fx[i[0]];
    return functor.eq_at(xs, functor.map([f, g](X const& x) { return g(f(x)); }, v),
                         functor.map(g, functor.map(f, v)));
  }));
  return out;
}

/// pure is natural: map h . pure = pure . h
template <PointedWitness F, class X>
std::vector<CheckResult> check_pointed_laws(std::string const& suite, F const& pointed, FinType<X> const& xs,
                                            CheckConfig const& cfg = {}) {
  return {for_all(suite, "pure-naturality", {xs.size(), function_count(xs, xs)}, cfg, [&](auto const& i) {
    auto const h = function_at(xs, xs, i[1]);
    auto const& x = xs[i[0]];
    return pointed.eq_at(xs, pointed.map(h, pointed.pure(x)), pointed.pure(h(x)));
  })};
}

/// The lax monoidal diagrams: left and right unit, associativity, and
/// naturality of star.
template <ApplicativeWitness F, class X>
std::vector<CheckResult> check_applicative_laws(std::string const& suite, F const& app, FinType<X> const& xs,
                                                CheckConfig const& cfg = {}) {
  auto const fx = app.carrier(xs, cfg.budget);
  auto const n = fx.size();
  auto const endos = function_count(xs, xs);
  auto const u = app.pure(Unit{});
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "left-unit", {n}, cfg, [&](auto const& i) {
    auto const& v = fx[i[0]];
    return app.eq_at(xs, app.map([](std::pair<Unit, X> const& p) { return p.second; }, app.star(u, v)), v);
  }));
  out.push_back(for_all(suite, "right-unit", {n}, cfg, [&](auto const& i) {
    auto const& v = fx[i[0]];
    return app.eq_at(xs, app.map([](std::pair<X, Unit> const& p) { return p.first; }, app.star(v, u)), v);
  }));
  out.push_back(for_all(suite, "associativity", {n, n, n}, cfg, [&](auto const& i) {
    auto const& a = fx[i[0]];
    auto const& b = fx[i[1]];
    auto const& c = fx[i[2]];
    auto const lhs = app.map(
        [](std::pair<std::pair<X, X>, X> const& p) {
          return std::pair<X, std::pair<X, X>>{p.first.first, {p.first.second, p.second}};
        },
        app.star(app.star(a, b), c));
    return app.eq_at(pair_eq(xs, pair_eq(xs, xs)), lhs, app.star(a, app.star(b, c)));
  }));
  out.push_back(for_all(suite, "star-naturality", {n, endos, n, endos}, cfg, [&](auto const& i) {
    auto const& a = fx[i[0]];
    auto const& b = fx[i[2]];
    auto const f = function_at(xs, xs, i[1]);
    auto const g = function_at(xs, xs, i[3]);
    auto const lhs =
        app.map([f, g](std::pair<X, X> const& p) { return std::pair<X, X>{f(p.first), g(p.second)}; }, app.star(a, b));
    return app.eq_at(pair_eq(xs, xs), lhs, app.star(app.map(f, a), app.map(g, b)));
  }));
  return out;
}

/// Monad laws with values drawn from mx and continuations xs -> kx.
template <MonadWitness M, class X, class MX>
std::vector<CheckResult> check_monad_laws(std::string const& suite, M const& monad, FinType<X> const& xs,
                                          FinType<MX> const& mx, FinType<MX> const& kx, CheckConfig const& cfg = {}) {
  auto const nk = function_count(xs, kx);
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "left-identity", {xs.size(), nk}, cfg, [&](auto const& i) {
    auto const k = function_at(xs, kx, i[1]);
    auto const& x = xs[i[0]];
    return monad.eq_at(xs, monad.bind(monad.pure(x), k), k(x));
  }));
  out.push_back(for_all(suite, "right-identity", {mx.size()}, cfg, [&](auto const& i) {
    auto const& m = mx[i[0]];
    return monad.eq_at(xs, monad.bind(m, [&monad](X const& x) { return monad.pure(x); }), m);
  }));
  out.push_back(for_all(suite, "associativity", {mx.size(), nk, nk}, cfg, [&](auto const& i) {
    auto const& m = mx[i[0]];
    auto const k1 = function_at(xs, kx, i[1]);
    auto const k2 = function_at(xs, kx, i[2]);
    auto const lhs = monad.bind(monad.bind(m, k1), k2);
    auto const rhs = monad.bind(m, [&monad, k1, k2](X const& x) { return monad.bind(k1(x), k2); });
    return monad.eq_at(xs, lhs, rhs);
  }));
  return out;
}

template <MonadWitness M, class X>
std::vector<CheckResult> check_monad_laws(std::string const& suite, M const& monad, FinType<X> const& xs,
                                          CheckConfig const& cfg = {}) {
  auto const mx = monad.carrier(xs, cfg.budget);
  return check_monad_laws(suite, monad, xs, mx, mx, cfg);
}

// ---------------------------------------------------------------------------
// Parameterised comonads and their coalgebras, at equal parameters

/// The three comonad diagrams for a witness W of C<K,K,->:
///   map(counit) . comult = id,  counit . comult = id,
///   map(comult) . comult = comult . comult.
template <FunctorWitness W, class X, class Counit, class Comult>
std::vector<CheckResult> check_comonad_laws(std::string const& suite, W const& w, FinType<X> const& xs,
                                            Counit const& counit, Comult const& comult, CheckConfig const& cfg = {}) {
  auto const wx = w.carrier(xs, cfg.budget);
  auto const eq1 = lift_eq(w, xs);
  auto const eq2 = lift_eq(w, eq1);
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "counit-after-comult", {wx.size()}, cfg, [&](auto const& i) {
    auto const& s = wx[i[0]];
    return w.eq_at(xs, w.map(counit, comult(s)), s);
  }));
  out.push_back(for_all(suite, "counit-on-outer", {wx.size()}, cfg, [&](auto const& i) {
    auto const& s = wx[i[0]];
    return w.eq_at(xs, counit(comult(s)), s);
  }));
  out.push_back(for_all(suite, "coassociativity", {wx.size()}, cfg, [&](auto const& i) {
    auto const& s = wx[i[0]];
    return w.eq_at(eq2, w.map(comult, comult(s)), comult(comult(s)));
  }));
  return out;
}

/// counit . k = id  and  map(k) . k = comult . k
template <FunctorWitness W, class J, class Coalgebra, class Counit, class Comult>
std::vector<CheckResult> check_coalgebra_laws(std::string const& suite, W const& w, FinType<J> const& js,
                                              Coalgebra const& k, Counit const& counit, Comult const& comult,
                                              CheckConfig const& cfg = {}) {
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "counit-coalgebra", {js.size()}, cfg, [&](auto const& i) {
    auto const& j = js[i[0]];
    return js.eq(counit(k(j)), j);
  }));
  out.push_back(for_all(suite, "comult-coalgebra", {js.size()}, cfg, [&](auto const& i) {
    auto const s = k(js[i[0]]);
    return w.eq_at(lift_eq(w, js), w.map(k, s), comult(s));
  }));
  return out;
}

// ---------------------------------------------------------------------------
// Naturality and applicative morphisms

template <FunctorWitness F, FunctorWitness G, class X, class Tau>
CheckResult check_naturality(std::string const& suite, std::string const& law, Tau const& tau, F const& source,
                             G const& target, FinType<X> const& xs, CheckConfig const& cfg = {}) {
  auto const fx = source.carrier(xs, cfg.budget);
  return for_all(suite, law, {fx.size(), function_count(xs, xs)}, cfg, [&](auto const& i) {
    auto const h = function_at(xs, xs, i[1]);
    auto const& v = fx[i[0]];
    return target.eq_at(xs, tau(source.map(h, v)), target.map(h, tau(v)));
  });
}

/// alpha respects unit and multiplication, and is natural.
template <ApplicativeWitness F, ApplicativeWitness G, class X, class Alpha>
std::vector<CheckResult> check_applicative_morphism(std::string const& suite, Alpha const& alpha, F const& source,
                                                    G const& target, FinType<X> const& xs,
                                                    CheckConfig const& cfg = {}) {
  auto const fx = source.carrier(xs, cfg.budget);
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "morphism-unit", {xs.size()}, cfg, [&](auto const& i) {
    auto const& x = xs[i[0]];
    return target.eq_at(xs, alpha(source.pure(x)), target.pure(x));
  }));
  out.push_back(for_all(suite, "morphism-multiplication", {fx.size(), fx.size()}, cfg, [&](auto const& i) {
    auto const& a = fx[i[0]];
    auto const& b = fx[i[1]];
    return target.eq_at(pair_eq(xs, xs), alpha(source.star(a, b)), target.star(alpha(a), alpha(b)));
  }));
  out.push_back(check_naturality(suite, "morphism-naturality", alpha, source, target, xs, cfg));
  return out;
}

// ---------------------------------------------------------------------------
// Van Laarhoven optics and traversable instances

/// Linearity  v(F.G)(F(g) . f) = F(v(G) g) . v(F) f  at one pair (F, G).
template <class Optic, class J, class K, class F, class G>
CheckResult check_linearity(std::string const& suite, Optic const& v, FinType<J> const& js, FinType<K> const& ks,
                            Compose<F, G> const& fg, CheckConfig const& cfg = {}) {
  auto const& outer = fg.outer;
  auto const& inner = fg.inner;
  auto const fk = outer.carrier(ks, cfg.budget);
  auto const gk = inner.carrier(ks, cfg.budget);
  return for_all(suite, "linearity[" + fg.name() + "]", {js.size(), function_count(ks, fk), function_count(ks, gk)}, cfg,
                 [&](auto const& i) {
                   auto const& j = js[i[0]];
                   auto const f = function_at(ks, fk, i[1]);
                   auto const g = function_at(ks, gk, i[2]);
                   auto const lhs = v.apply(fg, [outer, f, g](K const& a) { return outer.map(g, f(a)); }, j);
                   auto const rhs = outer.map([v, inner, g](J const& jb) { return v.apply(inner, g, jb); }, v.apply(outer, f, j));
                   return fg.eq_at(js, lhs, rhs);
                 });
}

/// Unity v(Identity)(id) = id, then linearity at every pair in `pairs`.
template <class Optic, class J, class K, class... Pairs>
std::vector<CheckResult> check_linearity_unity(std::string const& suite, Optic const& v, FinType<J> const& js,
                                               FinType<K> const& ks, std::tuple<Pairs...> const& pairs,
                                               CheckConfig const& cfg = {}) {
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "unity", {js.size()}, cfg, [&](auto const& i) {
    auto const& j = js[i[0]];
    return js.eq(v.apply(Identity{}, identity, j), j);
  }));
  std::apply([&](auto const&... fg) { (out.push_back(check_linearity(suite, v, js, ks, fg, cfg)), ...); }, pairs);
  return out;
}

/// An applicative morphism to check traversals against.
template <class Alpha, class F, class G>
struct MorphismCase {
  std::string name;
  Alpha alpha;
  F source;
  G target;
};

template <class Alpha, class F, class G>
MorphismCase<Alpha, F, G> morphism_case(std::string name, Alpha alpha, F source, G target) {
  return {std::move(name), std::move(alpha), std::move(source), std::move(target)};
}

/// Unity, linearity at each pair, and naturality at each morphism for a
/// traversable instance on all structures of size <= size over xs.
template <class T, class X, class... Pairs, class... Morphisms>
std::vector<CheckResult> check_traversable_laws(std::string const& suite, T const& traversable, FinType<X> const& xs,
                                                std::size_t size, std::tuple<Pairs...> const& pairs,
                                                std::tuple<Morphisms...> const& morphisms,
                                                CheckConfig const& cfg = {}) {
  auto const ts = traversable.carrier(xs, size);
  auto const teq = [traversable, xs](auto const& a, auto const& b) { return traversable.eq_at(xs, a, b); };
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "unity", {ts.size()}, cfg, [&](auto const& i) {
    auto const& t = ts[i[0]];
    return traversable.eq_at(xs, traversable.template traverse<X>(Identity{}, identity, t), t);
  }));
  auto linearity = [&](auto const& fg) {
    auto const& outer = fg.outer;
    auto const& inner = fg.inner;
    auto const fx = outer.carrier(xs, cfg.budget);
    auto const gx = inner.carrier(xs, cfg.budget);
    return for_all(suite, "linearity[" + fg.name() + "]", {ts.size(), function_count(xs, fx), function_count(xs, gx)},
                   cfg, [&](auto const& i) {
                     auto const& t = ts[i[0]];
                     auto const f = function_at(xs, fx, i[1]);
                     auto const g = function_at(xs, gx, i[2]);
                     auto const lhs =
                         traversable.template traverse<X>(fg, [outer, f, g](X const& a) { return outer.map(g, f(a)); }, t);
                     auto const rhs = outer.map(
                         [traversable, inner, g](auto const& u) { return traversable.template traverse<X>(inner, g, u); },
                         traversable.template traverse<X>(outer, f, t));
                     return fg.eq_at(teq, lhs, rhs);
                   });
  };
  std::apply([&](auto const&... fg) { (out.push_back(linearity(fg)), ...); }, pairs);
  auto naturality = [&](auto const& m) {
    auto const fx = m.source.carrier(xs, cfg.budget);
    return for_all(suite, "naturality[" + m.name + "]", {ts.size(), function_count(xs, fx)}, cfg, [&](auto const& i) {
      auto const& t = ts[i[0]];
      auto const f = function_at(xs, fx, i[1]);
      auto const lhs = m.alpha(traversable.template traverse<X>(m.source, f, t));
      auto const rhs = traversable.template traverse<X>(m.target, [&m, f](X const& a) { return m.alpha(f(a)); }, t);
      return m.target.eq_at(teq, lhs, rhs);
    });
  };
  std::apply([&](auto const&... m) { (out.push_back(naturality(m)), ...); }, morphisms);
  return out;
}

// ---------------------------------------------------------------------------
// Lenses, in get/set form and in coalgebra form. Both index a failure by
// (j) or (j, b) so a broken lens is caught at the same inputs by either.

template <class J, class K>
std::vector<CheckResult> check_lens_laws(std::string const& suite, KLens<J, J, K, K> const& k, FinType<J> const& js,
                                         FinType<K> const& ks, CheckConfig const& cfg = {}) {
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "get-put", {js.size()}, cfg, [&](auto const& i) {
    auto const& j = js[i[0]];
    return js.eq(lens_set(k, j, lens_get(k, j)), j);
  }));
  out.push_back(for_all(suite, "put-get", {js.size(), ks.size()}, cfg, [&](auto const& i) {
    auto const& b = ks[i[1]];
    return ks.eq(lens_get(k, lens_set(k, js[i[0]], b)), b);
  }));
  out.push_back(for_all(suite, "put-put", {js.size(), ks.size(), ks.size()}, cfg, [&](auto const& i) {
    auto const& j = js[i[0]];
    auto const& b2 = ks[i[2]];
    return js.eq(lens_set(k, lens_set(k, j, ks[i[1]]), b2), lens_set(k, j, b2));
  }));
  return out;
}

/// The coalgebra diagrams for a lens, with the comultiplication law
/// compared at each outer argument b separately.
template <class J, class K>
std::vector<CheckResult> check_lens_coalgebra(std::string const& suite, KLens<J, J, K, K> const& k,
                                              FinType<J> const& js, FinType<K> const& ks, CheckConfig const& cfg = {}) {
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "counit-coalgebra", {js.size()}, cfg, [&](auto const& i) {
    auto const& j = js[i[0]];
    return js.eq(pstore_counit(k(j)), j);
  }));
  out.push_back(for_all(suite, "comult-coalgebra", {js.size(), ks.size()}, cfg, [&](auto const& i) {
    auto const s = k(js[i[0]]);
    auto const lhs = pstore_map(k, s);
    auto const rhs = pstore_comult<K>(s);
    auto const& b = ks[i[1]];
    return ks.eq(lhs.pos, rhs.pos) && pstore_eq(ks, ks, js, lhs.peek(b), rhs.peek(b));
  }));
  return out;
}

}  // namespace polyrep
