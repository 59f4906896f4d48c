#include "polyrep/container.hpp"
#include "polyrep/suites.hpp"
#include "polyrep/zoo.hpp"

namespace polyrep::suites {

namespace {

auto traversable_morphisms(Zoo const& z) {
  auto const k = fin<2>();
  return std::tuple(
      morphism_case("counit", [](auto const& r) { return funlist_counit(r); }, z.funlist, Identity{}),
      morphism_case(
          "positions",
          [](auto const& r) {
            return Const<Fin2, std::decay_t<decltype(r.peek(std::vector<Fin2>{}))>>{r.positions()};
          },
          z.funlist, ConstList<Fin2>(k, 16)),
      morphism_case("pure", [state = z.state](auto const& x) { return state.pure(x); }, Identity{}, z.state));
}

/// Psi . Phi = id on all T X of size <= size, and Phi . Psi = id on the
/// extracted container's values.
template <class T>
std::vector<CheckResult> check_extraction(std::string const& suite, T const& traversable, std::size_t size,
                                          CheckConfig const& cfg) {
  auto const k = fin<2>();
  auto const xs = traversable.carrier(k, size);
  auto const container = extract_container(traversable, size);
  auto const cs = container_values(container, k, cfg.budget);
  auto const tag = "[" + traversable.name() + "]";
  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "psi-after-phi" + tag, {xs.size()}, cfg, [&](auto const& i) {
    auto const& x = xs[i[0]];
    return traversable.eq_at(k, from_container(traversable, to_container(traversable, x)), x);
  }));
  out.push_back(for_all(suite, "phi-after-psi" + tag, {cs.size()}, cfg, [&](auto const& i) {
    auto const& c = cs[i[0]];
    return cs.eq(to_container(traversable, from_container(traversable, c)), c);
  }));
  out.push_back(for_all(suite, "value-count" + tag, {1}, cfg, [&](auto const&) { return cs.size() == xs.size(); }));
  return out;
}

/// F(Phi) . traverse f = canonical_traverse f . Phi at every zoo applicative.
template <class T>
std::vector<CheckResult> check_commutation(std::string const& suite, T const& traversable, std::size_t size,
                                           CheckConfig const& cfg) {
  auto const k = fin<2>();
  auto const xs = traversable.carrier(k, size);
  auto const shapes = traversable.carrier(unit_type(), size);
  auto const ceq = [shapes, k](auto const& a, auto const& b) { return container_eq(shapes, k, a, b); };
  auto const phi = [traversable](auto const& x) { return to_container(traversable, x); };
  std::vector<CheckResult> out;
  auto one = [&](auto const& app) {
    auto const fb = app.carrier(k, cfg.budget);
    return for_all(suite, "traverse-commutes[" + traversable.name() + "," + app.name() + "]",
                   {xs.size(), function_count(k, fb)}, cfg, [&](auto const& i) {
                     auto const f = function_at(k, fb, i[1]);
                     auto const& x = xs[i[0]];
                     auto const lhs = app.map(phi, traversable.template traverse<Fin2>(app, f, x));
                     auto const rhs = canonical_traverse<Fin2>(app, f, phi(x));
                     return app.eq_at(ceq, lhs, rhs);
                   });
  };
  std::apply([&](auto const&... app) { (out.push_back(one(app)), ...); }, zoo_applicatives(make_zoo()));
  return out;
}

}  // namespace

std::vector<CheckResult> container(CheckConfig const& cfg) {
  auto const k = fin<2>();
  auto const z = make_zoo();
  auto const pairs = applicative_pairs(z);
  auto const morphisms = traversable_morphisms(z);
  std::vector<CheckResult> out;
  append(out, check_traversable_laws("container/list", list_traversable(), k, 3, pairs, morphisms, cfg));
  append(out, check_traversable_laws("container/pair", pair_traversable(), k, 0, pairs, morphisms, cfg));
  append(out, check_traversable_laws("container/vec3", vec_traversable(3), k, 0, pairs, morphisms, cfg));
  append(out, check_traversable_laws("container/tree", tree_traversable(), k, 3, pairs, morphisms, cfg));
  return out;
}

std::vector<CheckResult> container_extraction(CheckConfig const& cfg) {
  std::vector<CheckResult> out;
  append(out, check_extraction("container-extraction", list_traversable(), 4, cfg));
  append(out, check_extraction("container-extraction", pair_traversable(), 0, cfg));
  append(out, check_extraction("container-extraction", vec_traversable(3), 0, cfg));
  append(out, check_extraction("container-extraction", tree_traversable(), 7, cfg));

  append(out, check_commutation("container-extraction", list_traversable(), 4, cfg));
  append(out, check_commutation("container-extraction", pair_traversable(), 0, cfg));
  append(out, check_commutation("container-extraction", vec_traversable(3), 0, cfg));
  append(out, check_commutation("container-extraction", tree_traversable(), 3, cfg));
  return out;
}

}  // namespace polyrep::suites
