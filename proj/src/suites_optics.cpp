#include "polyrep/suites.hpp"
#include "polyrep/zoo.hpp"

namespace polyrep::suites {

namespace {

template <class J, class K>
bool klens_eq(FinType<J> const& js, FinType<K> const& ks, KLens<J, J, K, K> const& a, KLens<J, J, K, K> const& b) {
  return extensionally_equal(js, [&](auto const& s, auto const& t) { return pstore_eq(ks, ks, js, s, t); }, a, b);
}

/// Both law formulations and the V-side laws for one lens.
template <class J, class K>
std::vector<CheckResult> lens_suite(std::string const& suite, KLens<J, J, K, K> const& k, FinType<J> const& js,
                                    FinType<K> const& ks, CheckConfig const& cfg) {
  std::vector<CheckResult> out;
  append(out, check_lens_laws(suite, k, js, ks, cfg));
  append(out, check_lens_coalgebra(suite, k, js, ks, cfg));
  append(out, check_linearity_unity(suite, klens_to_vlens(k), js, ks, lens_pairs(make_zoo()), cfg));
  return out;
}

/// v and convert(v) agree at every witness in the tuple, for every tabulated f.
template <class V1, class V2, class J, class K, class Witnesses>
std::vector<CheckResult> check_same_optic(std::string const& suite, std::string const& law, V1 const& v1,
                                          V2 const& v2, FinType<J> const& js, FinType<K> const& ks,
                                          Witnesses const& witnesses, CheckConfig const& cfg) {
  std::vector<CheckResult> out;
  auto one = [&](auto const& w) {
    auto const fk = w.carrier(ks, cfg.budget);
    return for_all(suite, law + "[" + w.name() + "]", {js.size(), function_count(ks, fk)}, cfg, [&](auto const& i) {
      auto const f = function_at(ks, fk, i[1]);
      auto const& j = js[i[0]];
      return w.eq_at(js, v1.apply(w, f, j), v2.apply(w, f, j));
    });
  };
  std::apply([&](auto const&... w) { (out.push_back(one(w)), ...); }, witnesses);
  return out;
}

/// Every KLens J -> PStore<K,K,J>: the converters are exact inverses on all
/// of them, and the get/set laws, the coalgebra laws and the V-side laws
/// (unity, linearity at PStore.PStore with the generic probe) agree.
template <class J, class K>
std::vector<CheckResult> enumerated_klenses(std::string const& suite, FinType<J> const& js, FinType<K> const& ks,
                                            std::size_t expected_lawful, CheckConfig const& cfg) {
  PStoreFunctor<K, K> const store(ks, ks);
  auto const stores = store.carrier(js, cfg.budget);
  auto const n = function_count(js, stores);
  auto const tag = "[" + js.name() + "," + ks.name() + "]";
  auto klens = [&](std::size_t idx) { return KLens<J, J, K, K>{function_at(js, stores, idx)}; };
  auto getset_lawful = [&](KLens<J, J, K, K> const& k) {
    for (auto const& j : js.values()) {
      if (!js.eq(lens_set(k, j, lens_get(k, j)), j)) return false;
      for (auto const& b : ks.values()) {
        if (!ks.eq(lens_get(k, lens_set(k, j, b)), b)) return false;
        for (auto const& b2 : ks.values())
          if (!js.eq(lens_set(k, lens_set(k, j, b), b2), lens_set(k, j, b2))) return false;
      }
    }
    return true;
  };
  auto coalgebra_lawful = [&](KLens<J, J, K, K> const& k) {
    CheckConfig quiet = cfg;
    return all_passed(check_lens_coalgebra(suite, k, js, ks, quiet));
  };
  auto v_lawful = [&](KLens<J, J, K, K> const& k) {
    auto const v = klens_to_vlens(k);
    auto const probe = [](K const& a) { return PStore<K, K, K>{a, identity}; };
    auto const fg = compose(store, store);
    for (auto const& j : js.values()) {
      if (!js.eq(v.apply(Identity{}, identity, j), j)) return false;
      auto const lhs = v.apply(fg, [store, probe](K const& a) { return store.map(probe, probe(a)); }, j);
      auto const rhs = store.map([v, store, probe](J const& jb) { return v.apply(store, probe, jb); },
                                 v.apply(store, probe, j));
      if (!fg.eq_at(js, lhs, rhs)) return false;
    }
    return true;
  };

  std::vector<CheckResult> out;
  out.push_back(for_all(suite, "k-to-v-to-k" + tag, {n}, cfg, [&](auto const& i) {
    auto const k = klens(i[0]);
    return klens_eq(js, ks, vlens_to_klens(klens_to_vlens(k)), k);
  }));
  std::size_t lawful = 0;
  out.push_back(for_all(suite, "formulations-agree" + tag, {n}, cfg, [&](auto const& i) {
    auto const k = klens(i[0]);
    bool const getset = getset_lawful(k);
    lawful += getset;
    return getset == coalgebra_lawful(k) && getset == v_lawful(k);
  }));
  out.push_back(for_all(suite, "lawful-count" + tag, {1}, cfg, [&](auto const&) { return lawful == expected_lawful; }));
  return out;
}

}  // namespace

std::vector<CheckResult> optics(CheckConfig const& cfg) {
  auto const k2 = fin<2>();
  auto const k3 = fin<3>();
  auto const zoo = make_zoo();
  auto const js = product(k2, k3);
  std::vector<CheckResult> out;

  auto const fst = fst_lens<Fin2, Fin2, Fin3>();
  auto const fst_k = vlens_to_klens(fst);
  append(out, lens_suite("optics/fst", fst_k, js, k2, cfg));
  append(out, check_same_optic("optics/fst", "v-to-k-to-v", fst, klens_to_vlens(fst_k), js, k2, zoo_functors(zoo), cfg));

  auto const proj = projection_klens<Fin2, Fin2, Fin3>();
  append(out, lens_suite("optics/projection", proj, js, k2, cfg));
  out.push_back(for_all("optics/projection", "k-to-v-to-k", {1}, cfg, [&](auto const&) {
    return klens_eq(js, k2, vlens_to_klens(klens_to_vlens(proj)), proj);
  }));

  auto const nested = product(product(k2, k2), k2);
  auto const composite = vlens_compose(fst_lens<std::pair<Fin2, Fin2>, std::pair<Fin2, Fin2>, Fin2>(),
                                       fst_lens<Fin2, Fin2, Fin2>());
  append(out, lens_suite("optics/fst.fst", vlens_to_klens(composite), nested, k2, cfg));

  auto const lists2 = lists(k2, 2);
  auto const element = element_vpartial<Fin2>(1);
  auto const element_k = vpartial_to_kpartial(element);
  FreePointedFunctor<Fin2, Fin2> const fp(k2, k2);
  append(out, check_coalgebra_laws(
                  "optics/element", fp, lists2, element_k, [](auto const& v) { return freepointed_counit(v); },
                  [](auto const& v) { return freepointed_comult<Fin2>(v); }, cfg));
  append(out, check_linearity_unity("optics/element", element, lists2, k2, pointed_pairs(zoo), cfg));
  append(out, check_same_optic("optics/element", "v-to-k-to-v", element, kpartial_to_vpartial(element_k), lists2, k2,
                               zoo_pointed(zoo), cfg));
  append(out, check_same_optic("optics/fst", "as-partial", as_vpartial(fst), kpartial_to_vpartial(klens_to_kpartial(fst_k)),
                               js, k2, zoo_pointed(zoo), cfg));

  auto const lists3 = lists(k2, 3);
  auto const trav = list_traversal<Fin2>();
  auto const trav_k = vtrav_to_ktrav(trav);
  FunListFunctor<Fin2, Fin2> const fl(k2, k2, 3);
  append(out, check_coalgebra_laws(
                  "optics/list", fl, lists3, trav_k, [](auto const& r) { return funlist_counit(r); },
                  [](auto const& r) { return funlist_comult<Fin2>(r); }, cfg));
  out.push_back(for_all("optics/list", "dimension-is-length", {lists3.size()}, cfg, [&](auto const& i) {
    return trav_k(lists3[i[0]]).dim() == lists3[i[0]].size();
  }));
  append(out, check_linearity_unity("optics/list", trav, lists3, k2, applicative_pairs(zoo), cfg));
  append(out, check_same_optic("optics/list", "v-to-k-to-v", trav, ktrav_to_vtrav(trav_k), lists3, k2,
                               zoo_applicatives(zoo), cfg));
  out.push_back(for_all("optics/list", "k-to-v-to-k", {lists3.size()}, cfg, [&](auto const& i) {
    auto const& j = lists3[i[0]];
    return fl.eq_at(lists3, vtrav_to_ktrav(ktrav_to_vtrav(trav_k))(j), trav_k(j));
  }));
  append(out, check_same_optic("optics/fst", "as-traversal", as_vtraversal(fst), ktrav_to_vtrav(klens_to_ktrav(fst_k)),
                               js, k2, zoo_applicatives(zoo), cfg));
  return out;
}

std::vector<CheckResult> lens_equivalence(CheckConfig const& cfg) {
  auto const k2 = fin<2>();
  auto const k3 = fin<3>();
  std::vector<CheckResult> out;
  // A lawful lens J -> K is an isomorphism J ~ K x C; there are |J|!/|C|! of them.
  append(out, enumerated_klenses("lens-equivalence", k2, k2, 2, cfg));
  append(out, enumerated_klenses("lens-equivalence", k3, k2, 0, cfg));
  append(out, enumerated_klenses("lens-equivalence", k2, k3, 0, cfg));
  return out;
}

}  // namespace polyrep::suites
