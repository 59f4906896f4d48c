#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace polyrep {

inline constexpr std::size_t default_budget = 1'000'000;
inline constexpr std::size_t default_sample_count = 10'000;
inline constexpr std::uint64_t default_seed = 1729;

class BudgetExceeded : public std::length_error {
 public:
  BudgetExceeded(std::string const& what, std::size_t requested, std::size_t budget)
      : std::length_error(what + ": " + (requested == std::numeric_limits<std::size_t>::max()
                                             ? std::string("overflow")
                                             : std::to_string(requested)) +
                          " exceeds budget " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

/// Saturating multiplication; SIZE_MAX stands for "too many".
constexpr std::size_t saturating_mul(std::size_t a, std::size_t b) {
  constexpr auto top = std::numeric_limits<std::size_t>::max();
  if (a == 0 || b == 0) return 0;
  if (a > top / b) return top;
  return a * b;
}

constexpr std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

/// A finite carrier: every inhabitant listed once, with decidable equality.
///
/// Values are shared between copies, so FinTypes are cheap to capture in
/// closures. `index` is the inverse of `operator[]`; carriers built from
/// Fin, products and vectors supply it in O(1), the rest fall back to a
/// linear scan with `eq`.
template <class X>
class FinType {
 public:
  using value_type = X;
  using Equality = std::function<bool(X const&, X const&)>;
  using Indexer = std::function<std::size_t(X const&)>;

  FinType(std::string name, std::vector<X> values, Equality eq, Indexer index = {})
      : data_(std::make_shared<Data>(Data{std::move(name), std::move(values), std::move(eq),
                                          std::move(index)})) {}

  std::size_t size() const noexcept { return data_->values.size(); }
  std::vector<X> const& values() const& noexcept { return data_->values; }
  // A temporary FinType may be the last owner of its values.
  std::vector<X> values() const&& { return data_->values; }
  X const& operator[](std::size_t i) const { return data_->values.at(i); }
  std::string const& name() const noexcept { return data_->name; }

  bool eq(X const& a, X const& b) const { return data_->eq(a, b); }
  bool operator()(X const& a, X const& b) const { return data_->eq(a, b); }

  std::size_t index(X const& x) const {
    if (data_->index) return data_->index(x);
    for (std::size_t i = 0; i < size(); ++i)
      if (data_->eq(data_->values[i], x)) return i;
    throw std::out_of_range("value is not a member of carrier " + name());
  }

  bool contains(X const& x) const {
    for (auto const& v : values())
      if (data_->eq(v, x)) return true;
    return false;
  }

 private:
  struct Data {
    std::string name;
    std::vector<X> values;
    Equality eq;
    Indexer index;
  };
  std::shared_ptr<const Data> data_;
};

template <class X>
FinType<X> from_values(std::string name, std::vector<X> values) {
  return FinType<X>(std::move(name), std::move(values),
                    [](X const& a, X const& b) { return a == b; });
}

template <std::size_t N>
FinType<Fin<N>> fin() {
  std::vector<Fin<N>> vs;
  vs.reserve(N);
  for (std::size_t i = 0; i < N; ++i) vs.push_back(Fin<N>{i});
  return FinType<Fin<N>>(
      "Fin" + std::to_string(N), std::move(vs),
      [](Fin<N> const& a, Fin<N> const& b) { return a == b; },
      [](Fin<N> const& x) {
        if (x.value >= N) throw std::out_of_range("Fin value out of range");
        return x.value;
      });
}

inline FinType<Unit> unit_type() {
  return FinType<Unit>(
      "Unit", {Unit{}}, [](Unit, Unit) { return true; }, [](Unit) { return std::size_t{0}; });
}

inline FinType<Char> char_type(std::u32string const& alphabet) {
  return FinType<Char>("Char", std::vector<Char>(alphabet.begin(), alphabet.end()),
                       [](Char a, Char b) { return a == b; });
}

template <class A, class B>
FinType<std::pair<A, B>> product(FinType<A> const& as, FinType<B> const& bs) {
  std::vector<std::pair<A, B>> vs;
  vs.reserve(saturating_mul(as.size(), bs.size()));
  for (auto const& a : as.values())
    for (auto const& b : bs.values()) vs.emplace_back(a, b);
  return FinType<std::pair<A, B>>(
      "(" + as.name() + "," + bs.name() + ")", std::move(vs),
      [as, bs](std::pair<A, B> const& x, std::pair<A, B> const& y) {
        return as.eq(x.first, y.first) && bs.eq(x.second, y.second);
      },
      [as, bs](std::pair<A, B> const& x) {
        return as.index(x.first) * bs.size() + bs.index(x.second);
      });
}

/// Equality on vectors lifted from an element equality.
template <class A, class EqA>
bool vector_eq(EqA const& eq, std::vector<A> const& x, std::vector<A> const& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!eq(x[i], y[i])) return false;
  return true;
}

/// All vectors of exactly length n, in lexicographic order.
template <class A>
FinType<std::vector<A>> vectors(FinType<A> const& as, std::size_t n, std::size_t budget = default_budget) {
  auto const count = saturating_pow(as.size(), n);
  if (count > budget) throw BudgetExceeded("vectors over " + as.name(), count, budget);
  std::vector<std::vector<A>> vs;
  vs.reserve(count);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<A> v;
    v.reserve(n);
    for (auto d : digits) v.push_back(as[d]);
    vs.push_back(std::move(v));
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < as.size()) break;
      digits[i] = 0;
    }
  }
  return FinType<std::vector<A>>(
      as.name() + "^" + std::to_string(n), std::move(vs),
      [as](std::vector<A> const& x, std::vector<A> const& y) { return vector_eq(as, x, y); },
      [as, n](std::vector<A> const& x) {
        if (x.size() != n) throw DimensionMismatch(n, x.size());
        std::size_t idx = 0;
        for (auto const& a : x) idx = idx * as.size() + as.index(a);
        return idx;
      });
}

/// All vectors of length 0..max_len, shorter first.
template <class A>
FinType<std::vector<A>> lists(FinType<A> const& as, std::size_t max_len, std::size_t budget = default_budget) {
  std::vector<std::vector<A>> vs;
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto layer = vectors(as, n, budget);
    vs.insert(vs.end(), layer.values().begin(), layer.values().end());
    if (vs.size() > budget) throw BudgetExceeded("lists over " + as.name(), vs.size(), budget);
  }
  return FinType<std::vector<A>>(
      "[" + as.name() + "]<=" + std::to_string(max_len), std::move(vs),
      [as](std::vector<A> const& x, std::vector<A> const& y) { return vector_eq(as, x, y); });
}

/// A function between finite carriers, stored as a table indexed by the domain.
template <class X, class Y>
class TabFun {
 public:
  TabFun(FinType<X> domain, std::vector<Y> table) : domain_(std::move(domain)), table_(std::make_shared<std::vector<Y>>(std::move(table))) {
    if (table_->size() != domain_.size()) throw DimensionMismatch(domain_.size(), table_->size());
  }

  Y const& operator()(X const& x) const { return (*table_)[domain_.index(x)]; }
  FinType<X> const& domain() const noexcept { return domain_; }
  std::vector<Y> const& table() const noexcept { return *table_; }

 private:
  FinType<X> domain_;
  std::shared_ptr<const std::vector<Y>> table_;
};

template <class X, class Y, class EqY>
bool tabfun_eq(EqY const& eq, TabFun<X, Y> const& f, TabFun<X, Y> const& g) {
  return vector_eq(eq, f.table(), g.table());
}

/// |cod|^|dom|, saturating.
template <class X, class Y>
std::size_t function_count(FinType<X> const& dom, FinType<Y> const& cod) {
  return saturating_pow(cod.size(), dom.size());
}

/// The idx-th function in lexicographic order of tables (first domain
/// element most significant).
template <class X, class Y>
TabFun<X, Y> function_at(FinType<X> const& dom, FinType<Y> const& cod, std::size_t idx) {
  std::vector<Y> table;
  table.reserve(dom.size());
  std::vector<std::size_t> digits(dom.size(), 0);
  for (std::size_t i = dom.size(); i-- > 0;) {
    digits[i] = idx % cod.size();
    idx /= cod.size();
  }
  for (auto d : digits) table.push_back(cod[d]);
  return TabFun<X, Y>(dom, std::move(table));
}

/// Every function dom -> cod, exactly |cod|^|dom| of them.
template <class X, class Y>
std::vector<TabFun<X, Y>> enumerate_functions(FinType<X> const& dom, FinType<Y> const& cod,
                                              std::size_t budget = default_budget) {
  auto const count = function_count(dom, cod);
  if (count > budget)
    throw BudgetExceeded("functions " + dom.name() + " -> " + cod.name(), count, budget);
  std::vector<TabFun<X, Y>> fs;
  fs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) fs.push_back(function_at(dom, cod, i));
  return fs;
}

template <class X, class Y>
FinType<TabFun<X, Y>> function_type(FinType<X> const& dom, FinType<Y> const& cod,
                                    std::size_t budget = default_budget) {
  return FinType<TabFun<X, Y>>(
      dom.name() + "->" + cod.name(), enumerate_functions(dom, cod, budget),
      [cod](TabFun<X, Y> const& f, TabFun<X, Y> const& g) { return tabfun_eq(cod, f, g); });
}

template <class X, class Y, class Rng>
TabFun<X, Y> random_function(FinType<X> const& dom, FinType<Y> const& cod, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, cod.size() - 1);
  std::vector<Y> table;
  table.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) table.push_back(cod[pick(rng)]);
  return TabFun<X, Y>(dom, std::move(table));
}

/// Pointwise equality of two arbitrary functions over a finite domain.
template <class X, class F, class G, class EqY>
bool extensionally_equal(FinType<X> const& dom, EqY const& eq, F const& f, G const& g) {
  for (auto const& x : dom.values())
    if (!eq(f(x), g(x))) return false;
  return true;
}

}  // namespace polyrep
