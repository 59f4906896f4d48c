#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "fintype.hpp"
#include "funlist.hpp"
#include "optics.hpp"
#include "witnesses.hpp"

namespace polyrep {

// ---------------------------------------------------------------------------
// Traversable instances
//
// A traversable instance T provides
//   template <class X> using apply;                T X
//   traverse<B>(F, f, t)                           F (T B), left to right
//   eq_at(eq, t, u)
//   carrier(FinType<X>, size)                      all T X of size <= size
//   render(T Unit)                                 printable shape

/// Lists, traversed left to right.
struct ListTraversable {
  template <class X>
  using apply = std::vector<X>;

  std::string name() const { return "list"; }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<std::vector<B>> traverse(F const& app, Fn const& f, std::vector<A> const& xs) const {
    return collect<B>(app, f, xs);
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, std::vector<X> const& a, std::vector<X> const& b) const {
    return vector_eq(eqx, a, b);
  }
  template <class X>
  FinType<std::vector<X>> carrier(FinType<X> const& xs, std::size_t size) const {
    return lists(xs, size);
  }
  std::string render(std::vector<Unit> const& shape) const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) s += i ? ",*" : "*";
    return s + "]";
  }
};

/// Vectors of a fixed length n: a container with a single shape of arity n.
struct VecTraversable {
  template <class X>
  using apply = std::vector<X>;

  std::size_t length = 0;

  std::string name() const { return "vec:" + std::to_string(length); }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<std::vector<B>> traverse(F const& app, Fn const& f, std::vector<A> const& xs) const {
    if (xs.size() != length) throw DimensionMismatch(length, xs.size());
    return collect<B>(app, f, xs);
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, std::vector<X> const& a, std::vector<X> const& b) const {
    return vector_eq(eqx, a, b);
  }
  /// `size` is ignored: there is only one shape.
  template <class X>
  FinType<std::vector<X>> carrier(FinType<X> const& xs, std::size_t = 0) const {
    return vectors(xs, length);
  }
  std::string render(std::vector<Unit> const& shape) const { return ListTraversable{}.render(shape); }
};

/// The diagonal pair X x X.
struct PairTraversable {
  template <class X>
  using apply = std::array<X, 2>;

  std::string name() const { return "pair"; }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<std::array<B, 2>> traverse(F const& app, Fn const& f, std::array<A, 2> const& p) const {
    return app.map([](std::pair<B, B> const& q) { return std::array<B, 2>{q.first, q.second}; },
                   app.star(f(p[0]), f(p[1])));
  }
  template <class EqX, class X>
  bool eq_at(EqX const& eqx, std::array<X, 2> const& a, std::array<X, 2> const& b) const {
    return eqx(a[0], b[0]) && eqx(a[1], b[1]);
  }
  template <class X>
  FinType<std::array<X, 2>> carrier(FinType<X> const& xs, std::size_t = 0) const {
    std::vector<std::array<X, 2>> vs;
    for (auto const& x : xs.values())
      for (auto const& y : xs.values()) vs.push_back({x, y});
    return FinType<std::array<X, 2>>("(" + xs.name() + "," + xs.name() + ")", std::move(vs),
                                     [self = *this, xs](auto const& a, auto const& b) { return self.eq_at(xs, a, b); });
  }
  std::string render(std::array<Unit, 2> const&) const { return "(*,*)"; }
};

template <class X>
struct TreeNode;

/// Binary trees with elements at the nodes.
template <class X>
class Tree {
 public:
  Tree() = default;

  static Tree leaf() { return Tree(); }
  static Tree branch(Tree left, X value, Tree right) {
    return Tree(std::make_shared<const TreeNode<X>>(TreeNode<X>{std::move(left), std::move(value), std::move(right)}));
  }

  bool is_leaf() const noexcept { return !root_; }
  TreeNode<X> const& node() const { return *root_; }

  std::size_t size() const { return is_leaf() ? 0 : root_->left.size() + 1 + root_->right.size(); }

 private:
  explicit Tree(std::shared_ptr<const TreeNode<X>> root) : root_(std::move(root)) {}

  std::shared_ptr<const TreeNode<X>> root_;
};

template <class X>
struct TreeNode {
  Tree<X> left;
  X value;
  Tree<X> right;
};

/// In-order traversal: left subtree, node, right subtree.
struct TreeTraversable {
  template <class X>
  using apply = Tree<X>;

  std::string name() const { return "tree"; }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<Tree<B>> traverse(F const& app, Fn const& f, Tree<A> const& t) const {
    if (t.is_leaf()) return app.pure(Tree<B>::leaf());
    auto const& n = t.node();
    auto left_and_value = app.star(traverse<B>(app, f, n.left), f(n.value));
    return app.map(
        [](std::pair<std::pair<Tree<B>, B>, Tree<B>> const& p) {
          return Tree<B>::branch(p.first.first, p.first.second, p.second);
        },
        app.star(left_and_value, traverse<B>(app, f, n.right)));
  }

  template <class EqX, class X>
  bool eq_at(EqX const& eqx, Tree<X> const& a, Tree<X> const& b) const {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
    return eqx(a.node().value, b.node().value) && eq_at(eqx, a.node().left, b.node().left) &&
           eq_at(eqx, a.node().right, b.node().right);
  }

  /// All trees with at most `size` elements, smaller first.
  template <class X>
  FinType<Tree<X>> carrier(FinType<X> const& xs, std::size_t size) const {
    std::vector<std::vector<Tree<X>>> exact{{Tree<X>::leaf()}};
    for (std::size_t n = 1; n <= size; ++n) {
      std::vector<Tree<X>> layer;
      for (std::size_t k = 0; k < n; ++k)
        for (auto const& l : exact[k])
          for (auto const& x : xs.values())
            for (auto const& r : exact[n - 1 - k]) layer.push_back(Tree<X>::branch(l, x, r));
      if (layer.size() > default_budget) throw BudgetExceeded("tree carrier", layer.size(), default_budget);
      exact.push_back(std::move(layer));
    }
    std::vector<Tree<X>> vs;
    for (auto const& layer : exact) vs.insert(vs.end(), layer.begin(), layer.end());
    return FinType<Tree<X>>("Tree(" + xs.name() + ")<=" + std::to_string(size), std::move(vs),
                            [self = *this, xs](auto const& a, auto const& b) { return self.eq_at(xs, a, b); });
  }

  std::string render(Tree<Unit> const& t) const {
    if (t.is_leaf()) return ".";
    return "(" + render(t.node().left) + " * " + render(t.node().right) + ")";
  }
};

inline ListTraversable list_traversable() { return {}; }
inline PairTraversable pair_traversable() { return {}; }
inline VecTraversable vec_traversable(std::size_t n) { return {n}; }
inline TreeTraversable tree_traversable() { return {}; }

// ---------------------------------------------------------------------------
// Traversals and coalgebras

template <class TX>
struct element_of;
template <class X, class Alloc>
struct element_of<std::vector<X, Alloc>> {
  using type = X;
};
template <class X, std::size_t N>
struct element_of<std::array<X, N>> {
  using type = X;
};
template <class X>
struct element_of<Tree<X>> {
  using type = X;
};
template <class TX>
using element_t = typename element_of<TX>::type;

/// t = traverse wrap
template <class B, class T, class TA>
auto coalgebra_from_traverse(T const& traversable, TA const& t) {
  using A = element_t<TA>;
  return traversable.template traverse<B>(FunListFunctor<A, B>{}, [](A const& a) { return funlist_wrap<B>(a); }, t);
}

/// let (n, as, g) = t x in F(g)(collect f as)
template <ApplicativeWitness F, class Coalgebra, class Fn, class X>
auto traverse_from_coalgebra(Coalgebra const& coalgebra, F const& app, Fn const& f, X const& x) {
  return run_funlist(app, f, coalgebra(x));
}

// ---------------------------------------------------------------------------
// Finitary containers

template <class S, class X>
struct ContainerValue {
  S shape;
  std::vector<X> contents;
};

template <class S>
struct FinContainer {
  FinType<S> shapes;
  std::function<std::size_t(S const&)> arity;
};

/// Phi x = let (n, i, g) = t x in (g (*^n), i)
template <class T, class TX>
auto to_container(T const& traversable, TX const& x) {
  using X = element_t<TX>;
  using Shape = typename T::template apply<Unit>;
  auto const r = coalgebra_from_traverse<Unit>(traversable, x);
  return ContainerValue<Shape, X>{r.peek(std::vector<Unit>(r.dim())), r.positions()};
}

/// Psi (s, v) = peek (t s) v. Throws DimensionMismatch if v has the wrong length.
template <class T, class S, class X>
typename T::template apply<X> from_container(T const& traversable, ContainerValue<S, X> const& c) {
  return coalgebra_from_traverse<X>(traversable, c.shape).peek(c.contents);
}

/// The shapes of size <= size with arity read off the coalgebra.
template <class T>
FinContainer<typename T::template apply<Unit>> extract_container(T const& traversable, std::size_t size) {
  using Shape = typename T::template apply<Unit>;
  return {traversable.carrier(unit_type(), size),
          [traversable](Shape const& s) { return coalgebra_from_traverse<Unit>(traversable, s).dim(); }};
}

/// F(\c. (s, c))(collect f xs)
template <class B, ApplicativeWitness F, class Fn, class S, class A>
auto canonical_traverse(F const& app, Fn const& f, ContainerValue<S, A> const& c) {
  return app.map([shape = c.shape](std::vector<B> const& bs) { return ContainerValue<S, B>{shape, bs}; },
                 collect<B>(app, f, c.contents));
}

template <class EqS, class EqX, class S, class X>
bool container_eq(EqS const& eqs, EqX const& eqx, ContainerValue<S, X> const& a, ContainerValue<S, X> const& b) {
  return eqs(a.shape, b.shape) && vector_eq(eqx, a.contents, b.contents);
}

/// Container values over the shapes of `container`, contents drawn from xs.
template <class S, class X>
FinType<ContainerValue<S, X>> container_values(FinContainer<S> const& container, FinType<X> const& xs,
                                               std::size_t budget = default_budget) {
  std::vector<ContainerValue<S, X>> vs;
  for (auto const& s : container.shapes.values())
    for (auto const& v : vectors(xs, container.arity(s), budget).values()) vs.push_back({s, v});
  auto const shapes = container.shapes;
  return FinType<ContainerValue<S, X>>("[[" + shapes.name() + "]](" + xs.name() + ")", std::move(vs),
                                       [shapes, xs](auto const& a, auto const& b) {
                                         return container_eq(shapes, xs, a, b);
                                       });
}

/// A traversable instance as a traversal optic over T A.
template <class A, class T>
auto traversal_of(T traversable) {
  using TA = typename T::template apply<A>;
  return make_vtraversal<TA, TA, A, A>([traversable = std::move(traversable)](auto const& app, auto const& f, TA const& t) {
    return traversable.template traverse<A>(app, f, t);
  });
}

// Mutants used to check the traversable law suites are not vacuous.

/// Rebuilds the list in reverse: breaks unity.
struct ReversingListTraversable : ListTraversable {
  std::string name() const { return "list[reversed-rebuild]"; }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<std::vector<B>> traverse(F const& app, Fn const& f, std::vector<A> const& xs) const {
    return app.map([](std::vector<B> bs) { return std::vector<B>(bs.rbegin(), bs.rend()); }, collect<B>(app, f, xs));
  }
};

/// Runs every effect twice and keeps the first pass: lawful at Identity,
/// breaks linearity once the outer effects feed the inner ones.
struct DuplicatingListTraversable : ListTraversable {
  std::string name() const { return "list[duplicated-effects]"; }

  template <class B, ApplicativeWitness F, class Fn, class A>
  typename F::template apply<std::vector<B>> traverse(F const& app, Fn const& f, std::vector<A> const& xs) const {
    return app.map([](auto const& p) { return p.first; }, app.star(collect<B>(app, f, xs), collect<B>(app, f, xs)));
  }
};

}  // namespace polyrep
