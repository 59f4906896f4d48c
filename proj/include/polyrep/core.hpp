#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace polyrep {

/// The one-element type.
struct Unit {
  friend constexpr auto operator<=>(Unit, Unit) = default;
};

/// The empty type. It has no values; `absurd` is its eliminator.
struct Empty {
  Empty() = delete;
};

template <class T>
[[noreturn]] T absurd(Empty const&) {
  std::abort();
}

/// An element of {0, ..., N-1}.
template <std::size_t N>
struct Fin {
  static_assert(N > 0, "Fin<0> has no values; use Empty");
  static constexpr std::size_t cardinality = N;
  std::size_t value = 0;
  friend constexpr auto operator<=>(Fin, Fin) = default;
};

using Fin2 = Fin<2>;
using Fin3 = Fin<3>;

/// Unicode scalar value.
using Char = char32_t;

// Witness categories. A witness advertises what it supports through a
// `category` typedef; refinement is modelled by inheritance of the tags.
struct functor_tag {};
struct pointed_tag : functor_tag {};
struct applicative_tag : pointed_tag {};
struct monad_tag : applicative_tag {};

template <class W>
concept FunctorWitness = std::derived_from<typename W::category, functor_tag>;
template <class W>
concept PointedWitness = std::derived_from<typename W::category, pointed_tag>;
template <class W>
concept ApplicativeWitness = std::derived_from<typename W::category, applicative_tag>;
template <class W>
concept MonadWitness = std::derived_from<typename W::category, monad_tag>;

/// Raised when a function on n-vectors is applied to a vector of another length.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) +
                              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised when a witness needs carrier information it was not given.
class MissingCarrier : public std::logic_error {
 public:
  explicit MissingCarrier(std::string const& witness)
      : std::logic_error(witness + ": witness constructed without parameter carriers") {}
};

inline constexpr auto identity = [](auto const& x) { return x; };

/// Decayed result of calling `Fn` on an `X`.
template <class Fn, class X>
using result_t = std::decay_t<std::invoke_result_t<Fn const&, X const&>>;

}  // namespace polyrep
