#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "free.hpp"

// The Teletype effect: programs are Church capabilities over a TTOp record,
// run by four interpreters (pure state threading, script replay, console,
// console with logging) or through the free monad on the Teletype signature.

namespace polyrep {

template <class M>
struct TTOp {
  typename M::template apply<Char> get_char;
  std::function<typename M::template apply<Unit>(Char)> put_char;
};

// ---------------------------------------------------------------------------
// Programs

template <MonadWitness M, class Ops>
typename M::template apply<Unit> echo_loop(M const& m, Ops const& ops, std::size_t n) {
  if (n == 0) return m.pure(Unit{});
  return m.bind(ops.get_char, [m, ops, n](Char c) {
    return m.bind(ops.put_char(c), [m, ops, n](Unit) { return echo_loop(m, ops, n - 1); });
  });
}

/// Reads n characters, echoing each one as it is read.
inline auto echo_n(std::size_t n) {
  return church<Unit>([n](auto const& m, auto const& ops) { return echo_loop(m, ops, n); });
}

/// Does nothing.
inline auto teletype_identity() {
  return church<Unit>([](auto const& m, auto const&) { return m.pure(Unit{}); });
}

template <MonadWitness M, class Ops>
typename M::template apply<std::size_t> echo_until_loop(M const& m, Ops const& ops, Char stop, std::size_t left,
                                                        std::size_t echoed) {
  if (left == 0) return m.pure(echoed);
  return m.bind(ops.get_char, [=](Char c) {
    if (c == stop) return m.pure(echoed);
    return m.bind(ops.put_char(c), [=](Unit) { return echo_until_loop(m, ops, stop, left - 1, echoed + 1); });
  });
}

/// Echoes until `stop` is read or `max_reads` characters have been echoed;
/// returns the number echoed. The stop character is consumed, not echoed.
inline auto echo_until(Char stop, std::size_t max_reads) {
  return church<std::size_t>(
      [stop, max_reads](auto const& m, auto const& ops) { return echo_until_loop(m, ops, stop, max_reads, 0); });
}

// ---------------------------------------------------------------------------
// Events, scripts and logs

struct TTEvent {
  enum class Kind { in, out };
  Kind kind;
  Char c;
  friend bool operator==(TTEvent const&, TTEvent const&) = default;
};

class ScriptExhausted : public std::runtime_error {
 public:
  explicit ScriptExhausted(std::size_t position)
      : std::runtime_error("script exhausted at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EndOfInput : public std::runtime_error {
 public:
  EndOfInput() : std::runtime_error("end of input") {}
};

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, std::string const& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::string encode_utf8(Char c) {
  std::string s;
  auto const u = static_cast<std::uint32_t>(c);
  if (u > 0x10FFFF || (u >= 0xD800 && u <= 0xDFFF)) throw std::invalid_argument("not a Unicode scalar value");
  if (u < 0x80) {
    s += static_cast<char>(u);
  } else if (u < 0x800) {
    s += static_cast<char>(0xC0 | (u >> 6));
    s += static_cast<char>(0x80 | (u & 0x3F));
  } else if (u < 0x10000) {
    s += static_cast<char>(0xE0 | (u >> 12));
    s += static_cast<char>(0x80 | ((u >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (u & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (u >> 18));
    s += static_cast<char>(0x80 | ((u >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((u >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (u & 0x3F));
  }
  return s;
}

inline std::string encode_utf8(std::u32string_view text) {
  std::string s;
  for (Char c : text) s += encode_utf8(c);
  return s;
}

/// Reads one scalar value from `next()`, which yields bytes or -1 at the end.
/// Returns nullopt at a clean end of input; throws on malformed UTF-8.
template <class Next>
std::optional<Char> decode_utf8_char(Next&& next) {
  int const b0 = next();
  if (b0 < 0) return std::nullopt;
  auto const lead = static_cast<std::uint32_t>(b0);
  std::size_t extra = 0;
  std::uint32_t u = 0;
  if (lead < 0x80) return static_cast<Char>(lead);
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    u = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    u = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    u = lead & 0x07;
  } else {
    throw std::invalid_argument("malformed UTF-8");
  }
  for (std::size_t i = 0; i < extra; ++i) {
    int const b = next();
    if (b < 0 || (b & 0xC0) != 0x80) throw std::invalid_argument("malformed UTF-8");
    u = (u << 6) | (static_cast<std::uint32_t>(b) & 0x3F);
  }
  static constexpr std::uint32_t smallest[] = {0, 0x80, 0x800, 0x10000};
  if (u < smallest[extra] || u > 0x10FFFF || (u >= 0xD800 && u <= 0xDFFF))
    throw std::invalid_argument("malformed UTF-8");
  return static_cast<Char>(u);
}

inline std::u32string decode_utf8(std::string_view bytes) {
  std::size_t i = 0;
  auto next = [&]() -> int { return i < bytes.size() ? static_cast<unsigned char>(bytes[i++]) : -1; };
  std::u32string out;
  while (auto c = decode_utf8_char(next)) out += *c;
  return out;
}

/// One character per record. Newline, carriage return, tab and backslash
/// are written as \n, \r, \t and \\; everything else is literal UTF-8.
inline std::string escape_char(Char c) {
  switch (c) {
    case U'\n': return "\\n";
    case U'\r': return "\\r";
    case U'\t': return "\\t";
    case U'\\': return "\\\\";
    default: return encode_utf8(c);
  }
}

inline Char unescape_char(std::string_view field, std::size_t line) {
  if (field == "\\n") return U'\n';
  if (field == "\\r") return U'\r';
  if (field == "\\t") return U'\t';
  if (field == "\\\\") return U'\\';
  std::u32string decoded;
  try {
    decoded = decode_utf8(field);
  } catch (std::invalid_argument const& e) {
    throw FormatError(line, e.what());
  }
  if (decoded.size() != 1 || decoded[0] == U'\\')
    throw FormatError(line, "expected exactly one character, got \"" + std::string(field) + "\"");
  return decoded[0];
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto const nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

/// A script is one character per line; empty lines are skipped.
inline std::u32string parse_script(std::string_view text) {
  std::u32string out;
  auto const lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].empty()) out += unescape_char(lines[i], i + 1);
  return out;
}

inline std::string format_script(std::u32string_view chars) {
  std::string s;
  for (Char c : chars) s += escape_char(c) + "\n";
  return s;
}

inline std::string format_event(TTEvent const& e) {
  return (e.kind == TTEvent::Kind::in ? "IN " : "OUT ") + escape_char(e.c);
}

inline std::string format_log(std::vector<TTEvent> const& log) {
  std::string s;
  for (auto const& e : log) s += format_event(e) + "\n";
  return s;
}

inline std::vector<TTEvent> parse_log(std::string_view text) {
  std::vector<TTEvent> out;
  auto const lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (line.empty()) continue;
    if (line.substr(0, 3) == "IN ") {
      out.push_back({TTEvent::Kind::in, unescape_char(line.substr(3), i + 1)});
    } else if (line.substr(0, 4) == "OUT ") {
      out.push_back({TTEvent::Kind::out, unescape_char(line.substr(4), i + 1)});
    } else {
      throw FormatError(i + 1, "expected IN or OUT record");
    }
  }
  return out;
}

/// The input a logged run consumed, in order.
inline std::u32string script_from_log(std::vector<TTEvent> const& log) {
  std::u32string s;
  for (auto const& e : log)
    if (e.kind == TTEvent::Kind::in) s += e.c;
  return s;
}

inline std::u32string output_of(std::vector<TTEvent> const& log) {
  std::u32string s;
  for (auto const& e : log)
    if (e.kind == TTEvent::Kind::out) s += e.c;
  return s;
}

// ---------------------------------------------------------------------------
// Pure interpreter: state threading over the remaining input

struct TTState {
  std::u32string input;
  std::size_t consumed = 0;
  std::vector<TTEvent> log;
  bool exhausted = false;
};

inline TTState initial_state(std::u32string input) {
  TTState s;
  s.input = std::move(input);
  return s;
}

template <class X>
struct TTStep {
  using value_type = X;
  std::function<std::pair<std::optional<X>, TTState>(TTState)> run;
};

/// State over TTState with failure on exhausted input.
struct PureTeletype {
  using category = monad_tag;
  template <class X>
  using apply = TTStep<X>;

  std::string name() const { return "PureTeletype"; }

  template <class X>
  TTStep<X> pure(X const& x) const {
    return {[x](TTState s) { return std::pair<std::optional<X>, TTState>{x, std::move(s)}; }};
  }
  template <class X, class K>
  result_t<K, X> bind(TTStep<X> const& m, K const& k) const {
    using Y = typename result_t<K, X>::value_type;
    return {[run = m.run, k](TTState s) {
      auto [x, s1] = run(std::move(s));
      if (!x) return std::pair<std::optional<Y>, TTState>{std::nullopt, std::move(s1)};
      return k(*x).run(std::move(s1));
    }};
  }
  template <class H, class X>
  TTStep<result_t<H, X>> map(H const& h, TTStep<X> const& m) const {
    return bind(m, [this, h](X const& x) { return pure(h(x)); });
  }
  template <class X, class Y>
  TTStep<std::pair<X, Y>> star(TTStep<X> const& a, TTStep<Y> const& b) const {
    return bind(a, [this, b](X const& x) { return map([x](Y const& y) { return std::pair<X, Y>{x, y}; }, b); });
  }

  TTStep<Char> get_char() const {
    return {[](TTState s) {
      if (s.consumed >= s.input.size()) {
        s.exhausted = true;
        return std::pair<std::optional<Char>, TTState>{std::nullopt, std::move(s)};
      }
      Char const c = s.input[s.consumed++];
      s.log.push_back({TTEvent::Kind::in, c});
      return std::pair<std::optional<Char>, TTState>{c, std::move(s)};
    }};
  }
  TTStep<Unit> put_char(Char c) const {
    return {[c](TTState s) {
      s.log.push_back({TTEvent::Kind::out, c});
      return std::pair<std::optional<Unit>, TTState>{Unit{}, std::move(s)};
    }};
  }
  TTOp<PureTeletype> ops() const {
    return {get_char(), [self = *this](Char c) { return self.put_char(c); }};
  }
};

template <class X>
struct PureRun {
  std::optional<X> result;  // empty when the input ran out
  std::u32string output;
  std::u32string leftover;
  std::vector<TTEvent> log;
  std::optional<std::size_t> exhausted_at;
};

template <class X, class Fn>
PureRun<X> run_pure(ChurchOp<X, Fn> const& program, std::u32string input) {
  PureTeletype const m;
  auto [result, s] = program.run(m, m.ops()).run(initial_state(std::move(input)));
  PureRun<X> out{std::move(result), output_of(s.log), s.input.substr(s.consumed), std::move(s.log), std::nullopt};
  if (s.exhausted) out.exhausted_at = s.consumed;
  return out;
}

template <class X>
struct ReplayRun {
  X result;
  std::vector<TTEvent> log;
};

/// Feeds the script to the program; throws ScriptExhausted(position) when
/// it asks for more characters than the script holds.
template <class X, class Fn>
ReplayRun<X> run_replay(ChurchOp<X, Fn> const& program, std::u32string const& script) {
  auto r = run_pure(program, script);
  if (!r.result) throw ScriptExhausted(*r.exhausted_at);
  return {std::move(*r.result), std::move(r.log)};
}

// ---------------------------------------------------------------------------
// Console interpreters

template <class X>
struct IO {
  std::function<X()> run;
};

struct IOMonad {
  using category = monad_tag;
  template <class X>
  using apply = IO<X>;

  std::string name() const { return "IO"; }

  template <class X>
  IO<X> pure(X const& x) const {
    return {[x] { return x; }};
  }
  template <class X, class K>
  result_t<K, X> bind(IO<X> const& m, K const& k) const {
    return {[run = m.run, k] { return k(run()).run(); }};
  }
  template <class H, class X>
  IO<result_t<H, X>> map(H const& h, IO<X> const& m) const {
    return {[run = m.run, h] { return h(run()); }};
  }
  template <class X, class Y>
  IO<std::pair<X, Y>> star(IO<X> const& a, IO<Y> const& b) const {
    return {[ra = a.run, rb = b.run] {
      X x = ra();
      return std::pair<X, Y>{std::move(x), rb()};
    }};
  }
};

/// getChar and putChar on a pair of byte streams, decoding and encoding
/// UTF-8. `on_event`, when set, sees every operation after it happens.
inline TTOp<IOMonad> console_ops(std::istream& in, std::ostream& out,
                                 std::function<void(TTEvent const&)> on_event = {}) {
  IO<Char> get{[&in, on_event] {
    auto next = [&in]() -> int {
      auto const b = in.get();
      return b == std::char_traits<char>::eof() ? -1 : b;
    };
    auto const c = decode_utf8_char(next);
    if (!c) throw EndOfInput();
    if (on_event) on_event({TTEvent::Kind::in, *c});
    return *c;
  }};
  auto put = [&out, on_event](Char c) {
    return IO<Unit>{[&out, on_event, c] {
      out << encode_utf8(c) << std::flush;
      if (on_event) on_event({TTEvent::Kind::out, c});
      return Unit{};
    }};
  };
  return {std::move(get), std::move(put)};
}

/// Runs the program against real streams. Throws EndOfInput if the input
/// ends while the program still wants to read.
template <class X, class Fn>
X run_console(ChurchOp<X, Fn> const& program, std::istream& in, std::ostream& out) {
  return program.run(IOMonad{}, console_ops(in, out)).run();
}

template <class X>
struct LoggedRun {
  std::optional<X> result;  // empty if the input ended early
  std::vector<TTEvent> log;
};

/// The console interpreter with every operation recorded. The log is kept
/// even if the input ends early.
template <class X, class Fn>
LoggedRun<X> run_logging(ChurchOp<X, Fn> const& program, std::istream& in, std::ostream& out) {
  LoggedRun<X> r;
  auto ops = console_ops(in, out, [&r](TTEvent const& e) { r.log.push_back(e); });
  try {
    r.result = program.run(IOMonad{}, ops).run();
  } catch (EndOfInput const&) {
  }
  return r;
}

// ---------------------------------------------------------------------------
// The free monad on the Teletype signature

template <class X>
struct TTGet {
  std::function<X(Char const&)> next;
};

template <class X>
struct TTPut {
  Char c;
  X next;
};

template <class X>
using TTNode = std::variant<TTGet<X>, TTPut<X>>;

struct TeletypeSig {
  using category = functor_tag;
  template <class X>
  using apply = TTNode<X>;

  std::string name() const { return "Teletype"; }

  template <class H, class X>
  TTNode<result_t<H, X>> map(H const& h, TTNode<X> const& node) const {
    using Y = result_t<H, X>;
    if (auto const* g = std::get_if<TTGet<X>>(&node))
      return TTGet<Y>{[h, next = g->next](Char const& c) { return h(next(c)); }};
    auto const& p = std::get<TTPut<X>>(node);
    return TTPut<Y>{p.c, h(p.next)};
  }
};

using TeletypeFree = FreeMonad<TeletypeSig>;

inline TTOp<TeletypeFree> free_teletype_ops() {
  using G = Free<TeletypeSig, Char>;
  using P = Free<TeletypeSig, Unit>;
  return {G::branch(TTGet<G>{[](Char const& c) { return G::unit(c); }}),
          [](Char c) { return P::branch(TTPut<P>{c, P::unit(Unit{})}); }};
}

/// Runs the capability at the free monad: the program as a tree of operations.
template <class X, class Fn>
Free<TeletypeSig, X> teletype_tree(ChurchOp<X, Fn> const& program) {
  return program.run(TeletypeFree{}, free_teletype_ops());
}

/// Sends each node to the monad's operations.
template <MonadWitness M>
auto teletype_handler(M const& m, TTOp<M> const& ops) {
  return [m, ops]<class MX>(TTNode<MX> const& node) -> typename M::template apply<MX> {
    if (auto const* g = std::get_if<TTGet<MX>>(&node)) return m.map(g->next, ops.get_char);
    auto const& p = std::get<TTPut<MX>>(node);
    return m.map([next = p.next](Unit) { return next; }, ops.put_char(p.c));
  };
}

/// Builds the operation tree, then folds it into M.
template <MonadWitness M, class X, class Fn>
typename M::template apply<X> run_via_free(ChurchOp<X, Fn> const& program, M const& m, TTOp<M> const& ops) {
  return interpret(teletype_tree(program), m, teletype_handler(m, ops), TeletypeSig{});
}

/// run_pure, but through the operation tree.
template <class X, class Fn>
PureRun<X> run_pure_via_free(ChurchOp<X, Fn> const& program, std::u32string input) {
  PureTeletype const m;
  auto [result, s] = run_via_free(program, m, m.ops()).run(initial_state(std::move(input)));
  PureRun<X> out{std::move(result), output_of(s.log), s.input.substr(s.consumed), std::move(s.log), std::nullopt};
  if (s.exhausted) out.exhausted_at = s.consumed;
  return out;
}

}  // namespace polyrep
